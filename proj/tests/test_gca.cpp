#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rhmap/error.hpp"
#include "rhmap/gca.hpp"
#include "rhmap/mapping_model.hpp"

using namespace rhmap;

namespace {

GeneratorSet odd_pair() { return GeneratorSet({{"a1", 1}, {"b1", 1}, {"x", 2}, {"p1", 1}}); }

Polynomial term(const GeneratorSet& g, const Rational& c, std::vector<std::string> names) {
  return Polynomial::from_words(g, {{c, std::move(names)}});
}

}  // namespace

TEST_CASE("rationals are exact and canonical") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("10")) == "10");
  CHECK(to_string(parse_rational("1/3") + parse_rational("1/6")) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("normalize_monomial: Koszul signs and odd squares") {
  auto g = odd_pair();
  auto ba = normalize_monomial(g, std::vector<std::string>{"b1", "a1"});
  CHECK(ba.sign == -1);
  CHECK(ba.monomial == Monomial{g.index_of("a1"), g.index_of("b1")});

  auto xx = normalize_monomial(g, std::vector<std::string>{"x", "x"});
  CHECK(xx.sign == 1);
  CHECK(xx.monomial.size() == 2);

  CHECK(normalize_monomial(g, std::vector<std::string>{"p1", "p1"}).is_zero());
  CHECK_THROWS_AS(normalize_monomial(g, std::vector<std::string>{"nope"}), Error);
}

TEST_CASE("normalize_monomial is order independent and idempotent") {
  auto g = odd_pair();
  std::vector<std::string> w = {"p1", "x", "b1", "a1"};
  // p1 x b1 a1 -> a1 b1 p1 x: three odd-odd transpositions among p1,b1,a1.
  auto ref = normalize_monomial(g, w);
  CHECK(ref.sign == -1);
  std::sort(w.begin(), w.end());
  do {
    auto s = normalize_monomial(g, w);
    // permutation sign restricted to odd factors
    std::vector<std::string> odd;
    for (auto& n : w)
      if (n != "x") odd.push_back(n);
    int inv = 0;
    for (std::size_t i = 0; i < odd.size(); ++i)
      for (std::size_t j = i + 1; j < odd.size(); ++j) inv += odd[i] > odd[j];
    CHECK(s.monomial == ref.monomial);
    CHECK(s.sign == (inv % 2 ? -1 : 1));
    auto again = normalize_monomial(g, s.monomial);
    CHECK(again.sign == 1);
    CHECK(again.monomial == s.monomial);
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("multiply: bilinear and graded commutative") {
  GeneratorSet g({{"x", 2}, {"y", 3}, {"p1", 1}, {"p2", 1}});
  auto x = Polynomial::generator(g.index_of("x"));
  CHECK(multiply(g, x, x) == term(g, 1, {"x", "x"}));
  auto p1 = Polynomial::generator(g.index_of("p1")), p2 = Polynomial::generator(g.index_of("p2"));
  CHECK(multiply(g, p1, p2) == -multiply(g, p2, p1));
  CHECK(multiply(g, p1, p1).is_zero());
  auto y = Polynomial::generator(g.index_of("y"));
  CHECK(multiply(g, Rational(2) * x, Rational(3) * y) == term(g, 6, {"x", "y"}));
}

TEST_CASE("apply_differential on the even sphere") {
  auto S = sphere_model(2);
  const auto& g = S.generators();
  auto y = Polynomial::generator(g.index_of("y"));
  auto x = Polynomial::generator(g.index_of("x"));
  CHECK(apply_differential(S, y) == term(g, 1, {"x", "x"}));
  CHECK(apply_differential(S, multiply(g, x, x)).is_zero());
  CHECK(multiply(g, y, y).is_zero());
  // d(xy) = x * x^2 (x even)
  CHECK(apply_differential(S, multiply(g, x, y)) == term(g, 1, {"x", "x", "x"}));
}

TEST_CASE("sphere_model") {
  auto s2 = sphere_model(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2.generators().degree(s2.generators().index_of("x")) == 2);
  CHECK(s2.generators().degree(s2.generators().index_of("y")) == 3);
  auto s3 = sphere_model(3);
  REQUIRE(s3.size() == 1);
  CHECK(s3.generators()[0].degree == 3);
  CHECK(s3.d(0).is_zero());
  auto s4 = sphere_model(4);
  CHECK(s4.generators().degree(s4.generators().index_of("y")) == 7);
  CHECK(s4.d("y") == term(s4.generators(), 1, {"x", "x"}));
  CHECK_THROWS_AS(sphere_model(0), Error);
  CHECK_THROWS_AS(sphere_model(-2), Error);
}

TEST_CASE("check_d_squared") {
  CHECK(check_d_squared(sphere_model(2)).pass());
  CHECK(check_d_squared(build_sphere_mapping_model(3, 3, 2, false).cdga()).pass());

  // dy = x^2 + x is not homogeneous of degree |y| + 1.
  Cdga bad(std::vector<Generator>{{"x", 2}, {"y", 3}}, {{"y", {{1, {"x", "x"}}, {1, {"x"}}}}});
  auto report = check_d_squared(bad);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].generator == "y");
  CHECK(report.failures[0].reason == "degree");

  // d(b) = a, d(c) = b: d^2(c) = a != 0.
  Cdga notd2(std::vector<Generator>{{"a", 3}, {"b", 2}, {"c", 1}}, {{"b", {{1, {"a"}}}}, {"c", {{1, {"b"}}}}});
  auto r2 = check_d_squared(notd2);
  REQUIRE(r2.failures.size() == 1);
  CHECK(r2.failures[0].generator == "c");
  CHECK(r2.failures[0].reason == "d-squared");
}

TEST_CASE("Leibniz, d^2 and commutativity on random polynomials") {
  std::mt19937 rng(12345);
  for (auto [m, k, n, pointed] : std::vector<std::tuple<int, int, int, bool>>{
           {2, 3, 2, false}, {3, 3, 2, true}, {4, 3, 2, false}, {2, 4, 2, false}, {3, 4, 3, false}}) {
    auto M = build_sphere_mapping_model(m, k, n, pointed);
    const auto& g = M.generators();
    std::uniform_int_distribution<int> gen(0, static_cast<int>(g.size()) - 1), coef(-4, 4), len(1, 3);
    auto random_mono = [&] {
      std::vector<int> f;
      for (int i = len(rng); i > 0; --i) f.push_back(gen(rng));
      auto s = normalize_monomial(g, f);
      Polynomial p;
      if (!s.is_zero()) p.add_term(s.monomial, Rational(coef(rng)) * s.sign);
      return p;
    };
    for (int t = 0; t < 100; ++t) {
      auto p = random_mono(), q = random_mono();
      auto q2 = random_mono();
      CHECK(apply_differential(M.cdga(), apply_differential(M.cdga(), q + q2)).is_zero());
      if (p.is_zero() || q.is_zero()) continue;
      int dp = *p.degree(g), dq = *q.degree(g);
      auto pq = multiply(g, p, q);
      auto lhs = apply_differential(M.cdga(), pq);
      auto rhs = multiply(g, apply_differential(M.cdga(), p), q) +
                 Rational(dp % 2 ? -1 : 1) * multiply(g, p, apply_differential(M.cdga(), q));
      CHECK(lhs == rhs);
      CHECK(pq == Rational((dp * dq) % 2 ? -1 : 1) * multiply(g, q, p));
    }
  }
}

TEST_CASE("substitute") {
  auto S = sphere_model(2);
  const auto& g = S.generators();
  // x -> 2x, y -> 4y preserves dy = x^2.
  std::vector<Polynomial> images(2);
  images[static_cast<std::size_t>(g.index_of("x"))] = Polynomial::generator(g.index_of("x"), 2);
  images[static_cast<std::size_t>(g.index_of("y"))] = Polynomial::generator(g.index_of("y"), 4);
  CHECK(substitute(g, images, term(g, 1, {"x", "x", "y"})) == term(g, 16, {"x", "x", "y"}));
  CHECK(substitute(g, images, Polynomial::constant(3)) == Polynomial::constant(3));
}

TEST_CASE("cohomology_dimension") {
  auto S = sphere_model(2);
  // H*(S^2): degrees 0, 2 only.
  CHECK(cohomology_dimension(S, 0) == 1);
  CHECK(cohomology_dimension(S, 1) == 0);
  CHECK(cohomology_dimension(S, 2) == 1);
  CHECK(cohomology_dimension(S, 3) == 0);
  CHECK(cohomology_dimension(S, 4) == 0);
  CHECK(cohomology_dimension(S, 5) == 0);

  Cdga he(std::vector<Generator>{{"x", 1}, {"y", 1}, {"t", 1}}, {{"t", {{1, {"x", "y"}}}}});
  // Heisenberg nilmanifold: Betti numbers 1, 2, 2, 1.
  CHECK(cohomology_dimension(he, 1) == 2);
  CHECK(cohomology_dimension(he, 2) == 2);
  CHECK(cohomology_dimension(he, 3) == 1);
  CHECK(cohomology_dimension(he, 4) == 0);
}
