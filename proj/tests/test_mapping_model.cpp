#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhmap/error.hpp"
#include "rhmap/mapping_model.hpp"

using namespace rhmap;

namespace {

using Words = std::vector<std::pair<Rational, std::vector<std::string>>>;

// Polynomial in the short names of a three-point model.
struct Short {
  const MappingModel& M;
  std::map<std::string, std::string> full;  // alias -> name

  explicit Short(const MappingModel& model) : M(model) {
    for (const auto& [name, alias] : short_names(M)) full[alias] = name;
  }
  Polynomial poly(const Words& words) const {
    Words w = words;
    for (auto& [c, names] : w)
      for (auto& n : names) n = full.at(n);
    return Polynomial::from_words(M.generators(), w);
  }
  const Polynomial& d(const std::string& alias) const { return M.cdga().d(full.at(alias)); }
  int degree(const std::string& alias) const { return M.generators().degree(M.generators().index_of(full.at(alias))); }
};

using Table = std::vector<std::pair<int, std::vector<std::string>>>;

Table short_table(const MappingModel& M) {
  auto alias = short_names(M);
  Table out;
  for (auto [deg, names] : degree_table(M)) {
    for (auto& n : names) n = alias.at(n);
    std::sort(names.begin(), names.end());
    out.emplace_back(deg, names);
  }
  return out;
}

}  // namespace

TEST_CASE("tensor names") {
  CHECK(tensor_name("y", "a12.23") == "y_a12.23");
  CHECK(tensor_name("x", "1") == "x_1");
}

TEST_CASE("three-point free model: differential") {
  for (int m : {2, 3, 4, 5})
    for (int n : {2, 4, 6}) {
      CAPTURE(m);
      CAPTURE(n);
      const Rational s = m % 2 ? 1 : -1;  // (-1)^{m+1}
      auto M = build_sphere_mapping_model(m, 3, n, false);
      Short S(M);
      REQUIRE(S.full.size() == 12);
      for (std::string c : {"x", "p1", "p2", "p3", "r1", "r2"}) CHECK(S.d(c).is_zero());
      CHECK(S.d("y") == S.poly({{1, {"x", "x"}}}));
      for (std::string i : {"1", "2", "3"}) CHECK(S.d("q" + i) == S.poly({{2, {"x", "p" + i}}}));
      // Leading term from 1⊗β + β⊗1, quadratic part from the reduced coproduct.
      CHECK(S.d("s1") == S.poly({{2, {"x", "r1"}}, {2 * s, {"p1", "p3"}}, {2 * s, {"p1", "p2"}}}));
      CHECK(S.d("s2") == S.poly({{2, {"x", "r2"}}, {2 * s, {"p2", "p3"}}, {-2 * s, {"p1", "p2"}}}));
    }
}

TEST_CASE("odd target: quadratic parts cancel") {
  // For n odd the symmetric pairs cancel and only the x⊗1 terms survive.
  for (int m : {2, 3}) {
    auto M = build_sphere_mapping_model(m, 3, 3, false);
    for (const auto& g : M.generators().all()) CHECK(M.cdga().d(g.name).is_zero());
    CHECK(M.generators().size() == 6);
  }
}

TEST_CASE("three-point pointed model") {
  for (int m : {2, 3, 4}) {
    CAPTURE(m);
    const Rational s = m % 2 ? 1 : -1;
    auto M = build_sphere_mapping_model(m, 3, 2, true);
    CHECK(M.pointed());
    Short S(M);
    REQUIRE(S.full.size() == 10);
    CHECK(S.full.count("x") == 0);
    CHECK(S.full.count("y") == 0);
    for (std::string c : {"p1", "p2", "p3", "q1", "q2", "q3", "r1", "r2"}) CHECK(S.d(c).is_zero());
    CHECK(S.d("s1") == S.poly({{2 * s, {"p1", "p3"}}, {2 * s, {"p1", "p2"}}}));
    CHECK(S.d("s2") == S.poly({{2 * s, {"p2", "p3"}}, {-2 * s, {"p1", "p2"}}}));
  }
}

TEST_CASE("degree tables for n = 2") {
  CHECK(short_table(build_sphere_mapping_model(2, 3, 2, false)) ==
        Table{{3, {"y"}}, {2, {"q1", "q2", "q3", "x"}}, {1, {"p1", "p2", "p3", "s1", "s2"}}, {0, {"r1", "r2"}}});
  CHECK(short_table(build_sphere_mapping_model(3, 3, 2, false)) ==
        Table{{3, {"y"}}, {2, {"x"}}, {1, {"q1", "q2", "q3"}}, {0, {"p1", "p2", "p3"}}, {-1, {"s1", "s2"}},
              {-2, {"r1", "r2"}}});
  CHECK(short_table(build_sphere_mapping_model(4, 3, 2, false)) ==
        Table{{3, {"y"}}, {2, {"x"}}, {0, {"q1", "q2", "q3"}}, {-1, {"p1", "p2", "p3"}}, {-3, {"s1", "s2"}},
              {-4, {"r1", "r2"}}});
  for (int m = 5; m <= 8; ++m)
    CHECK(short_table(build_sphere_mapping_model(m, 3, 2, false)) ==
          Table{{3, {"y"}}, {2, {"x"}}, {4 - m, {"q1", "q2", "q3"}}, {3 - m, {"p1", "p2", "p3"}},
                {5 - 2 * m, {"s1", "s2"}}, {4 - 2 * m, {"r1", "r2"}}});
}

TEST_CASE("generator degrees: |v⊗β| = |v| + |β|") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 6; ++n) {
      auto M = build_sphere_mapping_model(m, 3, n, false);
      Short S(M);
      CHECK(S.degree("x") == n);
      if (n % 2 == 0) {
        CHECK(S.degree("y") == 2 * n - 1);
        CHECK(S.degree("q2") == 2 * n - m);
        CHECK(S.degree("s1") == 2 * n - 2 * m + 1);
      }
      CHECK(S.degree("p3") == n - m + 1);
      CHECK(S.degree("r2") == n - 2 * m + 2);
    }
  auto M = build_sphere_mapping_model(3, 4, 2, false);
  for (std::size_t g = 0; g < M.generators().size(); ++g) {
    const auto& p = M.provenance(static_cast<int>(g));
    const int v = p.v == "x" ? 2 : 3;
    const int beta = p.beta == "1" ? 0 : -2 * static_cast<int>(std::count(p.beta.begin(), p.beta.end(), 'a') +
                                                              std::count(p.beta.begin(), p.beta.end(), '.'));
    CHECK(M.generators()[g].degree == v + beta);
  }
  // 2 * (1 + 6 + 11 + 6)
  CHECK(M.generators().size() == 48);
  CHECK(short_names(M).empty());
}

TEST_CASE("d squared vanishes on the whole grid") {
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 4; ++k)
      for (int n = 1; n <= 6; ++n)
        for (bool pointed : {false, true}) {
          auto M = build_sphere_mapping_model(m, k, n, pointed);
          CHECK_MESSAGE(check_d_squared(M.cdga()).pass(), m << " " << k << " " << n << " " << pointed);
        }
}

TEST_CASE("two points: the sphere special case") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (bool pointed : {false, true}) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(pointed);
        auto A = build_sphere_mapping_model(m, 2, n, pointed);
        auto B = build_mapping_model(sphere_model(n), sphere_cohomology(m - 1), pointed);
        REQUIRE(A.generators().size() == B.generators().size());
        for (std::size_t g = 0; g < A.generators().size(); ++g) {
          const auto& pa = A.provenance(static_cast<int>(g));
          const int h = B.generator(pa.v, pa.beta == "a12" ? "s" : pa.beta);
          CHECK(A.generators()[g].degree == B.generators().degree(h));
          CHECK(to_string(A.generators(), A.cdga().d(static_cast<int>(g))) ==
                [&] {
                  std::string t = to_string(B.generators(), B.cdga().d(h));
                  for (auto pos = t.find("_s"); pos != std::string::npos; pos = t.find("_s", pos))
                    t.replace(pos, 2, "_a12");
                  return t;
                }());
        }
      }
}

TEST_CASE("target validation") {
  Cdga bad(std::vector<Generator>{{"x", 2}, {"y", 2}}, {{"y", {{1, {}}}}});
  CHECK_THROWS_AS(build_mapping_model(bad, sphere_cohomology(2), false), Error);
}
