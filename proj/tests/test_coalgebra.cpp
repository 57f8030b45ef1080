#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhmap/coalgebra.hpp"
#include "rhmap/error.hpp"

using namespace rhmap;

namespace {

using Terms = std::map<std::pair<std::string, std::string>, Rational>;

Terms coproduct_of(const GradedCoalgebra& C, const std::string& name) {
  Terms out;
  for (const auto& t : C.coproduct(C.index_of(name)))
    out[{C.element(t.left).name, C.element(t.right).name}] += t.coeff;
  return out;
}

}  // namespace

TEST_CASE("three-point coproducts, both parities") {
  for (int m : {2, 3, 4, 5}) {
    CAPTURE(m);
    const Rational s = m % 2 ? 1 : -1;  // (-1)^{m+1}
    auto H = build_cohomology(m, 3);
    auto C = dualize(H.algebra(), false);
    CHECK(coproduct_of(C, "1") == Terms{{{"1", "1"}, 1}});
    for (std::string a : {"a12", "a13", "a23"})
      CHECK(coproduct_of(C, a) == Terms{{{"1", a}, 1}, {{a, "1"}, 1}});
    CHECK(coproduct_of(C, "a12.23") == Terms{{{"1", "a12.23"}, 1},
                                              {{"a12.23", "1"}, 1},
                                              {{"a12", "a23"}, s},
                                              {{"a23", "a12"}, 1},
                                              {{"a12", "a13"}, s},
                                              {{"a13", "a12"}, 1}});
    CHECK(coproduct_of(C, "a13.23") == Terms{{{"1", "a13.23"}, 1},
                                              {{"a13.23", "1"}, 1},
                                              {{"a13", "a23"}, s},
                                              {{"a23", "a13"}, 1},
                                              {{"a12", "a13"}, -s},
                                              {{"a13", "a12"}, -1}});
  }
}

TEST_CASE("dual degrees are negative") {
  auto C = dualize(build_cohomology(3, 3).algebra(), false);
  CHECK(C.element(C.index_of("1")).degree == 0);
  CHECK(C.element(C.index_of("a12")).degree == -2);
  CHECK(C.element(C.index_of("a13.23")).degree == -4);
  CHECK(C.counit() == C.index_of("1"));
}

TEST_CASE("reduced coalgebra") {
  for (int m : {2, 3}) {
    const Rational s = m % 2 ? 1 : -1;
    auto C = dualize(build_cohomology(m, 3).algebra(), true);
    CHECK(C.reduced());
    CHECK(C.counit() == -1);
    CHECK(C.dimension() == 5);
    CHECK_THROWS_AS(C.index_of("1"), Error);
    CHECK(coproduct_of(C, "a12").empty());
    CHECK(coproduct_of(C, "a12.23") ==
          Terms{{{"a12", "a23"}, s}, {{"a23", "a12"}, 1}, {{"a12", "a13"}, s}, {{"a13", "a12"}, 1}});
  }
}

TEST_CASE("duality transpose on all bases") {
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 4; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      auto H = build_cohomology(m, k);
      const auto& B = H.algebra();
      auto C = dualize(B, false);
      REQUIRE(C.dimension() == B.dimension());
      for (std::size_t c = 0; c < C.dimension(); ++c) {
        std::map<std::pair<int, int>, Rational> got;
        for (const auto& t : C.coproduct(static_cast<int>(c))) got[{t.left, t.right}] += t.coeff;
        for (std::size_t a = 0; a < C.dimension(); ++a)
          for (std::size_t b = 0; b < C.dimension(); ++b) {
            const int pa = C.element(static_cast<int>(a)).primal, pb = C.element(static_cast<int>(b)).primal;
            const int sign = (B.element(pa).degree * B.element(pb).degree) % 2 ? -1 : 1;
            Rational want = sign * B.structure_constant(pa, pb, C.element(static_cast<int>(c)).primal);
            auto it = got.find({static_cast<int>(a), static_cast<int>(b)});
            CHECK((it == got.end() ? Rational(0) : it->second) == want);
          }
      }
    }
}

TEST_CASE("coassociativity and counit") {
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 4; ++k)
      for (bool pointed : {false, true}) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(pointed);
        auto H = build_cohomology(m, k);
        auto C = dualize(H.algebra(), pointed);
        for (std::size_t b = 0; b < C.dimension(); ++b) {
          CHECK(iterated_coproduct(C, static_cast<int>(b), 3, Association::Left) ==
                iterated_coproduct(C, static_cast<int>(b), 3, Association::Right));
          if (pointed) continue;
          Rational left = 0, right = 0;
          for (const auto& t : C.coproduct(static_cast<int>(b))) {
            if (t.left == C.counit() && t.right == static_cast<int>(b)) left += t.coeff;
            if (t.right == C.counit() && t.left == static_cast<int>(b)) right += t.coeff;
          }
          CHECK(left == 1);
          CHECK(right == 1);
        }
      }
}

TEST_CASE("iterated_coproduct edge cases") {
  auto C = dualize(build_cohomology(2, 3).algebra(), false);
  const int b = C.index_of("a12.23");
  auto one = iterated_coproduct(C, b, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].factors == std::vector<int>{b});
  CHECK(one[0].coeff == 1);
  // Δ^(3) of the unit is 1⊗1⊗1
  auto unit = iterated_coproduct(C, C.counit(), 3);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].factors == std::vector<int>(3, C.counit()));
  // reduced 3-fold coproduct of a degree-2 class vanishes for k = 3
  auto R = dualize(build_cohomology(2, 3).algebra(), true);
  CHECK(iterated_coproduct(R, R.index_of("a12.23"), 3).empty());
}
