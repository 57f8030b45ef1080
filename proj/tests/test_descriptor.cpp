#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhmap/descriptor.hpp"
#include "rhmap/error.hpp"

using namespace rhmap;

namespace {

Factor em(int d, int mult = 1) { return {FactorKind::EilenbergMacLane, d, mult, {}}; }
Factor sphere(int d, int mult = 1) { return {FactorKind::Sphere, d, mult, {}}; }
Factor named(FactorKind k) { return {k, 0, 1, {}}; }

}  // namespace

TEST_CASE("normalize_factors merges, drops points and sorts") {
  auto f = normalize_factors({sphere(3), em(2), named(FactorKind::Point), em(2), sphere(1), sphere(1), sphere(1)});
  REQUIRE(f.size() == 3);
  CHECK(f[0] == sphere(1, 3));
  CHECK(f[1] == em(2, 2));
  CHECK(f[2] == sphere(3));
  auto desc = normalize_factors({em(1, 2), em(3, 3), sphere(5)}, FactorOrder::Descending);
  CHECK(desc == std::vector<Factor>{sphere(5), em(3, 3), em(1, 2)});
  CHECK(normalize_factors({named(FactorKind::Point)}).empty());
}

TEST_CASE("render") {
  CHECK(render(em(3, 2)) == "K(Q,3)^2");
  CHECK(render(sphere(1, 3)) == "(S^1)^3");
  CHECK(render(named(FactorKind::Heisenberg)) == "H_e");
  CHECK(render(named(FactorKind::NilmanifoldY)) == "Y");
  CHECK(render(named(FactorKind::SpaceX)) == "X");
  CHECK(render(named(FactorKind::Point)) == "*");
  RenderOptions u{true, FactorOrder::Ascending};
  CHECK(render(em(2, 3), u) == "K(ℚ,2)³");
  CHECK(render(sphere(1, 2), u) == "(S¹)²");
  CHECK(render(em(12, 11), u) == "K(ℚ,12)¹¹");

  HomotopyTypeDescriptor one{{{ComponentCount::One, {}}}, {}};
  CHECK(render(one) == "*");
  HomotopyTypeDescriptor many{{{ComponentCount::CountablyMany, {}}}, {}};
  CHECK(render(many) == "⊔_N *");
  CHECK(render(many, u) == "⊔_ℕ *");

  HomotopyTypeDescriptor m32{{{ComponentCount::One, {sphere(1, 3), sphere(2)}},
                              {ComponentCount::CountablyMany, {sphere(1, 2), sphere(3)}}},
                             {}};
  CHECK(render(m32) == "((S^1)^3 x S^2) ⊔ ⊔_N ((S^1)^2 x S^3)");
  CHECK(render(m32, u) == "((S¹)³ × S²) ⊔ ⊔_ℕ ((S¹)² × S³)");

  HomotopyTypeDescriptor single{{{ComponentCount::One, {sphere(5), em(4, 3), em(3, 2)}}}, {}};
  CHECK(render(single, {false, FactorOrder::Descending}) == "S^5 x K(Q,4)^3 x K(Q,3)^2");
  HomotopyTypeDescriptor lone{{{ComponentCount::CountablyMany, {sphere(2)}}}, {}};
  CHECK(render(lone) == "⊔_N S^2");
}

TEST_CASE("parse_descriptor inverts render") {
  std::vector<HomotopyTypeDescriptor> cases{
      {{{ComponentCount::One, {sphere(1, 3), sphere(2)}}, {ComponentCount::CountablyMany, {sphere(1, 2), sphere(3)}}}, {}},
      {{{ComponentCount::One, {named(FactorKind::SpaceX)}},
        {ComponentCount::CountablyMany, {sphere(1), named(FactorKind::Heisenberg), em(2, 3), sphere(3)}}},
       {}},
      {{{ComponentCount::CountablyMany, {named(FactorKind::NilmanifoldY), em(2, 3)}}}, {}},
      {{{ComponentCount::CountablyMany, {}}}, {}},
      {{{ComponentCount::One, {}}}, {}},
      {{{ComponentCount::One, {em(12, 35), sphere(13)}}}, {}},
  };
  for (const auto& d : cases)
    for (bool unicode : {false, true})
      for (auto order : {FactorOrder::Ascending, FactorOrder::Descending}) {
        const std::string text = render(d, {unicode, order});
        CAPTURE(text);
        auto back = parse_descriptor(text);
        CHECK(render(back, {unicode, order}) == text);
        CHECK(equivalent(back, d));
      }
}

TEST_CASE("parse_descriptor accepts hand-written forms") {
  auto d = parse_descriptor("S^5 x K(Q,4)^3 x K(Q,3)^2");
  REQUIRE(d.groups.size() == 1);
  CHECK(d.groups[0].count == ComponentCount::One);
  CHECK(d.groups[0].factors.size() == 3);
  CHECK(equivalent(parse_descriptor("X ⊔ ⊔_ℕ S¹ × H_e × K(ℚ,2)³ × S³"),
                   parse_descriptor("X ⊔ ⊔_N (S^1 x H_e x K(Q,2)^3 x S^3)")));
  for (std::string bad : {"", "S^", "K(Q,)", "S^2 x", "⊔_N", "Z^3", "(S^1"}) {
    CAPTURE(bad);
    try {
      parse_descriptor(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == "bad-descriptor");
    }
  }
}

TEST_CASE("equivalent") {
  auto a = parse_descriptor("S^3 x K(Q,1)^3");
  auto b = parse_descriptor("K(Q,1)^3 x K(Q,3)");
  CHECK(equivalent(a, b));
  CHECK(equivalent(parse_descriptor("(S^1)^3"), parse_descriptor("K(Q,1)^3")));
  CHECK_FALSE(equivalent(parse_descriptor("S^2"), parse_descriptor("K(Q,2)")));
  CHECK_FALSE(equivalent(parse_descriptor("S^3"), parse_descriptor("⊔_N S^3")));
  CHECK_FALSE(equivalent(parse_descriptor("K(Q,2)^3 x S^4"), parse_descriptor("K(Q,2) x S^4")));
  CHECK_FALSE(equivalent(parse_descriptor("S^3 ⊔ ⊔_N S^3"), parse_descriptor("⊔_N S^3")));
  auto noted = a;
  noted.notes.push_back("anything");
  CHECK(equivalent(noted, a));
}

TEST_CASE("kind names") {
  CHECK(kind_name(FactorKind::EilenbergMacLane) == "eilenberg-maclane");
  CHECK(kind_name(FactorKind::NilmanifoldY) == "nilmanifold-y");
  CHECK(kind_name(FactorKind::Unrecognized) == "unrecognized");
  Factor u{FactorKind::Unrecognized, 0, 1, "{}"};
  CHECK(render(u) == "?");
}
