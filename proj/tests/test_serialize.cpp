#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhmap/error.hpp"
#include "rhmap/recognizer.hpp"
#include "rhmap/serialize.hpp"

using namespace rhmap;

TEST_CASE("polynomial round trip keeps exact fractions") {
  GeneratorSet g({{"x", 2}, {"p", 1}, {"q", 1}});
  auto p = Polynomial::from_words(g, {{Rational(-7, 3), {"q", "p"}}, {Rational(1, 2), {"x", "x"}}, {5, {}}});
  auto j = polynomial_to_json(g, p);
  CHECK(j.dump() == R"([{"coeff":"5","monomial":[]},{"coeff":"7/3","monomial":["p","q"]},{"coeff":"1/2","monomial":["x","x"]}])");
  CHECK(polynomial_from_json(g, j) == p);
}

TEST_CASE("cdga and mapping model round trips") {
  for (auto [m, k, n, pointed] : std::vector<std::tuple<int, int, int, bool>>{
           {2, 3, 2, false}, {3, 3, 2, true}, {3, 4, 3, false}, {5, 2, 4, true}}) {
    auto M = build_sphere_mapping_model(m, k, n, pointed);
    auto j = mapping_model_to_json(M);
    auto back = mapping_model_from_json(Json::parse(j.dump()));
    CHECK(back.cdga() == M.cdga());
    CHECK(back.pointed() == pointed);
    for (std::size_t g = 0; g < M.generators().size(); ++g) {
      CHECK(back.provenance(static_cast<int>(g)).v == M.provenance(static_cast<int>(g)).v);
      CHECK(back.provenance(static_cast<int>(g)).beta == M.provenance(static_cast<int>(g)).beta);
    }
    CHECK(mapping_model_to_json(back).dump() == j.dump());
  }
  auto S = sphere_model(2);
  CHECK(cdga_from_json(cdga_to_json(S)) == S);
}

TEST_CASE("descriptor round trip") {
  for (auto d : {full_type(3, 3, 2, false), full_type(2, 3, 2, true), full_type(5, 3, 2, true)}) {
    auto j = descriptor_to_json(d);
    CHECK(j["text"] == render(d));
    auto back = descriptor_from_json(Json::parse(j.dump()));
    CHECK(back.notes == d.notes);
    CHECK(equivalent(back, d));
    CHECK(descriptor_to_json(back).dump() == j.dump());
  }
  // unrecognized factors carry their model
  HomotopyTypeDescriptor u{{{ComponentCount::One, {{FactorKind::Unrecognized, 0, 1, cdga_to_json(sphere_model(3)).dump()}}}}, {}};
  auto j = descriptor_to_json(u);
  CHECK(j["groups"][0]["factors"][0]["model"]["generators"][0]["name"] == "x");
  CHECK(descriptor_from_json(j) == u);
}

TEST_CASE("algebra, coalgebra and family documents") {
  auto H = build_cohomology(2, 3);
  auto a = algebra_to_json(H.algebra());
  CHECK(a["dimensions"].dump() == R"({"0":1,"1":3,"2":2})");
  CHECK(a["multiplication"]["a12*a13"].dump() ==
        R"([{"coeff":"1","basis":"a12a23"},{"coeff":"-1","basis":"a13a23"}])");
  auto c = coalgebra_to_json(dualize(H.algebra(), true));
  CHECK(c["reduced"] == true);
  CHECK(c["basis"].size() == 5);

  AugmentationFamily f{{"p1", "p2", "p3"}, {{1, -1, 1}}};
  auto jf = family_to_json(f);
  CHECK(jf["text"] == "(l, -l, l)");
  CHECK(jf["parameters"] == 1);
  CHECK(jf["basis"][0]["p2"] == "-1");
  Augmentation u;
  u.values["p1"] = Rational(3, 4);
  CHECK(augmentation_to_json(u).dump() == R"({"p1":"3/4"})");
}

TEST_CASE("malformed documents") {
  auto expect_bad = [](const std::string& text, auto parse) {
    CAPTURE(text);
    try {
      parse(Json::parse(text));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == "bad-document" || e.code() == "presentation-mismatch" || e.code() == "bad-rational"));
    }
  };
  auto cdga = [](const Json& j) { return cdga_from_json(j); };
  expect_bad("{}", cdga);
  expect_bad(R"({"generators": [{"name": "x"}], "differential": {}})", cdga);
  expect_bad(R"({"generators": [{"name": "x", "degree": 2}], "differential": {"y": []}})", cdga);
  expect_bad(R"({"generators": [{"name": "x", "degree": 2}], "differential": {"x": [{"coeff": "1/0", "monomial": []}]}})", cdga);
  auto desc = [](const Json& j) { return descriptor_from_json(j); };
  expect_bad(R"({"groups": [{"components": "some", "factors": []}], "notes": []})", desc);
  expect_bad(R"({"groups": [{"components": "one", "factors": [{"kind": "torus", "degree": 1, "multiplicity": 1}]}], "notes": []})", desc);
  expect_bad(R"({"groups": []})", desc);
}
