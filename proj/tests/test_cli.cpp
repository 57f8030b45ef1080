#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "rhmap/serialize.hpp"

using namespace rhmap;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("type") {
  auto r = call({"type", "--m", "3", "--k", "3", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "((S^1)^3 x S^2) ⊔ ⊔_N ((S^1)^2 x S^3)\n");
  auto u = call({"type", "--m", "2", "--k", "3", "--n", "2", "--pointed", "--unicode"});
  CHECK(u.out == "⊔_ℕ (Y × K(ℚ,2)³)\n");
  auto odd = call({"type", "--m", "3", "--k", "3", "--n", "5"});
  CHECK(odd.out == "S^5 x K(Q,3)^3 x K(Q,1)^2\n");
  auto j = call({"type", "--m", "4", "--k", "3", "--n", "2", "--pointed", "--format", "json"});
  auto doc = Json::parse(j.out);
  CHECK(doc["text"] == "⊔_N *");
  CHECK(doc["groups"][0]["components"] == "countably-many");
  CHECK(doc["notes"][0] == "empty product read as a point");
}

TEST_CASE("model") {
  auto r = call({"model", "--m", "2", "--k", "3", "--n", "2", "--short-names"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  d(s1) = -2*p1*p2 - 2*p1*p3 + 2*r1*x\n") != std::string::npos);
  CHECK(r.out.find("  1: p1 p2 p3 s1 s2\n") != std::string::npos);
  auto j = call({"model", "--m", "3", "--k", "3", "--n", "2", "--pointed", "--format", "json"});
  auto M = mapping_model_from_json(Json::parse(j.out));
  CHECK(M.cdga() == build_sphere_mapping_model(3, 3, 2, true).cdga());
}

TEST_CASE("cohomology") {
  auto r = call({"cohomology", "--m", "2", "--k", "3", "--dual"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimensions: 0:1 1:3 2:2") != std::string::npos);
  CHECK(r.out.find("a12 * a13 = a12a23 - a13a23") != std::string::npos);
  CHECK(r.out.find("D(a12.23)") != std::string::npos);
}

TEST_CASE("components and component") {
  auto r = call({"components", "--m", "3", "--k", "3", "--n", "2", "--short-names"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  (l, -l, l)\n") != std::string::npos);
  CHECK(r.out.find("(from s1)") != std::string::npos);
  auto c = call({"component", "--m", "3", "--k", "3", "--n", "2", "--aug", "p1=1", "--short-names"});
  CHECK(c.code == 0);
  CHECK(c.out.find("d(q1) = 2*x") != std::string::npos);
  auto bad = call({"component", "--m", "3", "--k", "3", "--n", "2", "--aug", "p1=1,p2=1", "--short-names"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: invalid-augmentation: ", 0) == 0);
  auto unknown = call({"component", "--m", "3", "--k", "3", "--n", "2", "--aug", "zz=1"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.rfind("error: presentation-mismatch", 0) == 0);
}

TEST_CASE("thom and corollary") {
  auto t = call({"thom", "--m", "3", "--k", "4", "--n", "7"});
  CHECK(t.out == "S^7 x K(Q,5)^6 x K(Q,3)^11 x K(Q,1)^6\n");
  auto e = call({"thom", "--m", "3", "--k", "4", "--n", "7", "--expand"});
  CHECK(e.out == "K(Q,7) x K(Q,5)^6 x K(Q,3)^11 x K(Q,1)^6\n");
  auto even = call({"thom", "--m", "3", "--k", "4", "--n", "4"});
  CHECK(even.code == 2);
  auto c = call({"corollary", "--m", "2", "--k", "5"});
  CHECK(c.out == "n = 3\nfree: ⊔_N (K(Q,3) x K(Q,2)^10 x K(Q,1)^35)\npointed: ⊔_N (K(Q,2)^10 x K(Q,1)^35)\n");
  auto pre = call({"corollary", "--m", "2", "--k", "4"});
  CHECK(pre.code == 2);
  CHECK(pre.err.rfind("error: precondition: ", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 64);
  CHECK(call({"type", "--m", "3", "--n", "2"}).code == 64);
  CHECK(call({"type", "--m", "3", "--k", "3", "--n", "2", "--format", "xml"}).code == 64);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({"--help"}).code == 0);
  auto k = call({"type", "--m", "3", "--k", "9", "--n", "2"});
  CHECK(k.code == 2);
  auto m = call({"model", "--m", "1", "--k", "3", "--n", "2"});
  CHECK(m.code == 2);
}

TEST_CASE("selftest") {
  auto r = call({"selftest", "--seed", "11", "--trials", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failures") != std::string::npos);
}
