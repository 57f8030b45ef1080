#include "rhmap/serialize.hpp"

#include "rhmap/error.hpp"

namespace rhmap {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("bad-document", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Generator> generators_from_json(const Json& j) {
  std::vector<Generator> gens;
  for (const auto& g : field(j, "generators")) gens.push_back({field(g, "name").get<std::string>(), field(g, "degree").get<int>()});
  return gens;
}

std::string count_name(ComponentCount c) { return c == ComponentCount::One ? "one" : "countably-many"; }

FactorKind kind_from_name(const std::string& s) {
  for (auto k : {FactorKind::EilenbergMacLane, FactorKind::Sphere, FactorKind::Heisenberg, FactorKind::NilmanifoldY,
                 FactorKind::SpaceX, FactorKind::Point, FactorKind::Unrecognized})
    if (kind_name(k) == s) return k;
  bad("unknown factor kind '" + s + "'");
}

}  // namespace

Json polynomial_to_json(const GeneratorSet& gens, const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json names = Json::array();
    for (int g : mono) names.push_back(gens[static_cast<std::size_t>(g)].name);
    out.push_back({{"coeff", to_string(c)}, {"monomial", names}});
  }
  return out;
}

Polynomial polynomial_from_json(const GeneratorSet& gens, const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  std::vector<std::pair<Rational, std::vector<std::string>>> words;
  for (const auto& t : j)
    words.emplace_back(parse_rational(field(t, "coeff").get<std::string>()),
                       field(t, "monomial").get<std::vector<std::string>>());
  return Polynomial::from_words(gens, words);
}

Json cdga_to_json(const Cdga& model) {
  const auto& gens = model.generators();
  Json g = Json::array();
  for (const auto& gen : gens.all()) g.push_back({{"name", gen.name}, {"degree", gen.degree}});
  Json d = Json::object();
  for (std::size_t i = 0; i < gens.size(); ++i) d[gens[i].name] = polynomial_to_json(gens, model.d(static_cast<int>(i)));
  return {{"generators", g}, {"differential", d}};
}

Cdga cdga_from_json(const Json& j) {
  try {
    GeneratorSet gens(generators_from_json(j));
    std::vector<Polynomial> d(gens.size());
    const Json& diff = field(j, "differential");
    if (!diff.is_object()) bad("differential must be an object");
    for (const auto& [name, poly] : diff.items()) d[static_cast<std::size_t>(gens.index_of(name))] = polynomial_from_json(gens, poly);
    return Cdga(std::move(gens), std::move(d));
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json mapping_model_to_json(const MappingModel& M) {
  Json out = cdga_to_json(M.cdga());
  out["pointed"] = M.pointed();
  Json prov = Json::object();
  const auto& gens = M.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& p = M.provenance(static_cast<int>(i));
    prov[gens[i].name] = {{"v", p.v}, {"beta", p.beta}};
  }
  out["provenance"] = prov;
  return out;
}

MappingModel mapping_model_from_json(const Json& j) {
  Cdga model = cdga_from_json(j);
  try {
    std::vector<Provenance> prov(model.size());
    for (const auto& [name, p] : field(j, "provenance").items())
      prov[static_cast<std::size_t>(model.generators().index_of(name))] = {field(p, "v").get<std::string>(),
                                                                            field(p, "beta").get<std::string>()};
    return MappingModel(std::move(model), std::move(prov), field(j, "pointed").get<bool>());
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json algebra_to_json(const FiniteGradedAlgebra& B) {
  Json basis = Json::array();
  for (const auto& e : B.basis()) basis.push_back({{"name", e.name}, {"degree", e.degree}});
  Json dims = Json::object();
  for (const auto& [deg, dim] : B.dimensions()) dims[std::to_string(deg)] = dim;
  Json table = Json::object();
  for (std::size_t a = 0; a < B.dimension(); ++a)
    for (std::size_t b = 0; b < B.dimension(); ++b) {
      Json terms = Json::array();
      for (const auto& [c, coeff] : B.product(static_cast<int>(a), static_cast<int>(b)))
        terms.push_back({{"coeff", to_string(coeff)}, {"basis", B.element(c).name}});
      table[B.element(static_cast<int>(a)).name + "*" + B.element(static_cast<int>(b)).name] = terms;
    }
  return {{"basis", basis}, {"dimensions", dims}, {"unit", B.element(B.unit()).name}, {"multiplication", table}};
}

Json coalgebra_to_json(const GradedCoalgebra& C) {
  Json basis = Json::array();
  for (const auto& e : C.basis()) basis.push_back({{"name", e.name}, {"degree", e.degree}});
  Json cop = Json::object();
  for (std::size_t i = 0; i < C.dimension(); ++i) {
    Json terms = Json::array();
    for (const auto& t : C.coproduct(static_cast<int>(i)))
      terms.push_back({{"coeff", to_string(t.coeff)}, {"left", C.element(t.left).name}, {"right", C.element(t.right).name}});
    cop[C.element(static_cast<int>(i)).name] = terms;
  }
  return {{"basis", basis}, {"reduced", C.reduced()}, {"coproduct", cop}};
}

Json augmentation_to_json(const Augmentation& u) {
  Json out = Json::object();
  for (const auto& [name, v] : u.values) out[name] = to_string(v);
  return out;
}

Json family_to_json(const AugmentationFamily& f) {
  Json basis = Json::array();
  for (const auto& v : f.basis) {
    Json vec = Json::object();
    for (std::size_t g = 0; g < f.unknowns.size(); ++g) vec[f.unknowns[g]] = to_string(v[g]);
    basis.push_back(vec);
  }
  return {{"parameters", f.parameters()}, {"text", f.to_string()}, {"basis", basis}};
}

Json descriptor_to_json(const HomotopyTypeDescriptor& d, const RenderOptions& opts) {
  Json groups = Json::array();
  for (const auto& g : d.groups) {
    Json factors = Json::array();
    for (const auto& f : normalize_factors(g.factors, opts.order)) {
      Json jf = {{"kind", kind_name(f.kind)}, {"degree", f.degree}, {"multiplicity", f.multiplicity}};
      if (!f.model.empty()) jf["model"] = Json::parse(f.model);
      factors.push_back(jf);
    }
    groups.push_back({{"components", count_name(g.count)}, {"factors", factors}, {"text", render(g, opts)}});
  }
  return {{"text", render(d, opts)}, {"groups", groups}, {"notes", d.notes}};
}

HomotopyTypeDescriptor descriptor_from_json(const Json& j) {
  try {
    HomotopyTypeDescriptor d;
    for (const auto& g : field(j, "groups")) {
      ComponentGroup group;
      const auto count = field(g, "components").get<std::string>();
      if (count != "one" && count != "countably-many") bad("bad component count '" + count + "'");
      group.count = count == "one" ? ComponentCount::One : ComponentCount::CountablyMany;
      for (const auto& f : field(g, "factors")) {
        Factor factor{kind_from_name(field(f, "kind").get<std::string>()), field(f, "degree").get<int>(),
                      field(f, "multiplicity").get<int>(), {}};
        if (f.contains("model")) factor.model = f.at("model").dump();
        group.factors.push_back(factor);
      }
      d.groups.push_back(std::move(group));
    }
    d.notes = field(j, "notes").get<std::vector<std::string>>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace rhmap
