#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "rhmap/coalgebra.hpp"
#include "rhmap/components.hpp"
#include "rhmap/config_space.hpp"
#include "rhmap/error.hpp"
#include "rhmap/mapping_model.hpp"
#include "rhmap/recognizer.hpp"
#include "rhmap/serialize.hpp"
#include "rhmap/thom.hpp"

namespace rhmap::cli {

namespace {

struct Options {
  int m = 0, k = 0, n = 0;
  bool pointed = false, dual = false, unicode = false, short_names = false, expand = false;
  std::string format = "text";
  std::string aug;
  unsigned seed = 1;
  int trials = 50;
};

bool json(const Options& o) { return o.format == "json"; }

void require_mk(const Options& o) {
  if (o.m < 2 || o.k < 2) throw Error("bad-argument", "--m and --k must be at least 2");
}

void require_mkn(const Options& o) {
  require_mk(o);
  if (o.n < 1) throw Error("bad-argument", "--n must be at least 1");
}

// Polynomial over `N` with generators renamed; signs are recomputed since
// renaming can change the generator order.
Polynomial renamed(const GeneratorSet& gens, const GeneratorSet& N, const std::map<std::string, std::string>& names,
                   const Polynomial& p) {
  std::vector<std::pair<Rational, std::vector<std::string>>> words;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<std::string> w;
    for (int g : mono) w.push_back(names.at(gens[static_cast<std::size_t>(g)].name));
    words.emplace_back(c, w);
  }
  return Polynomial::from_words(N, words);
}

GeneratorSet renamed(const GeneratorSet& gens, const std::map<std::string, std::string>& names) {
  std::vector<Generator> out;
  for (const auto& g : gens.all()) out.push_back({names.count(g.name) ? names.at(g.name) : g.name, g.degree});
  return GeneratorSet(out);
}

Cdga renamed(const Cdga& M, const std::map<std::string, std::string>& names) {
  if (names.empty()) return M;
  const auto& gens = M.generators();
  GeneratorSet N = renamed(gens, names);
  std::vector<Polynomial> d(N.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    d[static_cast<std::size_t>(N.index_of(names.at(gens[i].name)))] = renamed(gens, N, names, M.d(static_cast<int>(i)));
  return Cdga(std::move(N), std::move(d));
}

void print_model_text(const Cdga& M, std::ostream& out) {
  std::map<int, std::vector<std::string>, std::greater<>> by_degree;
  for (const auto& g : M.generators().all()) by_degree[g.degree].push_back(g.name);
  out << "generators:\n";
  for (const auto& [deg, names] : by_degree) {
    out << "  " << deg << ":";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  }
  out << "differential:\n";
  const auto& gens = M.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!M.d(static_cast<int>(i)).is_zero())
      out << "  d(" << gens[i].name << ") = " << to_string(gens, M.d(static_cast<int>(i))) << '\n';
}

RenderOptions render_options(const Options& o, FactorOrder order) {
  RenderOptions r;
  r.unicode = o.unicode;
  r.order = order;
  return r;
}

std::string mapping_label(const Options& o) {
  return std::string(o.pointed ? "map*" : "map") + "(F(R^" + std::to_string(o.m) + "," + std::to_string(o.k) +
         "),S^" + std::to_string(o.n) + ")";
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  require_mk(o);
  auto H = build_cohomology(o.m, o.k);
  const auto& B = H.algebra();
  if (json(o)) {
    Json j = {{"m", o.m}, {"k", o.k}, {"algebra", algebra_to_json(B)}};
    if (o.dual) j["coalgebra"] = coalgebra_to_json(dualize(B, o.pointed));
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "H*(F(R^" << o.m << "," << o.k << ");Q)\n";
  out << "dimensions:";
  for (const auto& [deg, dim] : B.dimensions()) out << ' ' << deg << ':' << dim;
  out << "\nbasis:\n";
  std::map<int, std::vector<std::string>> by_degree;
  for (const auto& e : B.basis()) by_degree[e.degree].push_back(e.name);
  for (const auto& [deg, names] : by_degree) {
    out << "  " << deg << ":";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  }
  out << "products:\n";
  for (std::size_t a = 0; a < B.dimension(); ++a)
    for (std::size_t b = 0; b < B.dimension(); ++b) {
      if (static_cast<int>(a) == B.unit() || static_cast<int>(b) == B.unit()) continue;
      const auto& p = B.product(static_cast<int>(a), static_cast<int>(b));
      if (p.empty()) continue;
      std::string rhs;
      for (const auto& [c, coeff] : p) {
        std::string mag = abs(coeff) == 1 ? "" : to_string(Rational(abs(coeff))) + "*";
        rhs += (rhs.empty() ? (sgn(coeff) < 0 ? "-" : "") : (sgn(coeff) < 0 ? " - " : " + ")) + mag + B.element(c).name;
      }
      out << "  " << B.element(static_cast<int>(a)).name << " * " << B.element(static_cast<int>(b)).name << " = "
          << rhs << '\n';
    }
  if (o.dual) {
    auto C = dualize(B, o.pointed);
    out << (o.pointed ? "reduced coproducts:\n" : "coproducts:\n");
    for (std::size_t i = 0; i < C.dimension(); ++i)
      out << "  D(" << C.element(static_cast<int>(i)).name
          << ") = " << to_string(C, iterated_coproduct(C, static_cast<int>(i), 2)) << '\n';
  }
  return 0;
}

int cmd_model(const Options& o, std::ostream& out) {
  require_mkn(o);
  auto M = build_sphere_mapping_model(o.m, o.k, o.n, o.pointed);
  auto aliases = o.short_names ? short_names(M) : std::map<std::string, std::string>{};
  if (json(o)) {
    Json j = mapping_model_to_json(M);
    if (!aliases.empty()) j["aliases"] = aliases;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "model of " << mapping_label(o) << '\n';
  print_model_text(renamed(M.cdga(), aliases), out);
  return 0;
}

int cmd_components(const Options& o, std::ostream& out) {
  require_mkn(o);
  auto M = build_sphere_mapping_model(o.m, o.k, o.n, o.pointed);
  auto aliases = o.short_names ? short_names(M) : std::map<std::string, std::string>{};
  auto show = [&](const std::string& name) { return aliases.count(name) ? aliases.at(name) : name; };
  auto sys = degree_zero_system(M);
  auto families = enumerate_augmentation_families(sys);
  if (json(o)) {
    Json unknowns = Json::array();
    for (const auto& g : sys.unknowns.all()) unknowns.push_back(show(g.name));
    Json eqs = Json::array();
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
      eqs.push_back({{"source", show(sys.sources[i])}, {"equation", polynomial_to_json(sys.unknowns, sys.equations[i])}});
    Json fams = Json::array();
    for (const auto& f : families) fams.push_back(family_to_json(f));
    out << Json{{"unknowns", unknowns}, {"equations", eqs}, {"families", fams}}.dump(2) << '\n';
    return 0;
  }
  out << "components of " << mapping_label(o) << '\n';
  out << "unknowns:";
  for (const auto& g : sys.unknowns.all()) out << ' ' << show(g.name);
  out << "\nequations:\n";
  std::map<std::string, std::string> unknown_names;
  for (const auto& g : sys.unknowns.all()) unknown_names[g.name] = show(g.name);
  GeneratorSet shown = renamed(sys.unknowns, unknown_names);
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    if (!sys.equations[i].is_zero())
      out << "  " << to_string(shown, renamed(sys.unknowns, shown, unknown_names, sys.equations[i])) << " = 0   (from "
          << show(sys.sources[i]) << ")\n";
  out << "families:\n";
  for (const auto& f : families) out << "  " << f.to_string() << '\n';
  return 0;
}

int cmd_component(const Options& o, std::ostream& out) {
  require_mkn(o);
  auto M = build_sphere_mapping_model(o.m, o.k, o.n, o.pointed);
  auto names = short_names(M);
  std::map<std::string, std::string> inverse;
  for (const auto& [full, alias] : names) inverse[alias] = full;
  auto u = parse_augmentation(o.aug, inverse);
  auto C = component_model(M, u);
  Cdga shown = o.short_names ? renamed(C.model, [&] {
    std::map<std::string, std::string> r;
    for (const auto& g : C.model.generators().all()) r[g.name] = names.count(g.name) ? names.at(g.name) : g.name;
    return r;
  }())
                             : C.model;
  if (json(o)) {
    Json j = cdga_to_json(shown);
    j["augmentation"] = augmentation_to_json(u);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "component of " << mapping_label(o) << " at " << (o.aug.empty() ? "0" : o.aug) << '\n';
  print_model_text(shown, out);
  return 0;
}

int cmd_type(const Options& o, std::ostream& out) {
  require_mkn(o);
  auto d = full_type(o.m, o.k, o.n, o.pointed);
  auto r = render_options(o, o.n % 2 == 0 ? FactorOrder::Ascending : FactorOrder::Descending);
  if (json(o))
    out << descriptor_to_json(d, r).dump(2) << '\n';
  else
    out << render(d, r) << '\n';
  return 0;
}

int cmd_thom(const Options& o, std::ostream& out) {
  require_mkn(o);
  auto d = thom_decomposition(o.m, o.k, o.n, o.pointed, o.expand);
  auto r = render_options(o, FactorOrder::Descending);
  if (json(o))
    out << descriptor_to_json(d, r).dump(2) << '\n';
  else
    out << render(d, r) << '\n';
  return 0;
}

int cmd_corollary(const Options& o, std::ostream& out) {
  require_mk(o);
  auto c = corollary_case(o.m, o.k);
  auto r = render_options(o, FactorOrder::Descending);
  if (json(o)) {
    out << Json{{"n", c.n}, {"free", descriptor_to_json(c.free_type, r)}, {"pointed", descriptor_to_json(c.pointed_type, r)}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "n = " << c.n << '\n';
  out << "free: " << render(c.free_type, r) << '\n';
  out << "pointed: " << render(c.pointed_type, r) << '\n';
  return 0;
}

// Randomized invariant checks.
int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937 rng(o.seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int checks = 0, failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      out << "FAIL " << what << '\n';
    }
  };

  for (int t = 0; t < o.trials; ++t) {
    const int m = pick(2, 5), k = pick(2, 3), n = pick(1, 6);
    const bool pointed = pick(0, 1) == 1;
    auto M = build_sphere_mapping_model(m, k, n, pointed);
    const auto& gens = M.generators();
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n) +
                            (pointed ? ",pointed)" : ")");
    expect(check_d_squared(M.cdga()).pass(), "d^2 = 0 on generators " + tag);
    auto random_monomial = [&] {
      std::vector<int> f;
      for (int i = pick(1, 3); i > 0; --i) f.push_back(pick(0, static_cast<int>(gens.size()) - 1));
      auto sm = normalize_monomial(gens, f);
      Polynomial p;
      if (!sm.is_zero()) p.add_term(sm.monomial, Rational(pick(-5, 5)) * sm.sign);
      return p;
    };
    Polynomial p = random_monomial(), q = random_monomial() + random_monomial();
    if (p.is_zero()) continue;
    const int dp = *p.degree(gens);
    Polynomial pq = multiply(gens, p, q);
    Polynomial lhs = apply_differential(M.cdga(), pq);
    Polynomial rhs = multiply(gens, apply_differential(M.cdga(), p), q);
    Polynomial right = multiply(gens, p, apply_differential(M.cdga(), q));
    rhs += (dp % 2 != 0 ? Rational(-1) : Rational(1)) * right;
    expect(lhs == rhs, "Leibniz rule " + tag);
    expect(apply_differential(M.cdga(), apply_differential(M.cdga(), q)).is_zero(), "d^2 = 0 on products " + tag);
    if (q.homogeneous(gens) && !q.is_zero()) {
      const int dq = *q.degree(gens);
      Polynomial qp = multiply(gens, q, p);
      expect(pq == ((dp * dq) % 2 != 0 ? Rational(-1) : Rational(1)) * qp, "graded commutativity " + tag);
    }
  }

  // Named spaces survive random changes of generators.
  std::vector<std::pair<Cdga, FactorKind>> named = {
      {Cdga(std::vector<Generator>{{"x", 1}, {"y", 1}, {"t", 1}}, {{"t", {{1, {"x", "y"}}}}}), FactorKind::Heisenberg},
      {Cdga(std::vector<Generator>{{"a", 1}, {"b", 1}, {"c", 1}, {"x", 1}, {"y", 1}},
            {{"x", {{1, {"a", "b"}}}}, {"y", {{1, {"b", "c"}}}}}),
       FactorKind::NilmanifoldY},
      {sphere_model(2), FactorKind::Sphere},
      {Cdga(std::vector<Generator>{{"z", 2}}, {}), FactorKind::EilenbergMacLane}};
  for (const auto& [model, kind] : named)
    for (int t = 0; t < o.trials; ++t) {
      std::map<int, linalg::Matrix> change;
      for (const auto& g : model.generators().all()) change[g.degree] = linalg::Matrix();
      for (auto& [deg, mat] : change) {
        std::size_t size = 0;
        for (const auto& g : model.generators().all()) size += g.degree == deg;
        do {
          mat = linalg::Matrix(size, size);
          for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) mat(r, c) = Rational(pick(-3, 3), pick(1, 3));
        } while (linalg::rank(mat) != size);
      }
      auto changed = change_generators(model, change);
      expect(classify_factor(changed).kind == kind, "classification after basis change of " + kind_name(kind));
    }

  out << "selftest seed " << o.seed << ": " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational homotopy of mapping spaces from configuration spaces into spheres", "rhmap"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--m", o.m, "dimension of the ambient space R^m")->required();
    sub->add_option("--k", o.k, "number of particles")->required();
    if (with_n) sub->add_option("--n", o.n, "dimension of the target sphere")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--unicode", o.unicode, "use unicode glyphs in type expressions");
  };

  auto* cohomology = app.add_subcommand("cohomology", "cohomology algebra of F(R^m,k)");
  add_common(cohomology, false);
  cohomology->add_flag("--dual", o.dual, "also print the dual coalgebra");
  cohomology->add_flag("--pointed", o.pointed, "reduced dual coalgebra");

  auto* model = app.add_subcommand("model", "Sullivan model of the mapping space");
  add_common(model, true);
  model->add_flag("--pointed", o.pointed, "pointed mapping space");
  model->add_flag("--short-names", o.short_names, "use p, q, r, s names (k = 3)");

  auto* components = app.add_subcommand("components", "augmentation system and its solution families");
  add_common(components, true);
  components->add_flag("--pointed", o.pointed, "pointed mapping space");
  components->add_flag("--short-names", o.short_names, "use p, q, r, s names (k = 3)");

  auto* component = app.add_subcommand("component", "model of one path component");
  add_common(component, true);
  component->add_flag("--pointed", o.pointed, "pointed mapping space");
  component->add_option("--aug", o.aug, "augmentation, e.g. \"q1=1,q2=0,q3=0\"");
  component->add_flag("--short-names", o.short_names, "use p, q, r, s names (k = 3)");

  auto* type = app.add_subcommand("type", "rational homotopy type");
  add_common(type, true);
  type->add_flag("--pointed", o.pointed, "pointed mapping space");

  auto* thom = app.add_subcommand("thom", "closed form for odd spheres");
  add_common(thom, true);
  thom->add_flag("--pointed", o.pointed, "pointed mapping space");
  thom->add_flag("--expand", o.expand, "print K(Q,n) instead of S^n");

  auto* corollary = app.add_subcommand("corollary", "target sphere of dimension (m-1)(k-1)-1");
  add_common(corollary, false);

  auto* selftest = app.add_subcommand("selftest", "randomized invariant checks");
  selftest->add_option("--seed", o.seed, "random seed");
  selftest->add_option("--trials", o.trials, "trials per check")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*cohomology) return cmd_cohomology(o, out);
    if (*model) return cmd_model(o, out);
    if (*components) return cmd_components(o, out);
    if (*component) return cmd_component(o, out);
    if (*type) return cmd_type(o, out);
    if (*thom) return cmd_thom(o, out);
    if (*corollary) return cmd_corollary(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return 2;
  }
  return 64;
}

}  // namespace rhmap::cli
