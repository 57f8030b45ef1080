#include "rhmap/mapping_model.hpp"

#include <algorithm>

#include "rhmap/error.hpp"

namespace rhmap {

std::string tensor_name(const std::string& v, const std::string& beta) { return v + "_" + beta; }

int MappingModel::generator(const std::string& v, const std::string& beta) const {
  return generators().index_of(tensor_name(v, beta));
}

MappingModel build_mapping_model(const Cdga& target, const GradedCoalgebra& C) {
  const auto& V = target.generators();
  std::vector<Generator> gens;
  for (const auto& v : V.all())
    for (const auto& beta : C.basis()) gens.push_back({tensor_name(v.name, beta.name), v.degree + beta.degree});
  GeneratorSet W(std::move(gens));

  std::vector<Provenance> provenance(W.size());
  std::vector<std::vector<int>> index(V.size(), std::vector<int>(C.dimension()));
  for (std::size_t v = 0; v < V.size(); ++v)
    for (std::size_t b = 0; b < C.dimension(); ++b) {
      int w = W.index_of(tensor_name(V[v].name, C.element(static_cast<int>(b)).name));
      index[v][b] = w;
      provenance[static_cast<std::size_t>(w)] = {V[v].name, C.element(static_cast<int>(b)).name};
    }

  std::vector<Polynomial> d(W.size());
  for (std::size_t v = 0; v < V.size(); ++v) {
    const Polynomial& dv = target.d(static_cast<int>(v));
    for (std::size_t b = 0; b < C.dimension(); ++b) {
      Polynomial out;
      for (const auto& [word, c] : dv.terms()) {
        if (word.empty())
          throw Error("presentation-mismatch", "target differential has a constant term");
        const int s = static_cast<int>(word.size());
        for (const auto& t : iterated_coproduct(C, static_cast<int>(b), s)) {
          // Koszul sign of moving each β_i to the right of a_i: sum over i < j of |a_j||β_i|.
          int parity = 0;
          for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
              parity += V.degree(word[static_cast<std::size_t>(j)]) * C.element(t.factors[static_cast<std::size_t>(i)]).degree;
          std::vector<int> factors;
          for (int i = 0; i < s; ++i)
            factors.push_back(index[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])]
                                   [static_cast<std::size_t>(t.factors[static_cast<std::size_t>(i)])]);
          auto sm = normalize_monomial(W, std::move(factors));
          if (sm.is_zero()) continue;
          Rational coeff = c * t.coeff * sm.sign;
          if (parity % 2 != 0) coeff = -coeff;
          out.add_term(sm.monomial, coeff);
        }
      }
      d[static_cast<std::size_t>(index[v][b])] = std::move(out);
    }
  }
  return MappingModel(Cdga(std::move(W), std::move(d)), std::move(provenance), C.reduced());
}

MappingModel build_mapping_model(const Cdga& target, const FiniteGradedAlgebra& B, bool pointed) {
  return build_mapping_model(target, dualize(B, pointed));
}

MappingModel build_sphere_mapping_model(int m, int k, int n, bool pointed) {
  auto H = build_cohomology(m, k);
  return build_mapping_model(sphere_model(n), H.algebra(), pointed);
}

std::vector<std::pair<int, std::vector<std::string>>> degree_table(const MappingModel& M) {
  std::map<int, std::vector<std::string>, std::greater<>> by_degree;
  for (const auto& g : M.generators().all()) by_degree[g.degree].push_back(g.name);
  return {by_degree.begin(), by_degree.end()};
}

std::map<std::string, std::string> short_names(const MappingModel& M) {
  std::map<std::string, std::string> out;
  const auto& gens = M.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& p = M.provenance(static_cast<int>(g));
    if (p.v != "x" && p.v != "y") return {};
    const bool is_x = p.v == "x";
    std::string alias;
    if (p.beta == "1") {
      alias = p.v;
    } else if (p.beta.size() == 3) {  // aij
      int idx = (p.beta[1] - '0') + (p.beta[2] - '0') - 2;
      alias = std::string(is_x ? "p" : "q") + std::to_string(idx);
    } else if (p.beta.size() == 6) {  // aij.rs
      int idx = (p.beta[1] - '0') + (p.beta[2] - '0') - 2;
      alias = std::string(is_x ? "r" : "s") + std::to_string(idx);
    } else {
      return {};
    }
    out[gens[g].name] = alias;
  }
  // Only the three-particle basis gives a consistent naming.
  std::vector<std::string> seen;
  for (const auto& [name, alias] : out) seen.push_back(alias);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return {};
  for (const auto& [name, alias] : out) {
    const auto& p = M.provenance(gens.index_of(name));
    if (p.beta != "1" && p.beta != "a12" && p.beta != "a13" && p.beta != "a23" && p.beta != "a12.23" &&
        p.beta != "a13.23")
      return {};
  }
  return out;
}

}  // namespace rhmap
