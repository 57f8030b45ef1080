#pragma once

// Haefliger model (Λ(V⊗B♯), d̃) of map(X, Y) and its pointed variant on B₊♯.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rhmap/coalgebra.hpp"
#include "rhmap/config_space.hpp"
#include "rhmap/gca.hpp"

namespace rhmap {

struct Provenance {
  std::string v;     // generator of the target model
  std::string beta;  // coalgebra basis element
};

class MappingModel {
 public:
  MappingModel(Cdga model, std::vector<Provenance> provenance, bool pointed)
      : model_(std::move(model)), provenance_(std::move(provenance)), pointed_(pointed) {}

  const Cdga& cdga() const { return model_; }
  const GeneratorSet& generators() const { return model_.generators(); }
  const Provenance& provenance(int g) const { return provenance_[static_cast<std::size_t>(g)]; }
  bool pointed() const { return pointed_; }
  int generator(const std::string& v, const std::string& beta) const;

 private:
  Cdga model_;
  std::vector<Provenance> provenance_;
  bool pointed_ = false;
};

/// Name of v⊗β, e.g. "y_a12.23".
std::string tensor_name(const std::string& v, const std::string& beta);

/// The target model must have a differential with no constant terms.
MappingModel build_mapping_model(const Cdga& target, const GradedCoalgebra& coalgebra);
MappingModel build_mapping_model(const Cdga& target, const FiniteGradedAlgebra& B, bool pointed);

/// Model of map(F(R^m, k), S^n) (or map*).
MappingModel build_sphere_mapping_model(int m, int k, int n, bool pointed);

/// Generators grouped by degree, highest degree first.
std::vector<std::pair<int, std::vector<std::string>>> degree_table(const MappingModel& M);

/// Short names x, y, p_i, q_i, r_i, s_i for three-particle sphere models
/// (p_{i+j-2} = x⊗α_ij and so on); empty when not applicable.
std::map<std::string, std::string> short_names(const MappingModel& M);

}  // namespace rhmap
