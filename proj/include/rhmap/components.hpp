#pragma once

// Path components of a mapping space: augmentations of the degree-0
// generators, the polynomial system they satisfy, and the Sullivan model of
// each component.

#include <map>
#include <string>
#include <vector>

#include "rhmap/gca.hpp"
#include "rhmap/linalg.hpp"
#include "rhmap/mapping_model.hpp"

namespace rhmap {

struct Augmentation {
  std::map<std::string, Rational> values;  // degree-0 generator -> value; missing means 0
  friend bool operator==(const Augmentation&, const Augmentation&) = default;
};

/// Equations in the degree-0 generators, one per degree -1 generator.
struct EquationSystem {
  GeneratorSet unknowns;                // the degree-0 generators (degree 0)
  std::vector<std::string> sources;     // the degree -1 generator behind each equation
  std::vector<Polynomial> equations;    // over `unknowns`
};

/// A linear family of solutions: value(g) = sum_i param_i * basis[i][g].
struct AugmentationFamily {
  std::vector<std::string> unknowns;
  std::vector<linalg::Vector> basis;  // canonical (RREF) spanning vectors

  std::size_t parameters() const { return basis.size(); }
  Augmentation instantiate(const std::vector<Rational>& params) const;
  bool contains(const Augmentation& u) const;
  /// "(l1, -l1, l1)" style rendering, unknown order as in `unknowns`.
  std::string to_string() const;
};

struct ComponentModel {
  Cdga model;
  Augmentation source;
};

EquationSystem degree_zero_system(const MappingModel& M);

/// Throws Error("unsolvable-by-factorization") when an equation does not
/// split into rational linear factors.
std::vector<AugmentationFamily> enumerate_augmentation_families(const EquationSystem& system);

/// Linear factors of a homogeneous polynomial of word length one or two,
/// as coefficient vectors over the unknowns.
std::vector<linalg::Vector> linear_factors(const EquationSystem& system, const Polynomial& p);

struct ValidationReport {
  std::vector<std::string> violated;  // degree -1 generators whose equation fails
  bool pass() const { return violated.empty(); }
};

/// Throws Error("presentation-mismatch") for names that are not degree-0
/// generators of M.
ValidationReport validate_augmentation(const MappingModel& M, const Augmentation& u);

/// Model of the component of u: negative generators killed, degree-0
/// generators replaced by their values, W^1 cut down by the linear span of
/// d(W^0). Throws Error("invalid-augmentation") or Error("unsupported").
ComponentModel component_model(const MappingModel& M, const Augmentation& u);

enum class Distinctness { Distinct, NotDistinct, Undetermined };

std::string to_string(Distinctness d);

/// Basis of the degree-0 cycles, i.e. combinations of degree-0 generators
/// whose differential vanishes modulo the negative-degree generators.
std::vector<linalg::Vector> degree_zero_cycles(const MappingModel& M);

/// Two augmentations are certified distinct when they differ on some
/// degree-0 cycle.
Distinctness components_distinct(const MappingModel& M, const Augmentation& a, const Augmentation& b);

/// Parses "q1=1,q2=0,q3=-1/2"; names may be short aliases from `aliases`.
Augmentation parse_augmentation(const std::string& text,
                                const std::map<std::string, std::string>& aliases = {});

}  // namespace rhmap
