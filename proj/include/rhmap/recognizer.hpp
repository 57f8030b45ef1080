#pragma once

// Minimal models of path components and their identification as products
// of named rational spaces.

#include <map>
#include <vector>

#include "rhmap/descriptor.hpp"
#include "rhmap/gca.hpp"
#include "rhmap/linalg.hpp"

namespace rhmap {

/// Linear change of generators: row i of by_degree[d] expresses the i-th new
/// generator of degree d in the old ones of that degree (in index order).
/// New generators are named "<prefix><d>.<i>". Degrees without a matrix
/// keep their generators. Throws Error("singular").
Cdga change_generators(const Cdga& model, const std::map<int, linalg::Matrix>& by_degree,
                       const std::string& prefix = "g");

/// Removes contractible pairs (w, dw) while some differential has a linear
/// term. Generators must have positive degree.
Cdga minimalize(const Cdga& model);

/// For each generator w, in an order where d(w) only involves earlier
/// generators, subtracts from d(w) its part in the image of d on those
/// earlier generators (replacing w by w - η). Returns the input when no such
/// order exists.
Cdga normalize_cycles(const Cdga& model);

/// Changes the basis of generators so that free cycles split off, then cuts
/// along connected components of the coupling graph. The tensor product of
/// the outputs is isomorphic to the input.
std::vector<Cdga> split_tensor_factors(const Cdga& model);

/// Dimension, lower central series dimensions and center dimension of the
/// Lie algebra dual to a model generated in degree 1.
struct LieSignature {
  int dimension = 0;
  std::vector<int> lower_central_series;  // dims of L, [L,L], ... down to a repeat
  int center = 0;
  friend bool operator==(const LieSignature&, const LieSignature&) = default;
};
LieSignature degree_one_signature(const Cdga& model);

struct ClassifyOptions {
  /// Show a lone odd-degree cycle as S^d rather than K(Q, d).
  bool odd_cycles_as_spheres = true;
};

/// Names a minimal, coupling-connected model. Throws Error("not-minimal").
Factor classify_factor(const Cdga& model, const ClassifyOptions& opts = {});

/// minimalize, normalize, split and classify.
std::vector<Factor> recognize(const Cdga& model, const ClassifyOptions& opts = {});

/// The whole pipeline for map(F(R^m, k), S^n) or map*.
HomotopyTypeDescriptor full_type(int m, int k, int n, bool pointed);

}  // namespace rhmap
