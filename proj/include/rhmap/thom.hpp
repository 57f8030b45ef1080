#pragma once

// Closed-form decompositions of map(X, Y) when Y is rationally an H-space
// (odd spheres): Thom's counts N_j and the resulting products of
// Eilenberg-MacLane spaces.

#include <cstdint>
#include <map>
#include <utility>

#include "rhmap/descriptor.hpp"

namespace rhmap {

/// N_j = sum over r - s = j of dim pi_r(Y) * dim H^s(X), j >= 0; the pointed
/// variant skips s = 0. Keys with zero count are omitted.
std::map<int, std::uint64_t> thom_numbers(const std::map<int, std::uint64_t>& homology_dims,
                                          const std::map<int, std::uint64_t>& homotopy_dims, bool pointed);

/// map(F(R^m, k), S^n) for odd n, from the N_j. The K(Q, n) factor is shown
/// as S^n unless `expand_sphere`.
HomotopyTypeDescriptor thom_decomposition(int m, int k, int n, bool pointed, bool expand_sphere = false);

/// The same answer by direct branch selection on n against multiples of
/// m - 1, without going through the N_j.
HomotopyTypeDescriptor closed_form_decomposition(int m, int k, int n, bool pointed);

/// Target sphere dimension (m-1)(k-1)-1 and the (free, pointed) answers for
/// it. Throws Error("precondition") when m and k are both even.
struct CorollaryResult {
  int n = 0;
  HomotopyTypeDescriptor free_type;
  HomotopyTypeDescriptor pointed_type;
};
CorollaryResult corollary_case(int m, int k);

}  // namespace rhmap
