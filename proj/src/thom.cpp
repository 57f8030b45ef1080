#include "rhmap/thom.hpp"

#include <string>

#include "rhmap/config_space.hpp"
#include "rhmap/error.hpp"

namespace rhmap {

namespace {

const char* kEmptyProduct = "empty product read as a point";

void require_odd(int m, int k, int n) {
  if (m < 2 || k < 2) throw Error("bad-argument", "m and k must be at least 2");
  if (n < 1 || n % 2 == 0) throw Error("unsupported", "closed forms need an odd sphere; use the full pipeline");
}

Factor em(int degree, std::uint64_t mult) { return {FactorKind::EilenbergMacLane, degree, static_cast<int>(mult), {}}; }

HomotopyTypeDescriptor single(ComponentCount count, std::vector<Factor> factors) {
  HomotopyTypeDescriptor d;
  if (factors.empty()) d.notes.push_back(kEmptyProduct);
  d.groups.push_back({count, normalize_factors(std::move(factors), FactorOrder::Descending)});
  return d;
}

// Product over j in [lo, hi] of K(Q, n - j(m-1))^[k, k-j].
std::vector<Factor> stirling_product(int m, int k, int n, int lo, int hi) {
  std::vector<Factor> out;
  for (int j = lo; j <= hi; ++j) out.push_back(em(n - j * (m - 1), stirling(k, k - j)));
  return out;
}

}  // namespace

std::map<int, std::uint64_t> thom_numbers(const std::map<int, std::uint64_t>& homology_dims,
                                          const std::map<int, std::uint64_t>& homotopy_dims, bool pointed) {
  std::map<int, std::uint64_t> out;
  for (const auto& [r, pi] : homotopy_dims)
    for (const auto& [s, h] : homology_dims) {
      if (pointed && s == 0) continue;
      int j = r - s;
      if (j < 0 || pi == 0 || h == 0) continue;
      out[j] += pi * h;
    }
  return out;
}

HomotopyTypeDescriptor thom_decomposition(int m, int k, int n, bool pointed, bool expand_sphere) {
  require_odd(m, k, n);
  std::map<int, std::uint64_t> homology;
  for (const auto& [deg, dim] : poincare_series(m, k)) homology[deg] = dim;
  auto N = thom_numbers(homology, {{n, 1}}, pointed);
  std::vector<Factor> factors;
  for (const auto& [j, count] : N) {
    if (j == 0) continue;
    if (j == n && !pointed && !expand_sphere && count == 1)
      factors.push_back({FactorKind::Sphere, n, 1, {}});
    else
      factors.push_back(em(j, count));
  }
  return single(N.count(0) ? ComponentCount::CountablyMany : ComponentCount::One, std::move(factors));
}

HomotopyTypeDescriptor closed_form_decomposition(int m, int k, int n, bool pointed) {
  require_odd(m, k, n);
  const int step = m - 1;
  const int lo = pointed ? 1 : 0;
  if (n < step) {
    if (pointed) return single(ComponentCount::One, {});
    return single(ComponentCount::One, {{FactorKind::Sphere, n, 1, {}}});
  }
  if (n > (k - 1) * step) return single(ComponentCount::One, stirling_product(m, k, n, lo, k - 1));
  const int l = n / step;
  if (n % step == 0) return single(ComponentCount::CountablyMany, stirling_product(m, k, n, lo, l - 1));
  return single(ComponentCount::One, stirling_product(m, k, n, lo, l));
}

CorollaryResult corollary_case(int m, int k) {
  if (m < 2 || k < 2) throw Error("bad-argument", "m and k must be at least 2");
  if (m % 2 == 0 && k % 2 == 0)
    throw Error("precondition", "m and k both even: the target sphere is even-dimensional");
  CorollaryResult r;
  r.n = (m - 1) * (k - 1) - 1;
  if (r.n < 1) throw Error("precondition", "target sphere dimension " + std::to_string(r.n) + " is not positive");
  auto product = [&](int lo, int hi) {
    std::vector<Factor> out;
    for (int j = lo; j <= hi; ++j) out.push_back(em((k - (j + 1)) * (m - 1) - 1, stirling(k, k - j)));
    return out;
  };
  if (m >= 3) {
    r.free_type = single(ComponentCount::One, product(0, k - 2));
    r.pointed_type = single(ComponentCount::One, product(1, k - 2));
  } else {
    r.free_type = single(ComponentCount::CountablyMany, product(0, k - 3));
    r.pointed_type = single(ComponentCount::CountablyMany, product(1, k - 3));
  }
  return r;
}

}  // namespace rhmap
