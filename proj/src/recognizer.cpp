#include "rhmap/recognizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rhmap/components.hpp"
#include "rhmap/error.hpp"
#include "rhmap/linalg.hpp"
#include "rhmap/mapping_model.hpp"
#include "rhmap/serialize.hpp"

namespace rhmap {

namespace {

using linalg::Vector;

constexpr std::size_t kMaxCoboundarySources = 4000;

void require_positive(const Cdga& M) {
  for (const auto& g : M.generators().all())
    if (g.degree < 1) throw Error("non-positive-degree", "generator " + g.name + " has degree " + std::to_string(g.degree));
}

std::vector<int> of_degree(const GeneratorSet& gens, int degree) {
  std::vector<int> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].degree == degree) out.push_back(static_cast<int>(i));
  return out;
}

std::set<int> degrees_of(const GeneratorSet& gens) {
  std::set<int> out;
  for (const auto& g : gens.all()) out.insert(g.degree);
  return out;
}

// Restriction of M to the named generators; differentials are projected by
// sending every other generator to zero.
Cdga restrict_to(const Cdga& M, const std::vector<int>& keep) {
  const auto& gens = M.generators();
  std::vector<Generator> sub;
  for (int g : keep) sub.push_back(gens[static_cast<std::size_t>(g)]);
  GeneratorSet S(sub);
  std::vector<Polynomial> images(gens.size());
  for (int g : keep) images[static_cast<std::size_t>(g)] = Polynomial::generator(S.index_of(gens[static_cast<std::size_t>(g)].name));
  std::vector<Polynomial> d(S.size());
  for (int g : keep) d[static_cast<std::size_t>(S.index_of(gens[static_cast<std::size_t>(g)].name))] = substitute(S, images, M.d(g));
  return Cdga(std::move(S), std::move(d));
}

struct NewGenerator {
  std::string name;
  int degree = 0;
  Vector combo;  // over the old generators of that degree, in index order
};

// Rewrites M in a new basis of generators (given per degree as combinations
// of the old ones; must be invertible in each degree).
Cdga change_basis(const Cdga& M, const std::vector<NewGenerator>& basis) {
  const auto& old = M.generators();
  std::vector<Generator> gens;
  for (const auto& b : basis) gens.push_back({b.name, b.degree});
  GeneratorSet N(gens);
  std::vector<Polynomial> images(old.size());
  std::vector<Polynomial> d(N.size());
  for (int deg : degrees_of(old)) {
    auto O = of_degree(old, deg);
    std::vector<const NewGenerator*> E;
    for (const auto& b : basis)
      if (b.degree == deg) E.push_back(&b);
    if (E.size() != O.size()) throw Error("internal", "basis change has the wrong size in degree " + std::to_string(deg));
    linalg::Matrix C(E.size(), O.size());
    for (std::size_t e = 0; e < E.size(); ++e)
      for (std::size_t o = 0; o < O.size(); ++o) C(e, o) = E[e]->combo[o];
    auto inv = linalg::inverse(C);
    for (std::size_t o = 0; o < O.size(); ++o) {
      Polynomial img;
      for (std::size_t e = 0; e < E.size(); ++e)
        if (!is_zero(inv(o, e))) img.add_term({N.index_of(E[e]->name)}, inv(o, e));
      images[static_cast<std::size_t>(O[o])] = img;
    }
  }
  for (int deg : degrees_of(old)) {
    auto O = of_degree(old, deg);
    for (const auto& b : basis) {
      if (b.degree != deg) continue;
      Polynomial dn;
      for (std::size_t o = 0; o < O.size(); ++o)
        if (!is_zero(b.combo[o])) dn += b.combo[o] * substitute(N, images, M.d(O[o]));
      d[static_cast<std::size_t>(N.index_of(b.name))] = dn;
    }
  }
  return Cdga(std::move(N), std::move(d));
}

// Kernel of d restricted to the generators of one degree.
std::vector<Vector> cycles(const Cdga& M, const std::vector<int>& O) {
  std::map<Monomial, std::size_t> col;
  for (int g : O)
    for (const auto& [mono, c] : M.d(g).terms()) col.emplace(mono, col.size());
  linalg::Matrix A(col.size(), O.size());
  for (std::size_t j = 0; j < O.size(); ++j)
    for (const auto& [mono, c] : M.d(O[j]).terms()) A(col.at(mono), j) = c;
  if (col.empty()) {
    std::vector<Vector> all;
    for (std::size_t j = 0; j < O.size(); ++j) all.push_back(linalg::unit(O.size(), j));
    return all;
  }
  return linalg::nullspace(std::move(A));
}

// Graded left derivative ∂P/∂g.
Polynomial derivative(const GeneratorSet& gens, const Polynomial& P, int g) {
  Polynomial out;
  for (const auto& [mono, c] : P.terms()) {
    int before = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == g) {
        Monomial rest = mono;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        int sign = (gens.degree(g) * before) % 2 != 0 ? -1 : 1;
        out.add_term(rest, c * sign);
      }
      before += gens.degree(mono[i]);
    }
  }
  return out;
}

// Linear forms spanning the smallest subspace U with P in Λ(U).
std::vector<Polynomial> essential_forms(const GeneratorSet& gens, const Polynomial& P) {
  std::map<std::size_t, Polynomial> by_length;
  for (const auto& [mono, c] : P.terms()) by_length[mono.size()].add_term(mono, c);
  std::vector<Polynomial> out;
  for (const auto& [len, part] : by_length) {
    if (len == 0) continue;
    std::vector<Polynomial> layer{part};
    for (std::size_t step = 1; step < len; ++step) {
      std::vector<Polynomial> next;
      for (const auto& p : layer) {
        std::set<int> involved;
        for (const auto& [mono, c] : p.terms()) involved.insert(mono.begin(), mono.end());
        for (int g : involved) {
          auto q = derivative(gens, p, g);
          if (!q.is_zero() && std::find(next.begin(), next.end(), q) == next.end()) next.push_back(std::move(q));
        }
      }
      layer = std::move(next);
    }
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Vector coordinates(const Polynomial& linear, const std::vector<int>& O) {
  Vector v(O.size());
  for (const auto& [g, c] : linear.linear_part()) {
    auto it = std::find(O.begin(), O.end(), g);
    if (it != O.end()) v[static_cast<std::size_t>(it - O.begin())] = c;
  }
  return v;
}

Polynomial from_coordinates(const Vector& v, const std::vector<int>& O) {
  Polynomial p;
  for (std::size_t i = 0; i < O.size(); ++i) p.add_term({O[i]}, v[i]);
  return p;
}

bool is_minimal(const Cdga& M) {
  for (const auto& d : M.differentials())
    if (!d.is_decomposable()) return false;
  return true;
}

// Solves target = x̂ · ℓ for ℓ in the span of `basis_gens`.
bool divide_by(const GeneratorSet& gens, const Polynomial& target, const Polynomial& xhat,
               const std::vector<int>& basis_gens, Vector& ell) {
  std::vector<Polynomial> prods;
  std::map<Monomial, std::size_t> col;
  for (int g : basis_gens) {
    prods.push_back(multiply(gens, xhat, Polynomial::generator(g)));
    for (const auto& [mono, c] : prods.back().terms()) col.emplace(mono, col.size());
  }
  for (const auto& [mono, c] : target.terms())
    if (!col.count(mono)) return false;
  linalg::Matrix A(col.size(), basis_gens.size());
  Vector b(col.size());
  for (std::size_t j = 0; j < prods.size(); ++j)
    for (const auto& [mono, c] : prods[j].terms()) A(col.at(mono), j) = c;
  for (const auto& [mono, c] : target.terms()) b[col.at(mono)] = c;
  bool ok = false;
  ell = linalg::solve(A, b, ok);
  return ok;
}

bool looks_like_space_x(const Cdga& M) {
  const auto& gens = M.generators();
  std::map<int, int> counts;
  for (const auto& g : gens.all()) ++counts[g.degree];
  if (counts != std::map<int, int>{{1, 5}, {2, 4}, {3, 1}}) return false;
  auto ones = of_degree(gens, 1), twos = of_degree(gens, 2), threes = of_degree(gens, 3);

  const LieSignature y{5, {5, 2, 0}, 2};
  if (degree_one_signature(restrict_to(M, ones)) != y) return false;

  auto z2 = cycles(M, twos);
  if (z2.size() != 1) return false;
  Polynomial xhat = from_coordinates(z2[0], twos);
  Polynomial sq = multiply(gens, xhat, xhat);
  const Polynomial& dy = M.d(threes[0]);
  if (dy.is_zero() || sq.is_zero() || dy.size() != sq.size()) return false;
  Rational ratio = dy.terms().begin()->second / sq.terms().begin()->second;
  if (dy != ratio * sq) return false;

  auto z1 = cycles(M, ones);
  if (z1.size() != 3) return false;
  std::vector<Vector> units;
  for (std::size_t i = 0; i < twos.size(); ++i) units.push_back(linalg::unit(twos.size(), i));
  auto rest = linalg::complete_within(z2, units, twos.size());
  std::vector<Vector> ells;
  for (const auto& q : rest) {
    Polynomial dq;
    for (std::size_t i = 0; i < twos.size(); ++i)
      if (!is_zero(q[i])) dq += q[i] * M.d(twos[i]);
    Vector ell;
    if (!divide_by(gens, dq, xhat, ones, ell)) return false;
    if (!linalg::in_span(z1, ell, ones.size())) return false;
    ells.push_back(ell);
  }
  return linalg::span_basis(ells, ones.size()).size() == 3;
}

std::vector<Factor> normalized(std::vector<Factor> f) { return normalize_factors(std::move(f)); }

}  // namespace

Cdga change_generators(const Cdga& model, const std::map<int, linalg::Matrix>& by_degree,
                       const std::string& prefix) {
  const auto& gens = model.generators();
  std::vector<NewGenerator> basis;
  for (int deg : degrees_of(gens)) {
    auto O = of_degree(gens, deg);
    auto it = by_degree.find(deg);
    for (std::size_t i = 0; i < O.size(); ++i) {
      if (it == by_degree.end()) {
        basis.push_back({gens[static_cast<std::size_t>(O[i])].name, deg, linalg::unit(O.size(), i)});
        continue;
      }
      if (it->second.rows() != O.size() || it->second.cols() != O.size())
        throw Error("bad-argument", "basis change matrix has the wrong size in degree " + std::to_string(deg));
      basis.push_back({prefix + std::to_string(deg) + "." + std::to_string(i + 1), deg, it->second.row(i)});
    }
  }
  return change_basis(model, basis);
}

Cdga minimalize(const Cdga& input) {
  require_positive(input);
  Cdga M = input;
  while (true) {
    const auto& gens = M.generators();
    int w = -1, g = -1;
    Rational c;
    for (std::size_t i = 0; i < gens.size() && w < 0; ++i) {
      auto lin = M.d(static_cast<int>(i)).linear_part();
      if (lin.empty()) continue;
      w = static_cast<int>(i);
      g = lin.begin()->first;
      c = lin.begin()->second;
    }
    if (w < 0) return M;

    std::vector<Generator> kept;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (static_cast<int>(i) != w && static_cast<int>(i) != g) kept.push_back(gens[i]);
    GeneratorSet N(kept);
    std::vector<Polynomial> images(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (static_cast<int>(i) != w && static_cast<int>(i) != g) images[i] = Polynomial::generator(N.index_of(gens[i].name));
    // In the quotient by (w, dw): g = -(dw - c g)/c with w = 0.
    Polynomial rest = M.d(w) - Polynomial::generator(g, c);
    images[static_cast<std::size_t>(g)] = (-1 / Rational(c)) * substitute(N, images, rest);
    std::vector<Polynomial> d(N.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (static_cast<int>(i) != w && static_cast<int>(i) != g)
        d[static_cast<std::size_t>(N.index_of(gens[i].name))] = substitute(N, images, M.d(static_cast<int>(i)));
    M = Cdga(std::move(N), std::move(d));
  }
}

Cdga normalize_cycles(const Cdga& input) {
  require_positive(input);
  const auto& gens = input.generators();
  const std::size_t n = gens.size();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  // Lower degrees first; within a degree, a generator waits for everything
  // its differential uses.
  for (int deg : degrees_of(gens)) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t h = 0; h < n; ++h) {
        if (placed[h] || gens[h].degree != deg) continue;
        bool ready = true;
        for (const auto& [mono, c] : input.d(static_cast<int>(h)).terms())
          for (int g : mono) ready = ready && placed[static_cast<std::size_t>(g)];
        if (!ready) continue;
        placed[h] = true;
        order.push_back(static_cast<int>(h));
        progress = true;
      }
    }
    for (std::size_t h = 0; h < n; ++h)
      if (gens[h].degree == deg && !placed[h]) return input;
  }
  std::vector<Polynomial> d = input.differentials();
  for (std::size_t t = 0; t < order.size(); ++t) {
    const int w = order[t];
    if (d[static_cast<std::size_t>(w)].is_zero()) continue;
    std::vector<int> prev(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    auto sources = monomials_of_degree(gens, prev, gens.degree(w));
    if (sources.empty() || sources.size() > kMaxCoboundarySources) continue;
    Cdga current(gens, d);

    std::map<Monomial, std::size_t> col;
    std::vector<Polynomial> images;
    for (const auto& s : sources) {
      Polynomial p;
      p.add_term(s, 1);
      images.push_back(apply_differential(current, p));
      for (const auto& [mono, c] : images.back().terms()) col.emplace(mono, col.size());
    }
    for (const auto& [mono, c] : d[static_cast<std::size_t>(w)].terms()) col.emplace(mono, col.size());
    // Order columns by monomial so elimination is reproducible.
    std::size_t next = 0;
    for (auto& [mono, idx] : col) idx = next++;

    // Rows [d(source) | e_source], eliminated on the first block only.
    const std::size_t width = col.size(), total = width + sources.size();
    linalg::Matrix A(sources.size(), total);
    for (std::size_t r = 0; r < sources.size(); ++r) {
      for (const auto& [mono, c] : images[r].terms()) A(r, col.at(mono)) = c;
      A(r, width + r) = 1;
    }
    auto piv = linalg::rref(A);
    Vector target(width);
    for (const auto& [mono, c] : d[static_cast<std::size_t>(w)].terms()) target[col.at(mono)] = c;
    Polynomial eta;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] >= width) break;
      Rational f = target[piv[r]];
      if (is_zero(f)) continue;
      for (std::size_t c = 0; c < width; ++c) target[c] -= f * A(r, c);
      for (std::size_t s = 0; s < sources.size(); ++s)
        if (!is_zero(A(r, width + s))) eta.add_term(sources[s], f * A(r, width + s));
    }
    if (eta.is_zero()) continue;
    Polynomial reduced;
    for (const auto& [mono, idx] : col) reduced.add_term(mono, target[idx]);
    d[static_cast<std::size_t>(w)] = reduced;
    // w_old = w_new + η in every later differential.
    std::vector<Polynomial> subst(n);
    for (std::size_t i = 0; i < n; ++i) subst[i] = Polynomial::generator(static_cast<int>(i));
    subst[static_cast<std::size_t>(w)] += eta;
    for (std::size_t i = t + 1; i < order.size(); ++i) {
      auto& dh = d[static_cast<std::size_t>(order[i])];
      if (dh.involves(w)) dh = substitute(gens, subst, dh);
    }
  }
  return Cdga(gens, std::move(d));
}

std::vector<Cdga> split_tensor_factors(const Cdga& model) {
  const auto& gens = model.generators();
  std::vector<Polynomial> forms;
  for (const auto& d : model.differentials()) {
    auto f = essential_forms(gens, d);
    forms.insert(forms.end(), f.begin(), f.end());
  }

  std::vector<NewGenerator> basis;
  std::set<std::string> originals, assigned;
  for (const auto& g : gens.all()) originals.insert(g.name);
  // A unit vector keeps its generator's name; anything else gets "e<deg>.<i>".
  auto add = [&](const std::vector<int>& O, const Vector& v, int deg) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) {
        ++nonzero;
        at = i;
      }
    std::string name = gens[static_cast<std::size_t>(O[at])].name;
    if (nonzero != 1 || v[at] != 1 || assigned.count(name)) {
      int i = 1;
      do name = "e" + std::to_string(deg) + "." + std::to_string(i++);
      while (assigned.count(name) || originals.count(name));
    }
    assigned.insert(name);
    basis.push_back({name, deg, v});
  };

  for (int deg : degrees_of(gens)) {
    auto O = of_degree(gens, deg);
    std::vector<Vector> U;
    for (const auto& f : forms)
      if (f.degree(gens) == deg) U.push_back(coordinates(f, O));
    U = linalg::span_basis(U, O.size());
    auto Z = cycles(model, O);
    auto UZ = linalg::intersect(U, Z, O.size());
    auto F = linalg::complete_within(UZ, Z, O.size());
    std::vector<Vector> both = U;
    both.insert(both.end(), Z.begin(), Z.end());
    both = linalg::span_basis(both, O.size());
    std::vector<Vector> units;
    for (std::size_t i = 0; i < O.size(); ++i) units.push_back(linalg::unit(O.size(), i));
    auto rest = linalg::complete_within(both, units, O.size());
    for (const auto& v : F) add(O, v, deg);
    for (const auto& v : U) add(O, v, deg);
    for (const auto& v : rest) add(O, v, deg);
  }
  Cdga M = change_basis(model, basis);
  const auto& N = M.generators();

  std::vector<int> parent(N.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (std::size_t h = 0; h < N.size(); ++h)
    for (const auto& [mono, c] : M.d(static_cast<int>(h)).terms())
      for (int g : mono) unite(static_cast<int>(h), g);

  std::map<int, std::vector<int>> parts;
  for (std::size_t h = 0; h < N.size(); ++h) parts[find(static_cast<int>(h))].push_back(static_cast<int>(h));
  std::vector<std::vector<int>> ordered;
  for (auto& [root, members] : parts) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end());
  std::vector<Cdga> out;
  for (const auto& members : ordered) out.push_back(restrict_to(M, members));
  return out;
}

LieSignature degree_one_signature(const Cdga& M) {
  const auto& gens = M.generators();
  const std::size_t n = gens.size();
  for (const auto& g : gens.all())
    if (g.degree != 1) throw Error("unsupported", "Lie signature needs a model generated in degree 1");
  // bracket[i][j] = coefficients of e_i e_j in the differentials (dual bracket).
  std::vector<std::vector<Vector>> bracket(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [mono, c] : M.d(static_cast<int>(k)).terms()) {
      if (mono.size() != 2) throw Error("unsupported", "differential is not quadratic");
      auto i = static_cast<std::size_t>(mono[0]), j = static_cast<std::size_t>(mono[1]);
      bracket[i][j][k] += c;
      bracket[j][i][k] -= c;
    }
  auto br = [&](const Vector& u, const Vector& v) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(v[j])) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * bracket[i][j][k];
      }
    }
    return out;
  };

  LieSignature sig;
  sig.dimension = static_cast<int>(n);
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(linalg::unit(n, i));
  sig.lower_central_series.push_back(static_cast<int>(n));
  while (!cur.empty()) {
    std::vector<Vector> next;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : cur) next.push_back(br(linalg::unit(n, i), v));
    next = linalg::span_basis(next, n);
    sig.lower_central_series.push_back(static_cast<int>(next.size()));
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }

  linalg::Matrix A(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) A(j * n + k, i) = bracket[i][j][k];
  sig.center = static_cast<int>(n == 0 ? 0 : linalg::nullspace(std::move(A)).size());
  return sig;
}

Factor classify_factor(const Cdga& M, const ClassifyOptions& opts) {
  if (!is_minimal(M)) throw Error("not-minimal", "classify_factor needs a minimal model");
  const auto& gens = M.generators();
  if (gens.size() == 0) return {FactorKind::Point, 0, 1, {}};
  if (gens.size() == 1 && M.d(0).is_zero()) {
    const int deg = gens.degree(0);
    const bool sphere = opts.odd_cycles_as_spheres && deg % 2 != 0;
    return {sphere ? FactorKind::Sphere : FactorKind::EilenbergMacLane, deg, 1, {}};
  }
  if (gens.size() == 2) {
    int x = gens.degree(0) < gens.degree(1) ? 0 : 1, y = 1 - x;
    const int n = gens.degree(x);
    if (n % 2 == 0 && gens.degree(y) == 2 * n - 1 && M.d(x).is_zero()) {
      const auto& dy = M.d(y);
      if (dy.size() == 1 && dy.terms().begin()->first == Monomial{x, x}) return {FactorKind::Sphere, n, 1, {}};
    }
  }
  bool all_one = true;
  for (const auto& g : gens.all()) all_one = all_one && g.degree == 1;
  if (all_one) {
    auto sig = degree_one_signature(M);
    if (sig == LieSignature{3, {3, 1, 0}, 1}) return {FactorKind::Heisenberg, 0, 1, {}};
    if (sig == LieSignature{5, {5, 2, 0}, 2}) return {FactorKind::NilmanifoldY, 0, 1, {}};
  }
  if (looks_like_space_x(M)) return {FactorKind::SpaceX, 0, 1, {}};
  return {FactorKind::Unrecognized, 0, 1, cdga_to_json(M).dump()};
}

std::vector<Factor> recognize(const Cdga& model, const ClassifyOptions& opts) {
  std::vector<Factor> out;
  for (const auto& part : split_tensor_factors(normalize_cycles(minimalize(model))))
    out.push_back(classify_factor(part, opts));
  return out;
}

namespace {
constexpr std::size_t kExhaustiveParameters = 4;
}  // namespace

HomotopyTypeDescriptor full_type(int m, int k, int n, bool pointed) {
  const auto M = build_sphere_mapping_model(m, k, n, pointed);
  const auto families = enumerate_augmentation_families(degree_zero_system(M));
  ClassifyOptions opts;
  opts.odd_cycles_as_spheres = n % 2 == 0;

  auto type_of = [&](const Augmentation& u) {
    auto factors = recognize(component_model(M, u).model, opts);
    if (n % 2 != 0 && !pointed)
      for (auto& f : factors)
        if (f.kind == FactorKind::EilenbergMacLane && f.degree == n) {
          f.kind = FactorKind::Sphere;
          break;
        }
    return normalized(std::move(factors));
  };

  const auto origin = type_of({});
  std::vector<std::vector<Factor>> countable;
  bool sampled = false;
  for (const auto& fam : families) {
    const std::size_t p = fam.parameters();
    if (p == 0) continue;
    // Which parameters are nonzero. Small families get every pattern; larger
    // ones all-nonzero, each single parameter, and each leave-one-out.
    std::vector<std::vector<bool>> patterns;
    if (p <= kExhaustiveParameters) {
      for (std::size_t bits = 1; bits < (std::size_t{1} << p); ++bits) {
        std::vector<bool> on(p);
        for (std::size_t i = 0; i < p; ++i) on[i] = (bits >> i) & 1;
        patterns.push_back(std::move(on));
      }
    } else {
      sampled = true;
      patterns.emplace_back(p, true);
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<bool> one(p, false), all_but(p, true);
        one[i] = true;
        all_but[i] = false;
        patterns.push_back(std::move(one));
        patterns.push_back(std::move(all_but));
      }
    }
    for (const auto& on : patterns) {
      std::vector<Rational> params(p);
      mpz_class base = 31;
      for (std::size_t i = 0; i < p; ++i, base *= 31)
        if (on[i]) params[i] = Rational(base + 1);
      auto t = type_of(fam.instantiate(params));
      if (std::find(countable.begin(), countable.end(), t) == countable.end()) countable.push_back(std::move(t));
    }
  }

  HomotopyTypeDescriptor d;
  if (std::find(countable.begin(), countable.end(), origin) == countable.end())
    d.groups.push_back({ComponentCount::One, origin});
  for (auto& t : countable) d.groups.push_back({ComponentCount::CountablyMany, std::move(t)});
  for (const auto& g : d.groups)
    if (g.factors.empty()) {
      d.notes.push_back("empty product read as a point");
      break;
    }
  if (sampled)
    d.notes.push_back("families with more than " + std::to_string(kExhaustiveParameters) +
                      " parameters were sampled, not swept");
  if (k >= 4 && n % 2 == 0)
    d.notes.push_back("augmentation families are reported separately; their rational equivalence is not decided");
  return d;
}

}  // namespace rhmap
