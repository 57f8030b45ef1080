#include "rhmap/components.hpp"

#include <algorithm>
#include <sstream>

#include "rhmap/error.hpp"

namespace rhmap {

namespace {

using linalg::Vector;

Rational value_of(const Augmentation& u, const std::string& name) {
  auto it = u.values.find(name);
  return it == u.values.end() ? Rational(0) : it->second;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// S ∩ {v : l·v = 0}, as a canonical basis.
std::vector<Vector> cut(const std::vector<Vector>& S, const Vector& l, std::size_t dim) {
  linalg::Matrix row(1, S.size());
  for (std::size_t i = 0; i < S.size(); ++i) row(0, i) = dot(l, S[i]);
  std::vector<Vector> out;
  for (const auto& t : linalg::nullspace(row)) {
    Vector v(dim);
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t c = 0; c < dim; ++c) v[c] += t[i] * S[i][c];
    out.push_back(std::move(v));
  }
  return linalg::span_basis(out, dim);
}

bool contained(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  for (const auto& v : a)
    if (!linalg::in_span(b, v, dim)) return false;
  return true;
}

std::size_t nonzeros(const std::vector<Vector>& basis) {
  std::size_t n = 0;
  for (const auto& v : basis)
    for (const auto& c : v) n += !is_zero(c);
  return n;
}

std::vector<std::size_t> pivots(const std::vector<Vector>& basis) {
  std::vector<std::size_t> out;
  for (const auto& v : basis)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) {
        out.push_back(i);
        break;
      }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Augmentation AugmentationFamily::instantiate(const std::vector<Rational>& params) const {
  Augmentation u;
  for (std::size_t g = 0; g < unknowns.size(); ++g) {
    Rational v = 0;
    for (std::size_t i = 0; i < basis.size() && i < params.size(); ++i) v += params[i] * basis[i][g];
    u.values[unknowns[g]] = v;
  }
  return u;
}

bool AugmentationFamily::contains(const Augmentation& u) const {
  Vector v(unknowns.size());
  for (std::size_t g = 0; g < unknowns.size(); ++g) v[g] = value_of(u, unknowns[g]);
  return linalg::in_span(basis, v, unknowns.size());
}

std::string AugmentationFamily::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i)
    names.push_back(basis.size() == 1 ? "l" : "l" + std::to_string(i + 1));
  std::ostringstream os;
  os << '(';
  for (std::size_t g = 0; g < unknowns.size(); ++g) {
    if (g) os << ", ";
    std::string entry;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational& c = basis[i][g];
      if (is_zero(c)) continue;
      std::string mag = abs(c) == 1 ? names[i] : rhmap::to_string(Rational(abs(c))) + "*" + names[i];
      if (entry.empty())
        entry = (sgn(c) < 0 ? "-" : "") + mag;
      else
        entry += (sgn(c) < 0 ? " - " : " + ") + mag;
    }
    os << (entry.empty() ? "0" : entry);
  }
  os << ')';
  return os.str();
}

EquationSystem degree_zero_system(const MappingModel& M) {
  const auto& W = M.generators();
  std::vector<Generator> zero;
  for (const auto& g : W.all())
    if (g.degree == 0) zero.push_back(g);
  EquationSystem sys;
  sys.unknowns = GeneratorSet(std::move(zero));
  std::vector<Polynomial> images(W.size());
  for (std::size_t i = 0; i < W.size(); ++i)
    if (W[i].degree == 0) images[i] = Polynomial::generator(sys.unknowns.index_of(W[i].name));
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].degree != -1) continue;
    sys.sources.push_back(W[i].name);
    sys.equations.push_back(substitute(sys.unknowns, images, M.cdga().d(static_cast<int>(i))));
  }
  return sys;
}

std::vector<Vector> linear_factors(const EquationSystem& system, const Polynomial& p) {
  const std::size_t n = system.unknowns.size();
  std::size_t length = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (length != 0 && mono.size() != length)
      throw Error("unsolvable-by-factorization", "equation is not homogeneous: " + to_string(system.unknowns, p));
    length = mono.size();
  }
  if (length == 1) {
    Vector l(n);
    for (const auto& [g, c] : p.linear_part()) l[static_cast<std::size_t>(g)] = c;
    return {l};
  }
  if (length != 2)
    throw Error("unsolvable-by-factorization", "no rational linear factorization: " + to_string(system.unknowns, p));

  // Symmetric matrix of the quadratic form.
  linalg::Matrix S(n, n);
  for (const auto& [mono, c] : p.terms()) {
    auto a = static_cast<std::size_t>(mono[0]), b = static_cast<std::size_t>(mono[1]);
    if (a == b)
      S(a, a) += c;
    else {
      S(a, b) += c / 2;
      S(b, a) += c / 2;
    }
  }
  linalg::Matrix R = S;
  auto piv = linalg::rref(R);
  if (piv.size() == 1) return {R.row(0)};
  if (piv.size() != 2)
    throw Error("unsolvable-by-factorization", "quadratic form of rank " + std::to_string(piv.size()) +
                                                   ": " + to_string(system.unknowns, p));
  // p = a y1² + b y1 y2 + c y2² with y_i the two RREF rows.
  Rational a = S(piv[0], piv[0]), b = 2 * S(piv[0], piv[1]), c = S(piv[1], piv[1]);
  Vector y1 = R.row(0), y2 = R.row(1);
  auto combo = [&](const Rational& s, const Rational& t) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = s * y1[i] + t * y2[i];
    return v;
  };
  if (is_zero(a)) return {y2, combo(b, c)};
  Rational root;
  if (!is_square(b * b - 4 * a * c, root))
    throw Error("unsolvable-by-factorization", "irrational factors: " + to_string(system.unknowns, p));
  Rational t1 = (-b + root) / (2 * a), t2 = (-b - root) / (2 * a);
  return {combo(1, -t1), combo(1, -t2)};
}

std::vector<AugmentationFamily> enumerate_augmentation_families(const EquationSystem& system) {
  const std::size_t n = system.unknowns.size();
  std::vector<Vector> full;
  for (std::size_t i = 0; i < n; ++i) full.push_back(linalg::unit(n, i));
  std::vector<std::vector<Vector>> spaces{full};

  for (const auto& eq : system.equations) {
    if (eq.is_zero()) continue;
    if (!is_zero(eq.constant_term())) return {};
    auto factors = linear_factors(system, eq);
    std::vector<std::vector<Vector>> next;
    for (const auto& S : spaces) {
      bool vanishes = false;
      for (const auto& l : factors) {
        bool all = true;
        for (const auto& v : S) all = all && is_zero(dot(l, v));
        vanishes = vanishes || all;
      }
      if (vanishes) {
        next.push_back(S);
        continue;
      }
      for (const auto& l : factors) next.push_back(cut(S, l, n));
    }
    spaces = std::move(next);
  }

  // Drop duplicates and families contained in another one.
  std::vector<std::vector<Vector>> kept;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < spaces.size() && !drop; ++j) {
      if (i == j || !contained(spaces[i], spaces[j], n)) continue;
      drop = spaces[i].size() < spaces[j].size() || j < i;
    }
    if (!drop) kept.push_back(spaces[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    if (nonzeros(a) != nonzeros(b)) return nonzeros(a) < nonzeros(b);
    if (pivots(a) != pivots(b)) return pivots(a) < pivots(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t c = 0; c < a[i].size(); ++c)
        if (a[i][c] != b[i][c]) return a[i][c] > b[i][c];
    return false;
  });

  std::vector<std::string> names;
  for (const auto& g : system.unknowns.all()) names.push_back(g.name);
  std::vector<AugmentationFamily> out;
  for (auto& S : kept) out.push_back({names, std::move(S)});
  return out;
}

ValidationReport validate_augmentation(const MappingModel& M, const Augmentation& u) {
  const auto& W = M.generators();
  for (const auto& [name, value] : u.values) {
    auto g = W.find(name);
    if (!g || W.degree(*g) != 0)
      throw Error("presentation-mismatch", "'" + name + "' is not a degree-0 generator");
  }
  std::vector<Polynomial> images(W.size());
  for (std::size_t i = 0; i < W.size(); ++i)
    if (W[i].degree == 0) images[i] = Polynomial::constant(value_of(u, W[i].name));
  ValidationReport report;
  GeneratorSet none;
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].degree != -1) continue;
    if (!substitute(none, images, M.cdga().d(static_cast<int>(i))).is_zero()) report.violated.push_back(W[i].name);
  }
  return report;
}

ComponentModel component_model(const MappingModel& M, const Augmentation& u) {
  auto report = validate_augmentation(M, u);
  if (!report.pass())
    throw Error("invalid-augmentation", "augmentation violates the equation of " + report.violated.front());
  const auto& W = M.generators();
  std::vector<Generator> positive;
  for (const auto& g : W.all())
    if (g.degree >= 1) positive.push_back(g);
  GeneratorSet P(positive);

  std::vector<Polynomial> images(W.size());
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].degree == 0) images[i] = Polynomial::constant(value_of(u, W[i].name));
    if (W[i].degree >= 1) images[i] = Polynomial::generator(P.index_of(W[i].name));
  }
  std::vector<Polynomial> d(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) d[i] = substitute(P, images, M.cdga().d(W.index_of(P[i].name)));

  // Linear span of d(W^0) inside W^1.
  std::vector<int> ones;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P[i].degree == 1) ones.push_back(static_cast<int>(i));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].degree != 0) continue;
    Polynomial dw = substitute(P, images, M.cdga().d(static_cast<int>(i)));
    if (!is_zero(dw.constant_term()) || dw.linear_part().size() != dw.size())
      throw Error("unsupported", "d(" + W[i].name + ") has decomposable terms after substitution");
    Vector row(ones.size());
    for (const auto& [g, c] : dw.linear_part())
      row[static_cast<std::size_t>(std::find(ones.begin(), ones.end(), g) - ones.begin())] = c;
    rows.push_back(std::move(row));
  }
  auto span = linalg::span_basis(rows, ones.size());

  std::vector<bool> removed(P.size(), false);
  for (const auto& v : span) removed[static_cast<std::size_t>(ones[pivots({v})[0]])] = true;
  std::vector<Generator> kept;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (!removed[i]) kept.push_back(P[i]);
  GeneratorSet Q(kept);
  std::vector<Polynomial> images2(P.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    if (!removed[i]) images2[i] = Polynomial::generator(Q.index_of(P[i].name));
  for (const auto& v : span) {
    std::size_t p = pivots({v})[0];
    Polynomial img;
    for (std::size_t j = 0; j < ones.size(); ++j)
      if (j != p && !is_zero(v[j])) img.add_term({Q.index_of(P[static_cast<std::size_t>(ones[j])].name)}, -v[j]);
    images2[static_cast<std::size_t>(ones[p])] = img;
  }
  std::vector<Polynomial> dq(Q.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    if (!removed[i]) dq[static_cast<std::size_t>(Q.index_of(P[i].name))] = substitute(Q, images2, d[i]);
  return {Cdga(std::move(Q), std::move(dq)), u};
}

std::string to_string(Distinctness d) {
  switch (d) {
    case Distinctness::Distinct: return "distinct";
    case Distinctness::NotDistinct: return "not distinct";
    case Distinctness::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::vector<Vector> degree_zero_cycles(const MappingModel& M) {
  const auto& W = M.generators();
  std::vector<int> zero;
  for (std::size_t i = 0; i < W.size(); ++i)
    if (W[i].degree == 0) zero.push_back(static_cast<int>(i));
  std::vector<Polynomial> images(W.size());
  for (std::size_t i = 0; i < W.size(); ++i)
    if (W[i].degree >= 0) images[i] = Polynomial::generator(static_cast<int>(i));
  std::map<Monomial, std::size_t> column;
  std::vector<Polynomial> reduced;
  for (int g : zero) {
    reduced.push_back(substitute(W, images, M.cdga().d(g)));
    for (const auto& [mono, c] : reduced.back().terms()) column.emplace(mono, column.size());
  }
  linalg::Matrix A(column.size(), zero.size());
  for (std::size_t j = 0; j < zero.size(); ++j)
    for (const auto& [mono, c] : reduced[j].terms()) A(column.at(mono), j) = c;
  if (column.empty()) {
    std::vector<Vector> all;
    for (std::size_t j = 0; j < zero.size(); ++j) all.push_back(linalg::unit(zero.size(), j));
    return all;
  }
  return linalg::nullspace(std::move(A));
}

Distinctness components_distinct(const MappingModel& M, const Augmentation& a, const Augmentation& b) {
  const auto& W = M.generators();
  std::vector<std::string> zero;
  for (const auto& g : W.all())
    if (g.degree == 0) zero.push_back(g.name);
  Vector diff(zero.size());
  bool same = true;
  for (std::size_t i = 0; i < zero.size(); ++i) {
    diff[i] = value_of(a, zero[i]) - value_of(b, zero[i]);
    same = same && is_zero(diff[i]);
  }
  if (same) return Distinctness::NotDistinct;
  for (const auto& z : degree_zero_cycles(M))
    if (!is_zero(dot(z, diff))) return Distinctness::Distinct;
  return Distinctness::Undetermined;
}

Augmentation parse_augmentation(const std::string& text, const std::map<std::string, std::string>& aliases) {
  Augmentation u;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad-augmentation", "expected name=value, got '" + item + "'");
    std::string name = trim(item.substr(0, eq));
    auto alias = aliases.find(name);
    if (alias != aliases.end()) name = alias->second;
    Rational value;
    try {
      value = parse_rational(trim(item.substr(eq + 1)));
    } catch (const Error&) {
      throw Error("bad-augmentation", "bad value in '" + item + "'");
    }
    if (name.empty() || u.values.count(name)) throw Error("bad-augmentation", "bad or repeated name in '" + item + "'");
    u.values[name] = value;
  }
  return u;
}

}  // namespace rhmap
