#include "rhmap/gca.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rhmap/error.hpp"
#include "rhmap/linalg.hpp"

namespace rhmap {

bool generator_less(const Generator& a, const Generator& b) {
  if (a.name != b.name) return a.name < b.name;
  return a.degree < b.degree;
}

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end(), generator_less);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    auto [it, inserted] = index_.emplace(gens_[i].name, static_cast<int>(i));
    if (!inserted) throw Error("duplicate-generator", "duplicate generator name '" + gens_[i].name + "'");
  }
}

std::optional<int> GeneratorSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GeneratorSet::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw Error("presentation-mismatch", "unknown generator '" + name + "'");
  return *idx;
}

SignedMonomial normalize_monomial(const GeneratorSet& gens, std::vector<int> factors) {
  int sign = 1;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i] > factors[j] && gens.odd(factors[i]) && gens.odd(factors[j])) sign = -sign;
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1] && gens.odd(factors[i])) return {{}, 0};
  return {std::move(factors), sign};
}

SignedMonomial normalize_monomial(const GeneratorSet& gens, const std::vector<std::string>& names) {
  std::vector<int> factors;
  factors.reserve(names.size());
  for (const auto& n : names) factors.push_back(gens.index_of(n));
  return normalize_monomial(gens, std::move(factors));
}

int monomial_degree(const GeneratorSet& gens, const Monomial& m) {
  int d = 0;
  for (int g : m) d += gens.degree(g);
  return d;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::generator(int index, const Rational& c) {
  Polynomial p;
  p.add_term({index}, c);
  return p;
}

Polynomial Polynomial::from_words(
    const GeneratorSet& gens, const std::vector<std::pair<Rational, std::vector<std::string>>>& words) {
  Polynomial p;
  for (const auto& [c, names] : words) {
    auto sm = normalize_monomial(gens, names);
    if (!sm.is_zero()) p.add_term(sm.monomial, c * sm.sign);
  }
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (rhmap::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (rhmap::is_zero(it->second)) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (rhmap::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  p *= Rational(-1);
  return p;
}

std::optional<int> Polynomial::degree(const GeneratorSet& gens) const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = monomial_degree(gens, m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool Polynomial::homogeneous(const GeneratorSet& gens) const {
  return is_zero() || degree(gens).has_value();
}

std::map<int, Rational> Polynomial::linear_part() const {
  std::map<int, Rational> out;
  for (const auto& [m, c] : terms_)
    if (m.size() == 1) out[m[0]] = c;
  return out;
}

Rational Polynomial::constant_term() const { return coefficient({}); }

bool Polynomial::is_decomposable() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.size() >= 2; });
}

bool Polynomial::involves(int generator) const {
  for (const auto& [m, c] : terms_)
    if (std::find(m.begin(), m.end(), generator) != m.end()) return true;
  return false;
}

Polynomial multiply(const GeneratorSet& gens, const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      std::vector<int> factors = m1;
      factors.insert(factors.end(), m2.begin(), m2.end());
      auto sm = normalize_monomial(gens, std::move(factors));
      if (!sm.is_zero()) out.add_term(sm.monomial, c1 * c2 * sm.sign);
    }
  }
  return out;
}

std::string to_string(const GeneratorSet& gens, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && !m.empty();
    if (!unit) os << to_string(mag);
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (i > 0 || !unit) os << "*";
      os << gens[static_cast<std::size_t>(m[i])].name;
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

Cdga::Cdga(GeneratorSet gens, std::vector<Polynomial> differential)
    : gens_(std::move(gens)), d_(std::move(differential)) {
  if (d_.size() != gens_.size())
    throw Error("presentation-mismatch", "differential count does not match generator count");
}

Cdga::Cdga(std::vector<Generator> gens,
           const std::map<std::string, std::vector<std::pair<Rational, std::vector<std::string>>>>& d)
    : gens_(std::move(gens)), d_(gens_.size()) {
  for (const auto& [name, words] : d) d_[static_cast<std::size_t>(gens_.index_of(name))] =
      Polynomial::from_words(gens_, words);
}

Polynomial apply_differential(const Cdga& model, const Polynomial& p) {
  const auto& gens = model.generators();
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto& dg = model.d(m[i]);
      if (!dg.is_zero()) {
        Polynomial left;
        left.add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i)), 1);
        Polynomial right;
        right.add_term(Monomial(m.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.end()), 1);
        Polynomial term = multiply(gens, left, multiply(gens, dg, right));
        Rational coeff = (prefix_degree % 2 != 0) ? Rational(-c) : c;
        out += coeff * term;
      }
      prefix_degree += gens.degree(m[i]);
    }
  }
  return out;
}

DSquaredFailure check_generator(const Cdga& model, int g, bool& ok) {
  const auto& gens = model.generators();
  const auto& dg = model.d(g);
  ok = true;
  if (!dg.is_zero()) {
    auto deg = dg.degree(gens);
    if (!deg || *deg != gens.degree(g) + 1) {
      ok = false;
      return {gens[static_cast<std::size_t>(g)].name, "degree", dg};
    }
  }
  Polynomial dd = apply_differential(model, dg);
  if (!dd.is_zero()) {
    ok = false;
    return {gens[static_cast<std::size_t>(g)].name, "d-squared", dd};
  }
  return {};
}

DSquaredReport check_d_squared(const Cdga& model) {
  DSquaredReport report;
  for (std::size_t g = 0; g < model.size(); ++g) {
    bool ok = true;
    auto failure = check_generator(model, static_cast<int>(g), ok);
    if (!ok) report.failures.push_back(std::move(failure));
  }
  return report;
}

Cdga sphere_model(int n) {
  if (n <= 0) throw Error("bad-sphere-dimension", "sphere dimension must be positive");
  if (n % 2 != 0) return Cdga(std::vector<Generator>{{"x", n}}, {});
  return Cdga(std::vector<Generator>{{"x", n}, {"y", 2 * n - 1}}, {{"y", {{1, {"x", "x"}}}}});
}

Polynomial substitute(const GeneratorSet& target, const std::vector<Polynomial>& images,
                      const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial acc = Polynomial::constant(c);
    for (int g : m) {
      const auto& img = images[static_cast<std::size_t>(g)];
      if (img.is_zero()) {
        acc = Polynomial();
        break;
      }
      acc = multiply(target, acc, img);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, const std::vector<int>& allowed,
                                          int degree) {
  std::vector<int> sorted = allowed;
  std::sort(sorted.begin(), sorted.end());
  for (int g : sorted)
    if (gens.degree(g) <= 0) throw Error("non-positive-degree", "monomial enumeration needs positive degrees");
  std::vector<Monomial> out;
  Monomial current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (pos == sorted.size()) return;
    int g = sorted[pos];
    int dg = gens.degree(g);
    int max_power = gens.odd(g) ? 1 : remaining / dg;
    rec(pos + 1, remaining);
    for (int e = 1; e <= max_power && e * dg <= remaining; ++e) {
      for (int t = 0; t < e; ++t) current.push_back(g);
      rec(pos + 1, remaining - e * dg);
      current.resize(current.size() - static_cast<std::size_t>(e));
    }
  };
  if (degree >= 0) rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::size_t differential_rank(const Cdga& model, const std::vector<int>& all, int degree) {
  if (degree < 0) return 0;
  auto source = monomials_of_degree(model.generators(), all, degree);
  auto target = monomials_of_degree(model.generators(), all, degree + 1);
  if (source.empty() || target.empty()) return 0;
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < target.size(); ++i) col[target[i]] = i;
  linalg::Matrix m(source.size(), target.size());
  for (std::size_t r = 0; r < source.size(); ++r) {
    Polynomial p;
    p.add_term(source[r], 1);
    const Polynomial dp = apply_differential(model, p);
    for (const auto& [mono, c] : dp.terms()) m(r, col.at(mono)) = c;
  }
  return linalg::rank(std::move(m));
}

}  // namespace

std::size_t cohomology_dimension(const Cdga& model, int degree) {
  std::vector<int> all(model.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  auto chains = monomials_of_degree(model.generators(), all, degree);
  return chains.size() - differential_rank(model, all, degree) - differential_rank(model, all, degree - 1);
}

}  // namespace rhmap
