#include "rhmap/config_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "rhmap/error.hpp"

namespace rhmap {

FiniteGradedAlgebra::FiniteGradedAlgebra(std::vector<BasisElement> basis, int unit,
                                         std::vector<std::vector<BasisCombination>> table)
    : basis_(std::move(basis)), unit_(unit), table_(std::move(table)) {}

int FiniteGradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name || basis_[i].dual_name == name) return static_cast<int>(i);
  throw Error("presentation-mismatch", "unknown basis element '" + name + "'");
}

Rational FiniteGradedAlgebra::structure_constant(int a, int b, int c) const {
  for (const auto& [idx, coeff] : product(a, b))
    if (idx == c) return coeff;
  return 0;
}

std::map<int, int> FiniteGradedAlgebra::dimensions() const {
  std::map<int, int> dims;
  for (const auto& e : basis_) ++dims[e.degree];
  return dims;
}

BasisCombination multiply(const FiniteGradedAlgebra& B, const BasisCombination& x,
                          const BasisCombination& y) {
  std::map<int, Rational> acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : B.product(a, b)) acc[c] += ca * cb * cc;
  BasisCombination out;
  for (const auto& [c, v] : acc)
    if (!is_zero(v)) out.emplace_back(c, v);
  return out;
}

int max_k_bound() {
  if (const char* env = std::getenv("RHMAP_MAX_K")) {
    try {
      int v = std::stoi(env);
      if (v >= 2) return v;
    } catch (const std::exception&) {
    }
  }
  return 6;
}

namespace {

int digits(int k) { return k >= 10 ? static_cast<int>(std::to_string(k).size()) : 1; }

std::string padded(int v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) s = "0" + s;
  return s;
}

// Subsets of {0..n-1} of size s, as sorted index vectors, in lex order.
std::vector<Monomial> subsets(int n, int s) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

bool squarefree(const Monomial& m) { return std::adjacent_find(m.begin(), m.end()) == m.end(); }

}  // namespace

std::string ConfigSpaceCohomology::pair_name(int i, int j) const {
  int w = digits(k_);
  return "a" + padded(i, w) + padded(j, w);
}

int ConfigSpaceCohomology::pair_index(int i, int j) const { return pairs_.index_of(pair_name(i, j)); }

Polynomial ConfigSpaceCohomology::arnold_relation(int i, int j, int r) const {
  // a_xy with x > y is (-1)^m a_yx.
  auto canonical = [&](int x, int y, int& sign) {
    if (x > y) {
      if (m_ % 2 != 0) sign = -sign;
      std::swap(x, y);
    }
    return pair_index(x, y);
  };
  const std::pair<int, int> words[3][2] = {{{i, j}, {j, r}}, {{j, r}, {r, i}}, {{r, i}, {i, j}}};
  Polynomial rel;
  for (const auto& w : words) {
    int sign = 1;
    int f0 = canonical(w[0].first, w[0].second, sign);
    int f1 = canonical(w[1].first, w[1].second, sign);
    auto sm = normalize_monomial(pairs_, std::vector<int>{f0, f1});
    if (!sm.is_zero()) rel.add_term(sm.monomial, Rational(sign * sm.sign));
  }
  return rel;
}

ConfigSpaceCohomology::DegreeData ConfigSpaceCohomology::reduce_degree(
    int s, int offset, std::vector<Monomial>& basis_words, DegreeReport& report) const {
  const int P = static_cast<int>(pairs_.size());
  auto words = subsets(P, s);
  std::map<Monomial, int> column;
  for (std::size_t c = 0; c < words.size(); ++c) column[words[c]] = static_cast<int>(c);

  // Basis candidates: each smaller index i used at most once.
  auto is_basis_word = [&](const Monomial& w) {
    std::vector<int> firsts;
    for (int g : w) firsts.push_back(std::stoi(pairs_[static_cast<std::size_t>(g)].name.substr(1, digits(k_))));
    std::sort(firsts.begin(), firsts.end());
    return std::adjacent_find(firsts.begin(), firsts.end()) == firsts.end();
  };
  std::vector<bool> canonical(words.size());
  for (std::size_t c = 0; c < words.size(); ++c) canonical[c] = is_basis_word(words[c]);

  using Row = std::map<int, Rational>;
  std::vector<Row> rows;
  std::map<int, int> pivot_row;

  auto eliminate = [&](Row row) {
    while (true) {
      int hit = -1;
      for (const auto& [c, v] : row)
        if (pivot_row.count(c)) {
          hit = c;
          break;
        }
      if (hit < 0) break;
      Rational f = row[hit];
      for (const auto& [c, v] : rows[static_cast<std::size_t>(pivot_row[hit])]) {
        Rational& slot = row[c];
        slot -= f * v;
        if (is_zero(slot)) row.erase(c);
      }
    }
    if (row.empty()) return;
    int pivot = -1;
    for (const auto& [c, v] : row)
      if (!canonical[static_cast<std::size_t>(c)]) pivot = c;  // largest non-basis column
    if (pivot < 0)
      throw Error("basis-validation", "relation among chosen basis monomials in word length " + std::to_string(s));
    Rational inv = 1 / row[pivot];
    for (auto& [c, v] : row) v *= inv;
    pivot_row[pivot] = static_cast<int>(rows.size());
    rows.push_back(std::move(row));
  };

  if (s >= 2) {
    auto cofactors = subsets(P, s - 2);
    for (int i = 1; i <= k_; ++i)
      for (int j = i + 1; j <= k_; ++j)
        for (int r = j + 1; r <= k_; ++r) {
          Polynomial rel = arnold_relation(i, j, r);
          for (const auto& t : cofactors) {
            Polynomial tp;
            tp.add_term(t, 1);
            Row row;
            const Polynomial product = multiply(pairs_, tp, rel);
            for (const auto& [mono, c] : product.terms())
              if (squarefree(mono)) row[column.at(mono)] += c;
            std::erase_if(row, [](const auto& kv) { return is_zero(kv.second); });
            eliminate(std::move(row));
          }
        }
  }

  report.word_length = s;
  report.monomials = words.size();
  report.relation_rank = rows.size();
  report.quotient_dimension = words.size() - rows.size();

  DegreeData data;
  for (std::size_t c = 0; c < words.size(); ++c) {
    if (canonical[c]) basis_words.push_back(words[c]);
    else if (!pivot_row.count(static_cast<int>(c)))
      throw Error("basis-validation", "non-basis monomial survives in word length " + std::to_string(s));
  }
  if (basis_words.size() != report.quotient_dimension)
    throw Error("basis-validation", "basis size disagrees with quotient dimension");

  // Normal forms, recursively through pivot rows; newer rows never contain
  // older pivots so the recursion terminates.
  std::map<int, std::map<Monomial, Rational>> memo;
  std::function<const std::map<Monomial, Rational>&(int)> nf = [&](int c) -> const std::map<Monomial, Rational>& {
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    std::map<Monomial, Rational> out;
    if (canonical[static_cast<std::size_t>(c)]) {
      out[words[static_cast<std::size_t>(c)]] = 1;
    } else {
      for (const auto& [c2, v] : rows[static_cast<std::size_t>(pivot_row.at(c))]) {
        if (c2 == c) continue;
        for (const auto& [w, coeff] : nf(c2)) out[w] -= v * coeff;
      }
      std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
    }
    return memo.emplace(c, std::move(out)).first->second;
  };
  for (std::size_t c = 0; c < words.size(); ++c) {
    BasisCombination combo;
    for (const auto& [w, coeff] : nf(static_cast<int>(c))) {
      auto local = std::find(basis_words.begin(), basis_words.end(), w) - basis_words.begin();
      combo.emplace_back(offset + static_cast<int>(local), coeff);
    }
    data.normal_forms[words[c]] = std::move(combo);
  }
  return data;
}

ConfigSpaceCohomology::ConfigSpaceCohomology(int m, int k) : m_(m), k_(k) {
  if (m < 2 || k < 2) throw Error("bad-argument", "configuration space needs m >= 2 and k >= 2");
  if (k > max_k_bound())
    throw Error("resource-limit", "k = " + std::to_string(k) + " exceeds the bound " +
                                      std::to_string(max_k_bound()) + " (set RHMAP_MAX_K to raise it)");
  std::vector<Generator> gens;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) gens.push_back({pair_name(i, j), m - 1});
  pairs_ = GeneratorSet(std::move(gens));

  std::vector<BasisElement> basis;
  std::vector<std::vector<Monomial>> words_by_degree;
  for (int s = 0; s < k; ++s) {
    std::vector<Monomial> basis_words;
    DegreeReport report;
    degrees_.push_back(reduce_degree(s, static_cast<int>(basis.size()), basis_words, report));
    reports_.push_back(report);
    for (const auto& w : basis_words) {
      BasisElement e;
      e.degree = s * (m - 1);
      if (w.empty()) {
        e.name = e.dual_name = "1";
      } else {
        e.name.clear();
        e.dual_name = "a";
        for (std::size_t f = 0; f < w.size(); ++f) {
          const std::string& pn = pairs_[static_cast<std::size_t>(w[f])].name;
          e.name += pn;
          if (f > 0) e.dual_name += ".";
          e.dual_name += pn.substr(1);
          int width = digits(k);
          e.pairs.emplace_back(std::stoi(pn.substr(1, width)), std::stoi(pn.substr(1 + width)));
        }
      }
      basis_index_[w] = static_cast<int>(basis.size());
      basis.push_back(std::move(e));
    }
    words_by_degree.push_back(std::move(basis_words));
  }

  std::vector<Monomial> basis_words;
  for (const auto& ws : words_by_degree) basis_words.insert(basis_words.end(), ws.begin(), ws.end());
  std::vector<std::vector<BasisCombination>> table(basis.size(), std::vector<BasisCombination>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::vector<int> factors = basis_words[a];
      factors.insert(factors.end(), basis_words[b].begin(), basis_words[b].end());
      auto sm = normalize_monomial(pairs_, factors);
      if (sm.is_zero() || !squarefree(sm.monomial) || static_cast<int>(sm.monomial.size()) >= k) continue;
      for (const auto& [idx, c] : degrees_[sm.monomial.size()].normal_forms.at(sm.monomial))
        table[a][b].emplace_back(idx, c * sm.sign);
    }
  algebra_ = FiniteGradedAlgebra(std::move(basis), 0, std::move(table));
}

BasisCombination ConfigSpaceCohomology::reduce_to_basis(const std::vector<std::pair<int, int>>& word) const {
  int sign = 1;
  std::vector<int> factors;
  for (auto [i, j] : word) {
    if (i == j || i < 1 || j < 1 || i > k_ || j > k_)
      throw Error("bad-argument", "a_ij needs distinct indices in 1..k");
    if (i > j) {
      if (m_ % 2 != 0) sign = -sign;
      std::swap(i, j);
    }
    factors.push_back(pair_index(i, j));
  }
  auto sm = normalize_monomial(pairs_, factors);
  if (sm.is_zero() || !squarefree(sm.monomial) || static_cast<int>(sm.monomial.size()) >= k_) return {};
  BasisCombination out;
  for (const auto& [idx, c] : degrees_[sm.monomial.size()].normal_forms.at(sm.monomial))
    out.emplace_back(idx, c * sm.sign * sign);
  return out;
}

ConfigSpaceCohomology build_cohomology(int m, int k) { return ConfigSpaceCohomology(m, k); }

std::uint64_t stirling(int k, int j) {
  if (k < 0 || j < 0 || j > k) throw Error("bad-argument", "stirling needs 0 <= j <= k");
  std::vector<std::uint64_t> row{1};  // [0, 0] = 1
  for (int n = 1; n <= k; ++n) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
      std::uint64_t carry = (i - 1 < static_cast<int>(row.size())) ? row[static_cast<std::size_t>(i - 1)] : 0;
      std::uint64_t stay = (i < static_cast<int>(row.size())) ? row[static_cast<std::size_t>(i)] : 0;
      std::uint64_t scaled = 0, sum = 0;
      if (__builtin_mul_overflow(stay, static_cast<std::uint64_t>(n - 1), &scaled) ||
          __builtin_add_overflow(carry, scaled, &sum))
        throw Error("resource-limit", "stirling number overflows 64 bits");
      next[static_cast<std::size_t>(i)] = sum;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(j)];
}

std::vector<std::pair<int, std::uint64_t>> poincare_series(int m, int k) {
  if (m < 2 || k < 1) throw Error("bad-argument", "poincare series needs m >= 2 and k >= 1");
  std::vector<std::uint64_t> coeffs{1};
  for (int l = 1; l <= k - 1; ++l) {
    std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i];
      next[i + 1] += coeffs[i] * static_cast<std::uint64_t>(l);
    }
    coeffs = std::move(next);
  }
  std::vector<std::pair<int, std::uint64_t>> out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) out.emplace_back(static_cast<int>(j) * (m - 1), coeffs[j]);
  return out;
}

FiniteGradedAlgebra sphere_cohomology(int d) {
  std::vector<BasisElement> basis{{"1", "1", 0, {}}, {"s", "s", d, {}}};
  std::vector<std::vector<BasisCombination>> table(2, std::vector<BasisCombination>(2));
  table[0][0] = {{0, 1}};
  table[0][1] = {{1, 1}};
  table[1][0] = {{1, 1}};
  return FiniteGradedAlgebra(std::move(basis), 0, std::move(table));
}

}  // namespace rhmap
