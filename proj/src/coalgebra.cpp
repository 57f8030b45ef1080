#include "rhmap/coalgebra.hpp"

#include <map>
#include <sstream>

#include "rhmap/error.hpp"

namespace rhmap {

GradedCoalgebra::GradedCoalgebra(std::vector<DualElement> basis,
                                 std::vector<std::vector<CoproductTerm>> coproduct, int counit,
                                 bool reduced)
    : basis_(std::move(basis)), coproduct_(std::move(coproduct)), counit_(counit), reduced_(reduced) {}

int GradedCoalgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  throw Error("presentation-mismatch", "unknown coalgebra element '" + name + "'");
}

GradedCoalgebra dualize(const FiniteGradedAlgebra& B, bool pointed) {
  const int n = static_cast<int>(B.dimension());
  std::vector<int> primal_to_dual(static_cast<std::size_t>(n), -1);
  std::vector<DualElement> basis;
  for (int i = 0; i < n; ++i) {
    if (pointed && i == B.unit()) continue;
    primal_to_dual[static_cast<std::size_t>(i)] = static_cast<int>(basis.size());
    basis.push_back({B.element(i).dual_name, -B.element(i).degree, i});
  }
  std::vector<std::vector<CoproductTerm>> coproduct(basis.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int da = primal_to_dual[static_cast<std::size_t>(a)];
      int db = primal_to_dual[static_cast<std::size_t>(b)];
      if (da < 0 || db < 0) continue;
      bool odd = (B.element(a).degree % 2 != 0) && (B.element(b).degree % 2 != 0);
      for (const auto& [c, coeff] : B.product(a, b)) {
        int dc = primal_to_dual[static_cast<std::size_t>(c)];
        if (dc < 0) continue;
        coproduct[static_cast<std::size_t>(dc)].push_back({da, db, odd ? Rational(-coeff) : coeff});
      }
    }
  }
  int counit = pointed ? -1 : primal_to_dual[static_cast<std::size_t>(B.unit())];
  return GradedCoalgebra(std::move(basis), std::move(coproduct), counit, pointed);
}

std::vector<TensorTerm> iterated_coproduct(const GradedCoalgebra& C, int beta, int s, Association order) {
  if (s < 1) throw Error("bad-argument", "iterated coproduct needs s >= 1");
  std::map<std::vector<int>, Rational> current{{{beta}, Rational(1)}};
  for (int step = 1; step < s; ++step) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [factors, coeff] : current) {
      std::size_t pos = order == Association::Left ? 0 : factors.size() - 1;
      for (const auto& t : C.coproduct(factors[pos])) {
        std::vector<int> f;
        f.reserve(factors.size() + 1);
        f.insert(f.end(), factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(pos));
        f.push_back(t.left);
        f.push_back(t.right);
        f.insert(f.end(), factors.begin() + static_cast<std::ptrdiff_t>(pos) + 1, factors.end());
        next[f] += coeff * t.coeff;
      }
    }
    std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
    current = std::move(next);
  }
  std::vector<TensorTerm> out;
  for (auto& [factors, coeff] : current) out.push_back({factors, coeff});
  return out;
}

std::string to_string(const GradedCoalgebra& C, const std::vector<TensorTerm>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (sgn(t.coeff) < 0) os << "-";
    } else {
      os << (sgn(t.coeff) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << "*";
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      if (i > 0) os << "(x)";
      os << C.element(t.factors[i]).name;
    }
  }
  return os.str();
}

}  // namespace rhmap
