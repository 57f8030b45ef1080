#pragma once

#include <string>
#include <vector>

#include "rhmap/config_space.hpp"
#include "rhmap/rational.hpp"

namespace rhmap {

struct CoproductTerm {
  int left = 0;
  int right = 0;
  Rational coeff;
};

struct TensorTerm {
  std::vector<int> factors;
  Rational coeff;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

struct DualElement {
  std::string name;  // "1", "a12", "a12.23"
  int degree = 0;    // minus the degree of the primal class
  int primal = 0;    // index of the primal basis element
};

/// B♯ = Hom(B, Q) with the coproduct dual to the multiplication, or the
/// reduced B₊♯ (dual unit dropped, reduced coproduct) when pointed.
class GradedCoalgebra {
 public:
  GradedCoalgebra(std::vector<DualElement> basis, std::vector<std::vector<CoproductTerm>> coproduct,
                  int counit, bool reduced);

  std::size_t dimension() const { return basis_.size(); }
  const DualElement& element(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const std::vector<DualElement>& basis() const { return basis_; }
  const std::vector<CoproductTerm>& coproduct(int i) const { return coproduct_[static_cast<std::size_t>(i)]; }
  /// Index of the dual unit, or -1 for a reduced coalgebra.
  int counit() const { return counit_; }
  bool reduced() const { return reduced_; }
  int index_of(const std::string& name) const;

 private:
  std::vector<DualElement> basis_;
  std::vector<std::vector<CoproductTerm>> coproduct_;
  int counit_ = -1;
  bool reduced_ = false;
};

/// Pairing <β⊗β', b⊗b'> = (-1)^{|β'||b|}<β,b><β',b'>, so the coefficient of
/// α_a⊗α_b in Δα_c is (-1)^{|a||b|} times the structure constant of e_a e_b
/// on e_c.
GradedCoalgebra dualize(const FiniteGradedAlgebra& B, bool pointed);

enum class Association { Left, Right };

/// s-fold coproduct of a basis element, s >= 2 (s = 1 returns β itself).
/// Left expands the first tensor factor repeatedly ((Δ⊗id)Δ...), Right the
/// last one. Terms are merged and sorted.
std::vector<TensorTerm> iterated_coproduct(const GradedCoalgebra& C, int beta, int s,
                                           Association order = Association::Left);

std::string to_string(const GradedCoalgebra& C, const std::vector<TensorTerm>& terms);

}  // namespace rhmap
