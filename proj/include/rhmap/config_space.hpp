#pragma once

// Rational cohomology of the ordered configuration space F(R^m, k), built as
// Λ(a_ij)/I by per-degree exact linear algebra.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rhmap/gca.hpp"
#include "rhmap/rational.hpp"

namespace rhmap {

/// Sparse linear combination of basis elements: (basis index, coefficient).
using BasisCombination = std::vector<std::pair<int, Rational>>;

struct BasisElement {
  std::string name;             // "1", "a12", "a12a23"
  std::string dual_name;        // "1", "a12", "a12.23"
  int degree = 0;
  std::vector<std::pair<int, int>> pairs;  // (i, j) factors, empty for the unit
};

/// Finite-dimensional graded-commutative unital algebra given by structure
/// constants on a named basis.
class FiniteGradedAlgebra {
 public:
  FiniteGradedAlgebra() = default;
  FiniteGradedAlgebra(std::vector<BasisElement> basis, int unit,
                      std::vector<std::vector<BasisCombination>> table);

  std::size_t dimension() const { return basis_.size(); }
  const BasisElement& element(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int unit() const { return unit_; }
  int index_of(const std::string& name) const;
  /// e_a · e_b expressed in the basis.
  const BasisCombination& product(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  Rational structure_constant(int a, int b, int c) const;
  /// dim by degree, ascending.
  std::map<int, int> dimensions() const;

 private:
  std::vector<BasisElement> basis_;
  int unit_ = 0;
  std::vector<std::vector<BasisCombination>> table_;
};

/// Multiplies two linear combinations in the algebra.
BasisCombination multiply(const FiniteGradedAlgebra& B, const BasisCombination& x,
                          const BasisCombination& y);

/// Cohomology of F(R^m, k) together with the data needed to reduce raw
/// words in the a_ij (i ≠ j) to the chosen basis.
class ConfigSpaceCohomology {
 public:
  ConfigSpaceCohomology(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  const FiniteGradedAlgebra& algebra() const { return algebra_; }
  /// Generators a_ij, i < j, each of degree m-1.
  const GeneratorSet& pair_generators() const { return pairs_; }

  /// Expresses a_{i1 j1} ... a_{is js} (any i ≠ j, any order) in the basis.
  BasisCombination reduce_to_basis(const std::vector<std::pair<int, int>>& word) const;

  /// The Arnold relation a_ij a_jr + a_jr a_ri + a_ri a_ij, as a polynomial in
  /// the canonical generators a_ij (i < j).
  Polynomial arnold_relation(int i, int j, int r) const;

  /// Rank of the relation span and dimension of the quotient in word length s.
  struct DegreeReport {
    int word_length = 0;
    std::size_t monomials = 0;
    std::size_t relation_rank = 0;
    std::size_t quotient_dimension = 0;
  };
  const std::vector<DegreeReport>& degree_reports() const { return reports_; }

 private:
  struct DegreeData {
    std::map<Monomial, BasisCombination> normal_forms;  // squarefree monomial -> basis
  };

  std::string pair_name(int i, int j) const;
  int pair_index(int i, int j) const;
  DegreeData reduce_degree(int s, int offset, std::vector<Monomial>& basis_words, DegreeReport& report) const;

  int m_ = 0, k_ = 0;
  GeneratorSet pairs_;
  std::vector<DegreeData> degrees_;
  std::vector<DegreeReport> reports_;
  std::map<Monomial, int> basis_index_;
  FiniteGradedAlgebra algebra_;
};

/// Largest k accepted by build_cohomology: 6 unless RHMAP_MAX_K is set.
int max_k_bound();

ConfigSpaceCohomology build_cohomology(int m, int k);

/// Expands (1 + t^{m-1})(1 + 2 t^{m-1}) ... (1 + (k-1) t^{m-1}); returns
/// (degree, coefficient) for nonzero coefficients, ascending.
std::vector<std::pair<int, std::uint64_t>> poincare_series(int m, int k);

/// Unsigned Stirling number of the first kind [k over j].
std::uint64_t stirling(int k, int j);

/// H*(S^d) as a FiniteGradedAlgebra with basis {1, a}, a² = 0.
FiniteGradedAlgebra sphere_cohomology(int d);

}  // namespace rhmap
