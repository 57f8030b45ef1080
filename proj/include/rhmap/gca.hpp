#pragma once

// Free graded-commutative algebras over Q: generators, Koszul-signed
// monomials, polynomials, and Sullivan-style presentations (ΛW, d).

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rhmap/rational.hpp"

namespace rhmap {

struct Generator {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Fixed total order on generators: lexicographic on name, then degree.
bool generator_less(const Generator& a, const Generator& b);

/// An immutable, sorted list of generators with unique names. Monomials
/// refer to generators by their index in this list.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& all() const { return gens_; }
  int degree(int i) const { return gens_[static_cast<std::size_t>(i)].degree; }
  bool odd(int i) const { return gens_[static_cast<std::size_t>(i)].odd(); }

  std::optional<int> find(const std::string& name) const;
  /// Throws Error("presentation-mismatch") for unknown names.
  int index_of(const std::string& name) const;

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> index_;
};

/// Sorted generator indices. Even generators may repeat (powers); a repeated
/// odd generator never appears because such a word is zero.
using Monomial = std::vector<int>;

struct SignedMonomial {
  Monomial monomial;
  int sign = 1;  // 0 encodes the zero monomial
  bool is_zero() const { return sign == 0; }
};

SignedMonomial normalize_monomial(const GeneratorSet& gens, std::vector<int> factors);
SignedMonomial normalize_monomial(const GeneratorSet& gens, const std::vector<std::string>& names);

int monomial_degree(const GeneratorSet& gens, const Monomial& m);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial generator(int index, const Rational& c = 1);
  /// Builds from (coefficient, factor names) pairs, normalizing each word.
  static Polynomial from_words(const GeneratorSet& gens,
                               const std::vector<std::pair<Rational, std::vector<std::string>>>& words);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Degree of a homogeneous polynomial; nullopt for zero or inhomogeneous.
  std::optional<int> degree(const GeneratorSet& gens) const;
  bool homogeneous(const GeneratorSet& gens) const;

  /// Terms of word length exactly one, keyed by generator index.
  std::map<int, Rational> linear_part() const;
  Rational constant_term() const;
  bool is_decomposable() const;  // no constant or linear terms
  bool involves(int generator) const;

 private:
  Terms terms_;
};

Polynomial multiply(const GeneratorSet& gens, const Polynomial& p, const Polynomial& q);

std::string to_string(const GeneratorSet& gens, const Polynomial& p);

/// A free CDGA (ΛW, d) given by d on generators.
class Cdga {
 public:
  Cdga() = default;
  Cdga(GeneratorSet gens, std::vector<Polynomial> differential);
  /// Convenience: differential given by generator name; missing names map to 0.
  Cdga(std::vector<Generator> gens,
       const std::map<std::string, std::vector<std::pair<Rational, std::vector<std::string>>>>& d);

  const GeneratorSet& generators() const { return gens_; }
  const Polynomial& d(int generator) const { return d_[static_cast<std::size_t>(generator)]; }
  const Polynomial& d(const std::string& name) const { return d(gens_.index_of(name)); }
  const std::vector<Polynomial>& differentials() const { return d_; }
  std::size_t size() const { return gens_.size(); }

  friend bool operator==(const Cdga&, const Cdga&) = default;

 private:
  GeneratorSet gens_;
  std::vector<Polynomial> d_;
};

/// Extends d to all of ΛW by the graded Leibniz rule.
Polynomial apply_differential(const Cdga& model, const Polynomial& p);

struct DSquaredFailure {
  std::string generator;
  std::string reason;  // "degree" or "d-squared"
  Polynomial residue;
};

struct DSquaredReport {
  std::vector<DSquaredFailure> failures;
  bool pass() const { return failures.empty(); }
};

/// Checks |d g| = |g| + 1 and d(d(g)) = 0 for every generator g.
DSquaredReport check_d_squared(const Cdga& model);
DSquaredFailure check_generator(const Cdga& model, int generator, bool& ok);

/// Minimal model of S^n: (Λx, 0) for n odd, (Λ(x, y), dy = x²) for n even.
Cdga sphere_model(int n);

/// Algebra morphism ΛW → ΛW' determined by images of the source generators
/// (which must have matching degrees), applied to p.
Polynomial substitute(const GeneratorSet& target, const std::vector<Polynomial>& images,
                      const Polynomial& p);

/// All monomials of the given total degree in the listed generators, all of
/// which must have positive degree.
std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens,
                                          const std::vector<int>& allowed, int degree);

/// Cohomology dimension of a Sullivan algebra (generators of positive degree)
/// in the given degree, by exact cochain-level linear algebra.
std::size_t cohomology_dimension(const Cdga& model, int degree);

}  // namespace rhmap
