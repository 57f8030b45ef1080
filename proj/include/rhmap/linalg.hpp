#pragma once

#include <cstddef>
#include <vector>

#include "rhmap/rational.hpp"

namespace rhmap::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. Sizes here are small (a few
/// hundred at most), so dense exact elimination is adequate.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}; each vector has a 1 in its free column and the
/// basis is in canonical (RREF-derived) form.
std::vector<Vector> nullspace(Matrix m);

/// Canonical basis (nonzero RREF rows) of the span of the given vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);

bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t dim);

std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b,
                              std::size_t dim);

/// Vectors e_i completing `basis` (assumed independent) to a basis of the
/// span of `ambient`, picked greedily from `ambient` in order.
std::vector<Vector> complete_within(const std::vector<Vector>& basis,
                                    const std::vector<Vector>& ambient, std::size_t dim);

/// Inverse of a square invertible matrix; throws Error("singular") otherwise.
Matrix inverse(const Matrix& m);

/// Solves m x = b, returning std::nullopt-like empty vector flag via `ok`.
Vector solve(const Matrix& m, const Vector& b, bool& ok);

Vector unit(std::size_t dim, std::size_t i);

}  // namespace rhmap::linalg
