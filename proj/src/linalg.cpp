#include "rhmap/linalg.hpp"

#include "rhmap/error.hpp"

namespace rhmap::linalg {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(lead_row, j))) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> nullspace(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  Matrix m = Matrix::from_rows(vectors, dim);
  auto pivots = rref(m);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
  return out;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t dim) {
  auto extended = basis;
  extended.push_back(v);
  return rank(Matrix::from_rows(extended, dim)) == rank(Matrix::from_rows(basis, dim));
}

std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b,
                              std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0; intersection = {sum x_i a_i}.
  Matrix m(dim, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) m(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m(r, a.size() + j) = -b[j][r];
  std::vector<Vector> out;
  for (const auto& sol : nullspace(m)) {
    Vector v(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t r = 0; r < dim; ++r) v[r] += sol[i] * a[i][r];
    out.push_back(std::move(v));
  }
  return span_basis(out, dim);
}

std::vector<Vector> complete_within(const std::vector<Vector>& basis,
                                    const std::vector<Vector>& ambient, std::size_t dim) {
  std::vector<Vector> current = basis;
  std::vector<Vector> added;
  std::size_t r = rank(Matrix::from_rows(current, dim));
  for (const auto& v : ambient) {
    current.push_back(v);
    std::size_t r2 = rank(Matrix::from_rows(current, dim));
    if (r2 > r) {
      added.push_back(v);
      r = r2;
    } else {
      current.pop_back();
    }
  }
  return added;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("singular", "inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("singular", "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Vector solve(const Matrix& m, const Vector& b, bool& ok) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  ok = pivots.empty() || pivots.back() != m.cols();
  Vector x(m.cols());
  if (!ok) return x;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Vector unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

}  // namespace rhmap::linalg
