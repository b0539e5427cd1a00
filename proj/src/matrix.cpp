#include "arrtop/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace arrtop {

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f) {
  Matrix m(0, rows.empty() ? cols : rows.front().size(), f);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, Field f) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Scalar::from_int(rows[r][c], f);
  }
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (const auto& v : values) {
    if (v.field() != field_) throw std::invalid_argument("row field mismatch");
    data_.push_back(v);
  }
  ++rows_;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& v : m.data_) v = v.conj();
  return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    Scalar inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(r, k).is_zero()) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivot_columns[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == a.cols()) return std::nullopt;
  AffineSolution sol;
  sol.point.assign(a.cols(), Scalar::zero(a.field()));
  for (std::size_t r = 0; r < rr.rank; ++r) sol.point[rr.pivot_columns[r]] = rr.reduced(r, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

int determinant_sign(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.field() != Field::Q) throw std::invalid_argument("determinant sign needs a real matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      sign = -sign;
    }
    if (sgn(a(c, c).re()) < 0) sign = -sign;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
    }
  }
  return sign;
}

}  // namespace arrtop
