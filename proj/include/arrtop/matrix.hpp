#pragma once

#include "arrtop/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace arrtop {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q or Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f)
      : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(std::size_t n, Field f);
  /// Builds a matrix from rows of equal length; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, Field f = Field::Q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }

  void append_row(std::span<const Scalar> values);
  Matrix conj() const;

  Vector apply(std::span<const Scalar> v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Q;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form.  Pivots are taken as the first nonzero entry
/// scanning columns left to right, so the result is a canonical form of the
/// row space.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of the null space: one vector per free column, with that coordinate
/// set to 1 and the other free coordinates 0.
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolution {
  Vector point;
  std::vector<Vector> kernel;
  std::size_t dim() const { return kernel.size(); }
};

/// Solution set of A x = b; std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, std::span<const Scalar> b);

/// Sign of det(m) for a square matrix over Q; throws for Q(i) input.
int determinant_sign(const Matrix& m);

}  // namespace arrtop
