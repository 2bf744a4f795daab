#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbifold/scalar.hpp"

namespace orbifold {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A subspace of k^n stored by its canonical reduced row echelon basis, so
/// equality of subspaces is equality of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace from_spanning(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v with respect to basis(); nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// In-place Gauss-Jordan elimination to reduced row echelon form. Returns the
/// pivot columns.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(Matrix a);
Subspace nullspace(const Matrix& a);

struct AffineSolution {
  Vector particular;  // free variables set to zero
  Subspace homogeneous;
};

/// Solves A x = b. Returns nullopt when b is outside the column space.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& s, Vector v);

/// Determinant by elimination.
Scalar determinant(Matrix a);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& a);

}  // namespace orbifold
