#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grmlab/field.hpp"

namespace grmlab {

using Scalar = PrimeField::value_type;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over F_p. A matrix with rows x cols acts on column
/// vectors of length cols.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(PrimeField field, std::size_t n);
  /// Builds a matrix from integer rows; entries are reduced modulo p.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols_if_empty = 0);
  /// Stacks row vectors; every vector must have length `cols`.
  static Matrix from_vectors(PrimeField field, std::size_t cols, std::span<const Vector> rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& data() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix rref;  ///< same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Square matrix inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// A linear subspace of F_p^n stored by its reduced echelon basis, one basis
/// vector per row. The echelon basis is canonical, so equality is comparison.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient_dim);  ///< the zero subspace

  static Subspace zero(PrimeField field, std::size_t n) { return Subspace(field, n); }
  static Subspace full(PrimeField field, std::size_t n);
  static Subspace span(PrimeField field, std::size_t n, std::span<const Vector> vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  /// Column space of m.
  static Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Reduces v against the basis; the result vanishes at every pivot column.
  Vector reduce_vector(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to the echelon basis; v must lie in the
  /// subspace (checked).
  Vector coordinates(std::span<const Scalar> v) const;
  /// Sum with one more vector.
  Subspace with(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}, dimension cols - rank.
Subspace kernel_basis(const Matrix& m);

struct MeetJoin {
  Subspace intersection;
  Subspace sum;
};
MeetJoin subspace_meet_join(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace add(const Subspace& u, const Subspace& v);

/// Projection F^n -> F^n/u (kernel exactly u) and a right inverse lift.
struct QuotientData {
  Matrix projection;  ///< (n - dim u) x n
  Matrix lift;        ///< n x (n - dim u), projection * lift = identity
};
QuotientData quotient_data(std::size_t ambient_dim, const Subspace& u);

}  // namespace grmlab
