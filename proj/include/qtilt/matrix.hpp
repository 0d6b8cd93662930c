#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "qtilt/scalar.hpp"

namespace qtilt {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the active field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  /// this += s * o
  void add_scaled(const Matrix& o, const Scalar& s);

  /// Columns [c0, c0 + n).
  Matrix column_block(std::size_t c0, std::size_t n) const;
  Matrix row_block(std::size_t r0, std::size_t n) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);

struct Solution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Solves a x = b. Returns nullopt when b is not in the column space.
std::optional<Solution> solve(const Matrix& a, const Vector& b);

/// Solves a X = b column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// Rows spanning {w : w m = 0}, as a matrix with cols = m.rows().
Matrix left_kernel(const Matrix& m);

/// Columns forming a basis of the column space (chosen among m's columns).
Matrix column_space(const Matrix& m);

/// Incrementally built echelon basis of a subspace of K^n.
///
/// Rows are kept fully reduced against each other, so reduce() returns a
/// canonical representative of v modulo the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  /// Returns true if v was independent of the current span (and adds it).
  bool add(const Vector& v);
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vector& v);

}  // namespace qtilt
