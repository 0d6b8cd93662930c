#include "qtilt/matrix.hpp"

#include <algorithm>

namespace qtilt {

Matrix::Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("matrix: ragged initializer");
    for (std::int64_t v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("matrix: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("matrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix: shape mismatch in product");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j).add_mul(a, o(k, j));
    }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw Error("matrix: shape mismatch in matrix-vector product");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i].add_mul((*this)(i, k), v[k]);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, 1);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, -1);
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix: shape mismatch in sum");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i].add_mul(o.data_[i], s);
}

Matrix Matrix::column_block(std::size_t c0, std::size_t n) const {
  Matrix b(rows_, n);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = (*this)(r, c0 + c);
  return b;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t n) const {
  Matrix b(n, cols_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(r0 + r, c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("matrix: hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("matrix: vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = -m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j).add_mul(f, m(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!red(i, f).is_zero()) v[pivots[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Solution s;
  s.particular.assign(a.cols(), Scalar());
  for (std::size_t i = 0; i < pivots.size(); ++i) s.particular[pivots[i]] = red(i, a.cols());
  s.kernel = kernel_basis(a);
  return s;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve: right-hand side row mismatch");
  Matrix aug = hstack(a, b);
  auto [red, pivots] = rref(std::move(aug));
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = red(i, a.cols() + c);
  return x;
}

Matrix left_kernel(const Matrix& m) {
  auto basis = kernel_basis(m.transpose());
  return Matrix::from_rows(basis, m.rows());
}

Matrix column_space(const Matrix& m) {
  auto pivots = rref(m).pivots;
  Matrix out(m.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = m(r, pivots[j]);
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = -c;
    const Vector& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < n_; ++j)
      if (!row[j].is_zero()) v[j].add_mul(f, row[j]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::add(const Vector& v) {
  if (v.size() != n_) throw Error("echelon: vector length mismatch");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  Scalar inv = r[p].inverse();
  for (std::size_t j = p; j < n_; ++j) r[j] *= inv;
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = -row[p];
    for (std::size_t j = p; j < n_; ++j)
      if (!r[j].is_zero()) row[j].add_mul(f, r[j]);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

}  // namespace qtilt
