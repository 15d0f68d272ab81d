#include "edmf/matrix.hpp"

#include <sstream>
#include <utility>

namespace edmf {

Matrix::Matrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

Matrix::Matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw ValidationError("matrix entry count " + std::to_string(data_.size()) + " != " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  for (const auto& e : data_)
    if (e.ring() != ring) throw MixedRingError("matrix entry from " + e.ring().to_string() +
                                               " in a matrix over " + ring.to_string());
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::diagonal(const Ring& ring, std::span<const Element> diag) {
  Matrix m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i].ring() != ring) throw MixedRingError("diagonal entry from another ring");
    m(i, i) = diag[i];
  }
  return m;
}

Matrix Matrix::from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<Element> entries;
  entries.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ValidationError("ragged matrix literal");
    for (long v : row) entries.push_back(ring.from_int(v));
  }
  return Matrix(ring, m, n, std::move(entries));
}

Matrix Matrix::column(const Ring& ring, std::span<const Element> entries) {
  return Matrix(ring, entries.size(), 1, std::vector<Element>(entries.begin(), entries.end()));
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw PreconditionError("block out of range");
  Matrix b(ring_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
  require_same_ring(*this, b);
  if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) throw PreconditionError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  require_same_ring(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  require_same_ring(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols_ != b.rows_)
    throw PreconditionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator*(const Element& s, Matrix a) {
  if (s.ring() != a.ring_) throw MixedRingError("scalar from another ring");
  for (auto& e : a.data_) e *= s;
  return a;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw PreconditionError("block2x2 shape mismatch");
  Matrix m(a.ring(), a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("hstack row mismatch");
  Matrix m(a.ring(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw PreconditionError("vstack column mismatch");
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  return block2x2(a, Matrix(a.ring(), a.rows(), b.cols()), Matrix(a.ring(), b.rows(), a.cols()), b);
}

Element determinant(const Matrix& a) {
  if (!a.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const Ring& ring = a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  Matrix m = a;
  bool negate = false;
  Element previous = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return ring.zero();
      m.swap_rows(k, swap_with);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
    }
    previous = m(k, k);
  }
  Element det = m(n - 1, n - 1);
  return negate ? -det : det;
}

Element determinant_cofactor(const Matrix& a) {
  if (!a.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  const Ring& ring = a.ring();
  if (n == 0) return ring.one();
  if (n == 1) return a(0, 0);
  Element det = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Matrix minor(ring, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    Element term = a(0, j) * determinant_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring())
    throw MixedRingError("mixed ring instances: " + a.ring().to_string() + " and " +
                         b.ring().to_string());
}

Matrix vectorize(const Matrix& x) {
  return Matrix(x.ring(), x.rows() * x.cols(), 1,
                std::vector<Element>(x.entries().begin(), x.entries().end()));
}

Matrix unvectorize(const Matrix& column, std::size_t rows, std::size_t cols, std::size_t col,
                   std::size_t offset) {
  if (offset + rows * cols > column.rows()) throw PreconditionError("unvectorize out of range");
  Matrix x(column.ring(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = column(offset + i * cols + j, col);
  return x;
}

Matrix sandwich_operator(const Matrix& left, const Matrix& right) {
  require_same_ring(left, right);
  const std::size_t p = left.rows(), r = left.cols(), c = right.rows(), q = right.cols();
  Matrix op(left.ring(), p * q, r * c);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < r; ++a) {
      if (left(i, a).is_zero()) continue;
      for (std::size_t b = 0; b < c; ++b)
        for (std::size_t j = 0; j < q; ++j) {
          if (right(b, j).is_zero()) continue;
          op(i * q + j, a * c + b) = left(i, a) * right(b, j);
        }
    }
  return op;
}

}  // namespace edmf
