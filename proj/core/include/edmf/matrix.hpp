#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "edmf/ring.hpp"

namespace edmf {

// Dense row-major matrix over one ring instance. Zero-dimensional shapes
// (0 x n, m x 0) are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix diagonal(const Ring& ring, std::span<const Element> diag);
  static Matrix scalar(const Element& e) { return Matrix(e.ring(), 1, 1, {e}); }
  // Convenience for tests and examples: integer literals mapped into `ring`.
  static Matrix from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows);
  // Column vector.
  static Matrix column(const Ring& ring, std::span<const Element> entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Element> entries() const { return data_; }

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

  bool is_zero() const;
  bool is_diagonal() const;

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Element& s, Matrix a);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // Row operations used by elimination routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

// [[a, b], [c, d]] block assembly; blocks must have conforming shapes.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Fraction-free (Bareiss) determinant. Works over any integral domain.
Element determinant(const Matrix& a);

// Determinant by cofactor expansion along the first row. Exponential;
// intended for minors of small matrices.
Element determinant_cofactor(const Matrix& a);

void require_same_ring(const Matrix& a, const Matrix& b);

// Row-major vectorization: entry (i, j) of an r x c matrix sits at i*c + j.
Matrix vectorize(const Matrix& x);
Matrix unvectorize(const Matrix& column, std::size_t rows, std::size_t cols, std::size_t col = 0,
                   std::size_t offset = 0);

// Matrix of X -> left * X * right acting on vectorize(X).
Matrix sandwich_operator(const Matrix& left, const Matrix& right);

}  // namespace edmf
