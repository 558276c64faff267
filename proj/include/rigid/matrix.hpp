#ifndef RIGID_MATRIX_HPP_
#define RIGID_MATRIX_HPP_

#include <optional>
#include <vector>

#include "rigid/polynomial.hpp"
#include "rigid/rational.hpp"

namespace rigid {

// Dense row-major matrix over Q. Everything is exact; elimination is plain
// Gauss-Jordan over the field since GMP rationals keep entries reduced.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t height);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const;
  Rational trace() const;
  Matrix pow(unsigned n) const;
  bool is_zero() const;

  std::size_t rank() const;
  Rational determinant() const;
  std::optional<Matrix> inverse() const;
  // Basis of {x : A x = 0}, one vector per free column of the RREF.
  std::vector<Vector> nullspace() const;
  // Some x with A x = b, if the system is consistent.
  std::optional<Vector> solve(const Vector& b) const;
  // Linearly independent subset of the columns spanning the column space.
  std::vector<Vector> column_space_basis() const;

  // det(t I - A), monic of degree rows(); Hessenberg reduction plus the
  // standard three-term recurrence, all exact.
  Polynomial charpoly() const;
  // det(1 - A t) = t^n charpoly(1/t).
  Polynomial inverse_charpoly() const;

  // Evaluate p(A) by Horner's rule.
  Matrix evaluate(const Polynomial& p) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

// Rank of a family of vectors of equal length.
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length);

}  // namespace rigid

#endif  // RIGID_MATRIX_HPP_
