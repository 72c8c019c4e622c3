#pragma once

#include "albert/rational.hpp"

#include <optional>
#include <vector>

namespace albert {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;

  Matrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// Reduced row echelon form computed by integer fraction-free (Bareiss)
// forward elimination followed by rational back-substitution.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vec> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace albert
