#include "albert/linalg.hpp"

#include "albert/error.hpp"

#include <utility>

namespace albert {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& e = (*this)(r, c);
      if (e != 0) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_zero() const { return albert::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj == 0) continue;
        mpq_mul(t.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        out(i, j) += t;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::DimensionMismatch, "matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::DimensionMismatch, "matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators.
IntRows integer_rows(const Matrix& m, std::vector<mpz_class>* scales) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = Rational(m(r, c) * l).get_num();
    if (scales) scales->push_back(l);
  }
  return rows;
}

struct Forward {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

// Bareiss elimination to row echelon form. Every entry below the current
// pivot row is a minor of the scaled input, so the division by the previous
// pivot is exact.
Forward bareiss(IntRows rows, std::size_t ncols) {
  Forward out;
  const std::size_t nrows = rows.size();
  mpz_class prev = 1;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < nrows; ++col) {
    std::size_t sel = prow;
    while (sel < nrows && rows[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    if (sel != prow) {
      std::swap(rows[sel], rows[prow]);
      out.sign = -out.sign;
    }
    const mpz_class& piv = rows[prow][col];
    for (std::size_t i = prow + 1; i < nrows; ++i) {
      const mpz_class lead = rows[i][col];
      for (std::size_t j = col + 1; j < ncols; ++j) {
        mpz_class v = piv * rows[i][j] - lead * rows[prow][j];
        mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev = piv;
    out.pivots.push_back(col);
    ++prow;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
  Forward fw = bareiss(integer_rows(m, nullptr), m.cols());
  const std::size_t rank = fw.pivots.size();
  Matrix r(rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    Rational inv(mpz_class(1), fw.rows[i][fw.pivots[i]]);
    inv.canonicalize();
    for (std::size_t j = fw.pivots[i]; j < m.cols(); ++j) {
      if (fw.rows[i][j] == 0) continue;
      Rational v(fw.rows[i][j]);
      r(i, j) = v * inv;
    }
  }
  // Clear above each pivot, bottom-up.
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t pc = fw.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = r(k, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j)
        if (r(i, j) != 0) r(k, j) -= f * r(i, j);
    }
  }
  return {std::move(r), std::move(fw.pivots)};
}

std::size_t rank(const Matrix& m) { return bareiss(integer_rows(m, nullptr), m.cols()).pivots.size(); }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> scales;
  Forward fw = bareiss(integer_rows(m, &scales), n);
  if (fw.pivots.size() < n) return 0;
  Rational det(fw.rows[n - 1][n - 1] * fw.sign);
  for (const auto& s : scales) det /= s;
  return det;
}

std::vector<Vec> kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, a.cols());
  return x;
}

}  // namespace albert
