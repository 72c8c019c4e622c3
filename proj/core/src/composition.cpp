#include "albert/composition.hpp"

#include "albert/error.hpp"

namespace albert {

namespace {

// One doubling step on coordinate blocks of length n:
//   (u, v)(w, z) = (uw + lambda zbar v, z u + v wbar)
// params[level] is the parameter introduced when going from n to 2n.
Vec conj_block(const Vec& x) {
  Vec out = -x;
  out[0] = x[0];
  return out;
}

Vec mul_block(const Vec& a, const Vec& b, const std::array<Rational, 3>& params) {
  const std::size_t n = a.size();
  if (n == 1) return Vec{a[0] * b[0]};
  const std::size_t h = n / 2;
  const int level = h == 1 ? 0 : h == 2 ? 1 : 2;
  const Vec u(a.begin(), a.begin() + h), v(a.begin() + h, a.end());
  const Vec w(b.begin(), b.begin() + h), z(b.begin() + h, b.end());
  const Vec first = mul_block(u, w, params) + params[level] * mul_block(conj_block(z), v, params);
  const Vec second = mul_block(z, u, params) + mul_block(v, conj_block(w), params);
  Vec out(first);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace

CayleyPtr CayleyAlgebra::create(std::string label, Rational alpha, Rational beta, Rational gamma) {
  if (alpha == 0 || beta == 0 || gamma == 0)
    fail(Errc::InvariantViolation, label + ": doubling parameters must be nonzero");
  return std::make_shared<CayleyAlgebra>(Token{}, std::move(label),
                                         std::array<Rational, 3>{std::move(alpha), std::move(beta), std::move(gamma)});
}

CayleyAlgebra::CayleyAlgebra(Token, std::string label, std::array<Rational, 3> params)
    : label_(std::move(label)), params_(std::move(params)) {
  const Rational &a = params_[0], &b = params_[1], &c = params_[2];
  norm_diag_ = {1, -a, -b, a * b, -c, a * c, b * c, -a * b * c};
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Vec ei(dim), ej(dim);
      ei[i] = 1;
      ej[j] = 1;
      const Vec p = mul_block(ei, ej, params_);
      std::size_t nz = dim;
      for (std::size_t k = 0; k < dim; ++k) {
        if (p[k] == 0) continue;
        if (nz != dim) fail(Errc::InvariantViolation, "doubling produced a non-monomial basis product");
        nz = k;
      }
      table_index_[i][j] = nz;
      table_coeff_[i][j] = p[nz];
    }
  }
}

bool CayleyAlgebra::norm_is_definite() const {
  for (std::size_t i = 1; i < dim; ++i)
    if (norm_diag_[i] <= 0) return false;
  return true;
}

Vec CayleyAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      out[table_index_[i][j]] += table_coeff_[i][j] * a[i] * b[j];
    }
  }
  return out;
}

CayleyElem::CayleyElem(CayleyPtr parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != CayleyAlgebra::dim) fail(Errc::DimensionMismatch, "octonion needs 8 coordinates");
}

CayleyElem CayleyElem::one(const CayleyPtr& C) { return unit(C, 0); }

CayleyElem CayleyElem::unit(const CayleyPtr& C, std::size_t i) {
  Vec v(CayleyAlgebra::dim);
  v[i] = 1;
  return {C, std::move(v)};
}

CayleyElem CayleyElem::conj() const { return {parent_, conj_block(coords_)}; }

Rational CayleyElem::norm() const {
  Rational n;
  for (std::size_t i = 0; i < CayleyAlgebra::dim; ++i)
    if (coords_[i] != 0) n += parent_->norm_diagonal()[i] * coords_[i] * coords_[i];
  return n;
}

static void check_same(const CayleyElem& a, const CayleyElem& b) {
  if (a.parent() != b.parent()) fail(Errc::MixedParents, "octonions from different algebras");
}

CayleyElem operator+(const CayleyElem& a, const CayleyElem& b) {
  check_same(a, b);
  return {a.parent_, a.coords_ + b.coords_};
}

CayleyElem operator-(const CayleyElem& a, const CayleyElem& b) {
  check_same(a, b);
  return {a.parent_, a.coords_ - b.coords_};
}

CayleyElem operator*(const CayleyElem& a, const CayleyElem& b) {
  check_same(a, b);
  return {a.parent_, a.parent_->multiply(a.coords_, b.coords_)};
}

bool operator==(const CayleyElem& a, const CayleyElem& b) {
  check_same(a, b);
  return a.coords_ == b.coords_;
}

Rational norm_form(const CayleyElem& x, const CayleyElem& y) {
  check_same(x, y);
  Rational s;
  for (std::size_t i = 0; i < CayleyAlgebra::dim; ++i) s += x.parent()->norm_diagonal()[i] * x[i] * y[i];
  return s;
}

Matrix left_mult(const CayleyElem& a) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < CayleyAlgebra::dim; ++j) cols.push_back((a * CayleyElem::unit(a.parent(), j)).coords());
  return Matrix::from_columns(cols);
}

Matrix right_mult(const CayleyElem& a) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < CayleyAlgebra::dim; ++j) cols.push_back((CayleyElem::unit(a.parent(), j) * a).coords());
  return Matrix::from_columns(cols);
}

Matrix cayley_u_op(const CayleyElem& a) { return left_mult(a) * right_mult(a); }

std::vector<CayleyElem> standard_quaternions(const CayleyPtr& C) {
  return {CayleyElem::unit(C, 0), CayleyElem::unit(C, 1), CayleyElem::unit(C, 2), CayleyElem::unit(C, 3)};
}

Matrix reflection(const std::vector<CayleyElem>& h_basis) {
  if (h_basis.size() != 4) fail(Errc::NotSubalgebra, "a quaternion subalgebra needs 4 basis vectors");
  const CayleyPtr& C = h_basis.front().parent();
  std::vector<Vec> hv;
  for (const auto& h : h_basis) hv.push_back(h.coords());
  const Matrix H = Matrix::from_columns(hv);
  if (rank(H) != 4) fail(Errc::NotSubalgebra, "quaternion basis is linearly dependent");
  if (!solve(H, CayleyElem::one(C).coords())) fail(Errc::NotSubalgebra, "subspace does not contain 1");
  for (const auto& x : h_basis)
    for (const auto& y : h_basis)
      if (!solve(H, (x * y).coords())) fail(Errc::NotSubalgebra, "subspace is not closed under multiplication");

  // Orthogonal complement: rows are the linear functionals n(h_i, -).
  Matrix gram(4, CayleyAlgebra::dim);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < CayleyAlgebra::dim; ++j) gram(i, j) = C->norm_diagonal()[j] * hv[i][j];
  std::vector<Vec> cols = hv;
  for (auto& v : kernel(gram)) cols.push_back(std::move(v));
  const Matrix P = Matrix::from_columns(cols);
  const auto Pinv = inverse(P);
  if (!Pinv) fail(Errc::NotSubalgebra, "norm form is degenerate on the subalgebra");
  Matrix D = Matrix::identity(CayleyAlgebra::dim);
  for (std::size_t i = 4; i < CayleyAlgebra::dim; ++i) D(i, i) = -1;
  const Matrix tau = P * D * *Pinv;

  if (!(tau * tau).is_identity()) fail(Errc::InvariantViolation, "reflection does not square to the identity");
  for (std::size_t i = 0; i < CayleyAlgebra::dim; ++i) {
    const CayleyElem ei = CayleyElem::unit(C, i);
    const CayleyElem ti(C, tau.column(i));
    for (std::size_t j = 0; j < CayleyAlgebra::dim; ++j) {
      const CayleyElem ej = CayleyElem::unit(C, j);
      const CayleyElem tj(C, tau.column(j));
      if (tau.apply((ei * ej).coords()) != (ti * tj).coords())
        fail(Errc::InvariantViolation, "reflection is not multiplicative");
    }
  }
  return tau;
}

}  // namespace albert
