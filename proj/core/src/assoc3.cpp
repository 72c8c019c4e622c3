#include "albert/assoc3.hpp"

#include "albert/error.hpp"

#include <sstream>

namespace albert {

namespace {

using Entries = std::vector<FieldElem>;

Entries mat_mul(const Entries& a, const Entries& b) {
  Entries out(9, FieldElem::zero(a[0].parent()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      const FieldElem& aik = a[3 * i + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j)
        if (!b[3 * k + j].is_zero()) out[3 * i + j] += aik * b[3 * k + j];
    }
  return out;
}

FieldElem mat_det(const Entries& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Entries conj_transpose(const Entries& a, const Automorphism& bar) {
  Entries out(9);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[3 * c + r] = a[3 * r + c].apply(bar);
  return out;
}

FieldElem apply_power(const FieldElem& x, const Automorphism& s, std::size_t n) {
  FieldElem out = x;
  for (std::size_t i = 0; i < n; ++i) out = out.apply(s);
  return out;
}

}  // namespace

AssocPtr Assoc3Algebra::matrix3(std::string label, FieldPtr F) {
  auto A = std::make_shared<Assoc3Algebra>(Token{}, std::move(label), AssocBackend::Matrix3, F);
  A->center_ = std::move(F);
  return A;
}

AssocPtr Assoc3Algebra::matrix3_unitary(std::string label, FieldPtr K, std::vector<FieldElem> g) {
  if (K->degree() != 2 || !K->is_galois())
    fail(Errc::WrongBackend, label + ": a unitary involution needs a quadratic Galois center");
  if (g.size() != 9) fail(Errc::DimensionMismatch, label + ": involution matrix needs 9 entries");
  auto A = std::make_shared<Assoc3Algebra>(Token{}, label, AssocBackend::Matrix3, K);
  A->center_ = K;
  A->bar_ = K->automorphisms()[1];
  if (conj_transpose(g, A->bar_) != g) fail(Errc::NotSymmetric, label + ": involution matrix is not hermitian");
  const FieldElem det = mat_det(g);
  if (det.is_zero()) fail(Errc::NotInvertible, label + ": involution matrix is singular");
  Entries adj(9);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj[3 * r + c] = g[3 * r1 + c1] * g[3 * r2 + c2] - g[3 * r1 + c2] * g[3 * r2 + c1];
    }
  const FieldElem dinv = det.inverse();
  for (auto& e : adj) e = dinv * e;
  if (!AssocElem(A, mat_mul(g, adj)).is_central() || !mat_mul(g, adj)[0].is_one())
    fail(Errc::InvariantViolation, label + ": inverse of involution matrix failed");
  A->g_ = std::move(g);
  A->g_inv_ = std::move(adj);
  return A;
}

AssocPtr Assoc3Algebra::cyclic(std::string label, FieldPtr L, const Automorphism& sigma, Rational gamma) {
  if (L->degree() != 3 || !L->is_galois())
    fail(Errc::NotGalois, label + ": cyclic algebras need a Galois cubic field");
  if (sigma.is_identity()) fail(Errc::InvalidAutomorphism, label + ": sigma must generate Gal(L/Q)");
  if (gamma == 0) fail(Errc::InvariantViolation, label + ": gamma must be nonzero");
  auto A = std::make_shared<Assoc3Algebra>(Token{}, std::move(label), AssocBackend::Cyclic, L);
  A->center_ = NumberField::rationals();
  A->sigma_ = sigma;
  A->sigma_inv_ = L->automorphism(sigma.apply(sigma.image()));
  A->gamma_ = std::move(gamma);
  return A;
}

Assoc3Algebra::Assoc3Algebra(Token, std::string label, AssocBackend backend, FieldPtr field)
    : label_(std::move(label)), backend_(backend), field_(std::move(field)) {}

FieldElem Assoc3Algebra::embed_center(const FieldElem& c) const {
  if (c.parent() == field_) return c;
  if (c.parent()->degree() == 1) return FieldElem::rational(field_, c.coeffs()[0]);
  fail(Errc::MixedParents, label_ + ": scalar is not in the center");
}

AssocElem::AssocElem(AssocPtr parent, std::vector<FieldElem> entries)
    : parent_(std::move(parent)), entries_(std::move(entries)) {
  if (entries_.size() != parent_->entry_count()) fail(Errc::DimensionMismatch, parent_->label() + ": wrong entry count");
  for (const auto& e : entries_)
    if (e.parent() != parent_->field()) fail(Errc::MixedParents, parent_->label() + ": entry from a foreign field");
}

AssocElem AssocElem::zero(const AssocPtr& A) {
  return {A, std::vector<FieldElem>(A->entry_count(), FieldElem::zero(A->field()))};
}

AssocElem AssocElem::one(const AssocPtr& A) { return scalar(A, Rational(1)); }

AssocElem AssocElem::scalar(const AssocPtr& A, const FieldElem& c) {
  AssocElem out = zero(A);
  const FieldElem e = A->embed_center(c);
  if (A->backend() == AssocBackend::Matrix3) {
    for (std::size_t i = 0; i < 3; ++i) out.entries_[4 * i] = e;
  } else {
    out.entries_[0] = e;
  }
  return out;
}

AssocElem AssocElem::scalar(const AssocPtr& A, const Rational& c) {
  return scalar(A, FieldElem::rational(A->field(), c));
}

AssocElem AssocElem::from_coords(const AssocPtr& A, const Vec& coords) {
  const std::size_t d = A->field()->degree();
  if (coords.size() != A->q_dim()) fail(Errc::DimensionMismatch, A->label() + ": wrong coordinate count");
  std::vector<FieldElem> entries;
  for (std::size_t i = 0; i < A->entry_count(); ++i)
    entries.emplace_back(A->field(), Vec(coords.begin() + i * d, coords.begin() + (i + 1) * d));
  return {A, std::move(entries)};
}

AssocElem AssocElem::matrix_unit(const AssocPtr& A, std::size_t i, std::size_t j) {
  if (A->backend() != AssocBackend::Matrix3) fail(Errc::WrongBackend, "matrix units need a matrix algebra");
  AssocElem out = zero(A);
  out.entries_[3 * i + j] = FieldElem::one(A->field());
  return out;
}

AssocElem AssocElem::from_subfield(const AssocPtr& A, const FieldElem& l) {
  if (A->backend() != AssocBackend::Cyclic) fail(Errc::WrongBackend, "subfield elements need a cyclic algebra");
  AssocElem out = zero(A);
  out.entries_[0] = l;
  return out;
}

AssocElem AssocElem::z(const AssocPtr& A) {
  if (A->backend() != AssocBackend::Cyclic) fail(Errc::WrongBackend, "z exists only in a cyclic algebra");
  AssocElem out = zero(A);
  out.entries_[1] = FieldElem::one(A->field());
  return out;
}

Vec AssocElem::coords() const {
  Vec out;
  out.reserve(parent_->q_dim());
  for (const auto& e : entries_) out.insert(out.end(), e.coeffs().begin(), e.coeffs().end());
  return out;
}

bool AssocElem::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool AssocElem::is_central() const {
  if (parent_->backend() == AssocBackend::Cyclic) return entries_[0].is_rational() && entries_[1].is_zero() && entries_[2].is_zero();
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (r != c && !at(r, c).is_zero()) return false;
  return at(0, 0) == at(1, 1) && at(1, 1) == at(2, 2);
}

bool AssocElem::in_subfield() const {
  if (parent_->backend() != AssocBackend::Cyclic) fail(Errc::WrongBackend, "subfield test needs a cyclic algebra");
  return entries_[1].is_zero() && entries_[2].is_zero();
}

void AssocElem::check_same(const AssocElem& o) const {
  if (parent_ != o.parent_) fail(Errc::MixedParents, "elements of " + parent_->label() + " and " + o.parent_->label());
}

AssocElem AssocElem::operator-() const {
  AssocElem out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

AssocElem& AssocElem::operator+=(const AssocElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

AssocElem& AssocElem::operator-=(const AssocElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

AssocElem operator*(const AssocElem& a, const AssocElem& b) {
  a.check_same(b);
  const AssocPtr& A = a.parent_;
  if (A->backend() == AssocBackend::Matrix3) return {A, mat_mul(a.entries_, b.entries_)};
  // (sum l_i z^i)(sum m_j z^j) = sum l_i sigma^i(m_j) z^{i+j}, z^3 = gamma
  std::vector<FieldElem> out(3, FieldElem::zero(A->field()));
  for (std::size_t j = 0; j < 3; ++j) {
    if (b.entries_[j].is_zero()) continue;
    FieldElem m = b.entries_[j];
    for (std::size_t i = 0; i < 3; ++i) {
      if (!a.entries_[i].is_zero()) {
        FieldElem term = a.entries_[i] * m;
        if (i + j >= 3) term *= A->gamma();
        out[(i + j) % 3] += term;
      }
      m = m.apply(A->sigma());
    }
  }
  return {A, std::move(out)};
}

AssocElem operator*(const Rational& s, AssocElem a) {
  for (auto& e : a.entries_) e *= s;
  return a;
}

AssocElem operator*(const FieldElem& c, AssocElem a) {
  const FieldElem e = a.parent_->embed_center(c);
  for (auto& x : a.entries_) x = e * x;
  return a;
}

bool operator==(const AssocElem& a, const AssocElem& b) {
  a.check_same(b);
  return a.entries_ == b.entries_;
}

std::string to_string(const AssocElem& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.entries().size(); ++i) os << (i ? ", " : "") << to_string(a.entry(i));
  os << ']';
  return os.str();
}

std::vector<FieldElem> regular_matrix(const AssocElem& a) {
  const AssocPtr& A = a.parent();
  if (A->backend() != AssocBackend::Cyclic) fail(Errc::WrongBackend, "regular matrix needs a cyclic algebra");
  // a z^j = sum_i l_i z^{i+j} and l z^m = z^m sigma^{-m}(l), so column j has
  // entry sigma^{-m}(l_i) (times gamma on wrap-around) in row m = i + j mod 3.
  std::vector<FieldElem> M(9, FieldElem::zero(A->field()));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t m = (i + j) % 3;
      FieldElem v = apply_power(a.entry(i), A->sigma_inv(), m);
      if (i + j >= 3) v *= A->gamma();
      M[3 * m + j] = v;
    }
  return M;
}

namespace {

FieldElem descend(const AssocPtr& A, const FieldElem& v, const char* what) {
  if (!v.is_rational()) fail(Errc::NotInCenter, A->label() + ": reduced " + what + " does not lie in Q");
  return FieldElem::rational(A->center(), v.coeffs()[0]);
}

}  // namespace

FieldElem reduced_trace(const AssocElem& a) {
  const AssocPtr& A = a.parent();
  if (A->backend() == AssocBackend::Matrix3) return a.at(0, 0) + a.at(1, 1) + a.at(2, 2);
  const auto M = regular_matrix(a);
  return descend(A, M[0] + M[4] + M[8], "trace");
}

FieldElem reduced_norm(const AssocElem& a) {
  const AssocPtr& A = a.parent();
  if (A->backend() == AssocBackend::Matrix3) return mat_det(a.entries());
  return descend(A, mat_det(regular_matrix(a)), "norm");
}

FieldElem reduced_spur(const AssocElem& a) {
  const FieldElem t = reduced_trace(a);
  return Rational(1, 2) * (t * t - reduced_trace(a * a));
}

AssocElem dot(const AssocElem& a, const AssocElem& b) { return Rational(1, 2) * (a * b + b * a); }

AssocElem cross(const AssocElem& a, const AssocElem& b) {
  const AssocPtr& A = a.parent();
  const FieldElem ta = reduced_trace(a), tb = reduced_trace(b);
  const AssocElem ab = dot(a, b);
  return 2 * ab - ta * b - tb * a + AssocElem::scalar(A, ta * tb - reduced_trace(ab));
}

AssocElem adjoint(const AssocElem& a) {
  const AssocElem a2 = a * a;
  const FieldElem t = reduced_trace(a);
  return a2 - t * a + AssocElem::scalar(a.parent(), Rational(1, 2) * (t * t - reduced_trace(a2)));
}

AssocElem tilde(const AssocElem& a) {
  return Rational(1, 2) * (AssocElem::scalar(a.parent(), reduced_trace(a)) - a);
}

bool is_invertible(const AssocElem& a) { return !reduced_norm(a).is_zero(); }

AssocElem inverse(const AssocElem& a) {
  const FieldElem n = reduced_norm(a);
  if (n.is_zero()) fail(Errc::NotInvertible, a.parent()->label() + ": element has reduced norm 0");
  return n.inverse() * adjoint(a);
}

AssocElem power(const AssocElem& a, int e) {
  AssocElem base = e < 0 ? inverse(a) : a;
  AssocElem out = AssocElem::one(a.parent());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

AssocElem commutator(const AssocElem& i, const AssocElem& j) { return j * i * inverse(j) * inverse(i); }

AssocElem involution(const AssocElem& a) {
  const AssocPtr& A = a.parent();
  if (!A->has_involution()) fail(Errc::WrongBackend, A->label() + ": no unitary involution");
  return {A, mat_mul(mat_mul(A->g_inv(), conj_transpose(a.entries(), A->bar())), A->g())};
}

UnitaryData unitary_data(const AssocElem& a) {
  return {involution(a) == a, reduced_norm(a).is_rational()};
}

AssocElem symmetric_from_coords(const AssocPtr& B, const Vec& c) {
  if (!B->has_involution()) fail(Errc::WrongBackend, B->label() + ": no unitary involution");
  if (c.size() != 9) fail(Errc::DimensionMismatch, "symmetric elements have 9 coordinates");
  const FieldPtr& K = B->field();
  std::vector<FieldElem> h(9, FieldElem::zero(K));
  for (std::size_t i = 0; i < 3; ++i) h[4 * i] = FieldElem::rational(K, c[i]);
  const std::size_t off[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t k = 0; k < 3; ++k) {
    const FieldElem v(K, Vec{c[3 + 2 * k], c[4 + 2 * k]});
    h[3 * off[k][0] + off[k][1]] = v;
    h[3 * off[k][1] + off[k][0]] = v.apply(B->bar());
  }
  return {B, mat_mul(B->g_inv(), h)};
}

Vec symmetric_coords(const AssocElem& x) {
  const AssocPtr& B = x.parent();
  if (!B->has_involution()) fail(Errc::WrongBackend, B->label() + ": no unitary involution");
  const auto h = mat_mul(B->g(), x.entries());
  if (conj_transpose(h, B->bar()) != h) fail(Errc::NotSymmetric, B->label() + ": element is not symmetric");
  Vec out;
  for (std::size_t i = 0; i < 3; ++i) out.push_back(h[4 * i].coeffs()[0]);
  for (std::size_t idx : {1, 2, 5}) out.insert(out.end(), h[idx].coeffs().begin(), h[idx].coeffs().end());
  return out;
}

}  // namespace albert
