#include "albert/albert.hpp"

#include "albert/error.hpp"

#include <sstream>

namespace albert {

namespace {

Rational to_q(const FieldElem& v, const char* what) {
  if (!v.is_rational()) fail(Errc::InvariantViolation, std::string(what) + " does not lie in Q");
  return v.coeffs()[0];
}

Rational t(const AssocElem& a) { return to_q(reduced_trace(a), "reduced trace"); }

using CMat = std::array<std::array<CayleyElem, 3>, 3>;

CMat reduced_matrix(const AlbertElem& x) {
  const auto& g = x.parent()->gammas();
  const CayleyPtr& C = x.parent()->cayley();
  const CayleyElem c1 = x.c(0), c2 = x.c(1), c3 = x.c(2);
  CMat m;
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = x.xi(i) * CayleyElem::one(C);
  m[0][1] = c3;
  m[1][0] = (g[0] / g[1]) * c3.conj();
  m[1][2] = c1;
  m[2][1] = (g[1] / g[2]) * c1.conj();
  m[2][0] = c2;
  m[0][2] = (g[2] / g[0]) * c2.conj();
  return m;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
  CMat out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CayleyElem s = a[i][0] * b[0][j];
      s = s + a[i][1] * b[1][j];
      out[i][j] = s + a[i][2] * b[2][j];
    }
  return out;
}

AlbertElem jmul_reduced(const AlbertElem& x, const AlbertElem& y) {
  const CMat X = reduced_matrix(x), Y = reduced_matrix(y);
  const CMat P = cmat_mul(X, Y), Q = cmat_mul(Y, X);
  const Rational half(1, 2);
  std::array<Rational, 3> xi;
  for (std::size_t i = 0; i < 3; ++i) xi[i] = half * (P[i][i][0] + Q[i][i][0]);
  const std::array<CayleyElem, 3> c = {half * (P[1][2] + Q[1][2]), half * (P[2][0] + Q[2][0]),
                                       half * (P[0][1] + Q[0][1])};
  return AlbertElem::reduced(x.parent(), xi, c);
}

AlbertElem jmul_first(const AlbertElem& x, const AlbertElem& y) {
  const Rational& mu = x.parent()->mu();
  const AssocElem x0 = x.slot(0), x1 = x.slot(1), x2 = x.slot(2);
  const AssocElem y0 = y.slot(0), y1 = y.slot(1), y2 = y.slot(2);
  const AssocElem tx0 = tilde(x0), ty0 = tilde(y0);
  return AlbertElem::first(x.parent(), dot(x0, y0) + tilde(x1 * y2) + tilde(y1 * x2),
                           tx0 * y1 + ty0 * x1 + (1 / (2 * mu)) * cross(x2, y2),
                           x2 * ty0 + y2 * tx0 + (mu / 2) * cross(x1, y1));
}

AlbertElem jmul_second(const AlbertElem& x, const AlbertElem& y) {
  const AlbertAlgebra& A = *x.parent();
  const AssocElem a0 = x.herm(), a = x.bpart(), b0 = y.herm(), b = y.bpart();
  const AssocElem ta = involution(a), tb = involution(b);
  const FieldElem mubar = A.mu_k().apply(A.assoc()->bar());
  return AlbertElem::second(x.parent(), dot(a0, b0) + tilde(a * A.u() * tb) + tilde(b * A.u() * ta),
                            tilde(a0) * b + tilde(b0) * a + Rational(1, 2) * (mubar * (cross(ta, tb) * A.u_inv())));
}

}  // namespace

AlbertPtr AlbertAlgebra::reduced(std::string label, CayleyPtr C, std::array<Rational, 3> gammas) {
  for (const auto& g : gammas)
    if (g == 0) fail(Errc::InvariantViolation, label + ": Gamma entries must be nonzero");
  auto A = std::make_shared<AlbertAlgebra>(Token{}, std::move(label), Construction::Reduced);
  A->cayley_ = std::move(C);
  A->gammas_ = std::move(gammas);
  return A;
}

AlbertPtr AlbertAlgebra::first(std::string label, AssocPtr D, Rational mu) {
  if (D->center()->degree() != 1) fail(Errc::WrongBackend, label + ": D must be central over Q");
  if (mu == 0) fail(Errc::InvariantViolation, label + ": mu must be nonzero");
  auto A = std::make_shared<AlbertAlgebra>(Token{}, std::move(label), Construction::First);
  A->assoc_ = std::move(D);
  A->mu_ = std::move(mu);
  return A;
}

AlbertPtr AlbertAlgebra::second(std::string label, AssocPtr B, const AssocElem& u, const FieldElem& mu) {
  if (!B->has_involution()) fail(Errc::WrongBackend, label + ": B needs a unitary involution");
  if (u.parent() != B) fail(Errc::MixedParents, label + ": u is not an element of B");
  if (involution(u) != u) fail(Errc::InvariantViolation, label + ": tau(u) = u fails");
  const FieldElem m = B->embed_center(mu);
  if (reduced_norm(u) != m * m.apply(B->bar()))
    fail(Errc::InvariantViolation, label + ": N(u) = mu * conj(mu) fails");
  auto A = std::make_shared<AlbertAlgebra>(Token{}, std::move(label), Construction::Second);
  A->assoc_ = std::move(B);
  A->mu_k_ = m;
  A->u_ = u;
  A->u_inv_ = inverse(u);
  return A;
}

AlbertAlgebra::AlbertAlgebra(Token, std::string label, Construction c) : label_(std::move(label)), construction_(c) {}

AlbertElem::AlbertElem(AlbertPtr parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != AlbertAlgebra::dim) fail(Errc::DimensionMismatch, "Albert elements have 27 coordinates");
}

AlbertElem AlbertElem::one(const AlbertPtr& A) {
  switch (A->construction()) {
    case Construction::Reduced:
      return reduced(A, {1, 1, 1}, {CayleyElem::zero(A->cayley()), CayleyElem::zero(A->cayley()),
                                    CayleyElem::zero(A->cayley())});
    case Construction::First: {
      const AssocElem z = AssocElem::zero(A->assoc());
      return first(A, AssocElem::one(A->assoc()), z, z);
    }
    case Construction::Second:
      return second(A, AssocElem::one(A->assoc()), AssocElem::zero(A->assoc()));
  }
  return {};
}

AlbertElem AlbertElem::unit(const AlbertPtr& A, std::size_t i) {
  Vec v(AlbertAlgebra::dim);
  v.at(i) = 1;
  return {A, std::move(v)};
}

AlbertElem AlbertElem::first(const AlbertPtr& A, const AssocElem& x0, const AssocElem& x1, const AssocElem& x2) {
  if (A->construction() != Construction::First) fail(Errc::WrongConstruction, A->label() + " is not a first construction");
  Vec v;
  v.reserve(AlbertAlgebra::dim);
  for (const auto* s : {&x0, &x1, &x2}) {
    if (s->parent() != A->assoc()) fail(Errc::MixedParents, A->label() + ": slot from a foreign algebra");
    const Vec c = s->coords();
    v.insert(v.end(), c.begin(), c.end());
  }
  return {A, std::move(v)};
}

AlbertElem AlbertElem::second(const AlbertPtr& A, const AssocElem& b0, const AssocElem& b) {
  if (A->construction() != Construction::Second) fail(Errc::WrongConstruction, A->label() + " is not a second construction");
  if (b0.parent() != A->assoc() || b.parent() != A->assoc())
    fail(Errc::MixedParents, A->label() + ": part from a foreign algebra");
  Vec v = symmetric_coords(b0);
  const Vec c = b.coords();
  v.insert(v.end(), c.begin(), c.end());
  return {A, std::move(v)};
}

AlbertElem AlbertElem::reduced(const AlbertPtr& A, const std::array<Rational, 3>& xi, const std::array<CayleyElem, 3>& c) {
  if (A->construction() != Construction::Reduced) fail(Errc::WrongConstruction, A->label() + " is not a reduced algebra");
  Vec v(xi.begin(), xi.end());
  for (const auto& ci : c) {
    if (ci.parent() != A->cayley()) fail(Errc::MixedParents, A->label() + ": octonion from a foreign algebra");
    v.insert(v.end(), ci.coords().begin(), ci.coords().end());
  }
  return {A, std::move(v)};
}

AssocElem AlbertElem::slot(std::size_t i) const {
  if (parent_->construction() != Construction::First) fail(Errc::WrongConstruction, "slots exist in first constructions");
  return AssocElem::from_coords(parent_->assoc(), Vec(coords_.begin() + 9 * i, coords_.begin() + 9 * (i + 1)));
}

AssocElem AlbertElem::herm() const {
  if (parent_->construction() != Construction::Second) fail(Errc::WrongConstruction, "herm() needs a second construction");
  return symmetric_from_coords(parent_->assoc(), Vec(coords_.begin(), coords_.begin() + 9));
}

AssocElem AlbertElem::bpart() const {
  if (parent_->construction() != Construction::Second) fail(Errc::WrongConstruction, "bpart() needs a second construction");
  return AssocElem::from_coords(parent_->assoc(), Vec(coords_.begin() + 9, coords_.end()));
}

CayleyElem AlbertElem::c(std::size_t i) const {
  if (parent_->construction() != Construction::Reduced) fail(Errc::WrongConstruction, "c() needs a reduced algebra");
  return {parent_->cayley(), Vec(coords_.begin() + 3 + 8 * i, coords_.begin() + 3 + 8 * (i + 1))};
}

void AlbertElem::check_same(const AlbertElem& o) const {
  if (parent_ != o.parent_) fail(Errc::MixedParents, "elements of " + parent_->label() + " and " + o.parent_->label());
}

AlbertElem operator+(const AlbertElem& a, const AlbertElem& b) {
  a.check_same(b);
  return {a.parent_, a.coords_ + b.coords_};
}

AlbertElem operator-(const AlbertElem& a, const AlbertElem& b) {
  a.check_same(b);
  return {a.parent_, a.coords_ - b.coords_};
}

bool operator==(const AlbertElem& a, const AlbertElem& b) {
  a.check_same(b);
  return a.coords_ == b.coords_;
}

std::string to_string(const AlbertElem& x) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.coords().size(); ++i) os << (i ? ", " : "") << to_string(x.coords()[i]);
  os << ']';
  return os.str();
}

AlbertElem jmul(const AlbertElem& x, const AlbertElem& y) {
  if (x.parent() != y.parent()) fail(Errc::MixedParents, "jmul of elements from different algebras");
  switch (x.parent()->construction()) {
    case Construction::Reduced: return jmul_reduced(x, y);
    case Construction::First: return jmul_first(x, y);
    case Construction::Second: return jmul_second(x, y);
  }
  return {};
}

Rational trace(const AlbertElem& x) {
  switch (x.parent()->construction()) {
    case Construction::Reduced: return x.xi(0) + x.xi(1) + x.xi(2);
    case Construction::First: return t(x.slot(0));
    case Construction::Second: return t(x.herm());
  }
  return {};
}

Rational trace_form(const AlbertElem& x, const AlbertElem& y) {
  if (x.parent() != y.parent()) fail(Errc::MixedParents, "trace form of elements from different algebras");
  const AlbertAlgebra& A = *x.parent();
  switch (A.construction()) {
    case Construction::Reduced: return trace(jmul(x, y));
    case Construction::First:
      return t(x.slot(0) * y.slot(0)) + t(x.slot(1) * y.slot(2)) + t(x.slot(2) * y.slot(1));
    case Construction::Second: {
      const AssocElem a = x.bpart(), b = y.bpart();
      return t(x.herm() * y.herm()) +
             to_q(reduced_trace(a * A.u() * involution(b)) + reduced_trace(A.u() * involution(a) * b), "T(x, y)");
    }
  }
  return {};
}

Rational newton_norm(const AlbertElem& x) {
  const AlbertElem x2 = jmul(x, x);
  const AlbertElem x3 = jmul(x, x2);
  const Rational T = trace(x);
  return T * T * T / 6 - T * trace(x2) / 2 + trace(x3) / 3;
}

Rational norm(const AlbertElem& x) {
  const AlbertAlgebra& A = *x.parent();
  switch (A.construction()) {
    case Construction::Reduced: return newton_norm(x);
    case Construction::First: {
      const AssocElem x0 = x.slot(0), x1 = x.slot(1), x2 = x.slot(2);
      const auto n = [](const AssocElem& a) { return to_q(reduced_norm(a), "reduced norm"); };
      return n(x0) + A.mu() * n(x1) + n(x2) / A.mu() - t(x0 * x1 * x2);
    }
    case Construction::Second: {
      const AssocElem b0 = x.herm(), b = x.bpart(), tb = involution(b);
      const FieldElem mubar = A.mu_k().apply(A.assoc()->bar());
      return to_q(reduced_norm(b0) + A.mu_k() * reduced_norm(b) + mubar * reduced_norm(tb) -
                      reduced_trace(b0 * b * A.u() * tb),
                  "N(x)");
    }
  }
  return {};
}

AlbertElem adjoint(const AlbertElem& x) {
  const AlbertAlgebra& A = *x.parent();
  switch (A.construction()) {
    case Construction::Reduced: {
      const AlbertElem x2 = jmul(x, x);
      const Rational T = trace(x);
      return x2 - T * x + ((T * T - trace(x2)) / 2) * AlbertElem::one(x.parent());
    }
    case Construction::First: {
      const AssocElem x0 = x.slot(0), x1 = x.slot(1), x2 = x.slot(2);
      const Rational& mu = A.mu();
      return AlbertElem::first(x.parent(), adjoint(x0) - x1 * x2, (1 / mu) * adjoint(x2) - x0 * x1,
                               mu * adjoint(x1) - x2 * x0);
    }
    case Construction::Second: {
      const AssocElem a0 = x.herm(), a = x.bpart(), ta = involution(a);
      const FieldElem mubar = A.mu_k().apply(A.assoc()->bar());
      return AlbertElem::second(x.parent(), adjoint(a0) - a * A.u() * ta,
                                mubar * (adjoint(ta) * A.u_inv()) - a0 * a);
    }
  }
  return {};
}

AlbertElem cross(const AlbertElem& x, const AlbertElem& y) {
  if (x.parent() != y.parent()) fail(Errc::MixedParents, "cross of elements from different algebras");
  const AlbertAlgebra& A = *x.parent();
  switch (A.construction()) {
    case Construction::Reduced: {
      const Rational tx = trace(x), ty = trace(y);
      const AlbertElem xy = jmul(x, y);
      return 2 * xy - tx * y - ty * x + (tx * ty - trace(xy)) * AlbertElem::one(x.parent());
    }
    case Construction::First: {
      const AssocElem x0 = x.slot(0), x1 = x.slot(1), x2 = x.slot(2);
      const AssocElem y0 = y.slot(0), y1 = y.slot(1), y2 = y.slot(2);
      const Rational& mu = A.mu();
      return AlbertElem::first(x.parent(), cross(x0, y0) - x1 * y2 - y1 * x2,
                               (1 / mu) * cross(x2, y2) - x0 * y1 - y0 * x1, mu * cross(x1, y1) - x2 * y0 - y2 * x0);
    }
    case Construction::Second: {
      const AssocElem a = x.herm(), b = x.bpart(), c = y.herm(), d = y.bpart();
      const AssocElem tb = involution(b), td = involution(d);
      const FieldElem mubar = A.mu_k().apply(A.assoc()->bar());
      return AlbertElem::second(x.parent(), cross(a, c) - b * A.u() * td - d * A.u() * tb,
                                mubar * (cross(tb, td) * A.u_inv()) - a * d - c * b);
    }
  }
  return {};
}

bool is_invertible(const AlbertElem& x) { return norm(x) != 0; }

AlbertElem inverse(const AlbertElem& x) {
  const Rational n = norm(x);
  if (n == 0) fail(Errc::NotInvertible, x.parent()->label() + ": element has norm 0");
  return (1 / n) * adjoint(x);
}

AlbertElem u_apply(const AlbertElem& x, const AlbertElem& y) {
  return trace_form(x, y) * x - cross(adjoint(x), y);
}

Matrix u_op(const AlbertElem& x) {
  const AlbertElem xs = adjoint(x);
  Matrix m(AlbertAlgebra::dim, AlbertAlgebra::dim);
  for (std::size_t j = 0; j < AlbertAlgebra::dim; ++j) {
    const AlbertElem e = AlbertElem::unit(x.parent(), j);
    const Vec col = (trace_form(x, e) * x - cross(xs, e)).coords();
    for (std::size_t i = 0; i < AlbertAlgebra::dim; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix mult_op(const AlbertElem& x) {
  Matrix m(AlbertAlgebra::dim, AlbertAlgebra::dim);
  for (std::size_t j = 0; j < AlbertAlgebra::dim; ++j) {
    const Vec col = jmul(x, AlbertElem::unit(x.parent(), j)).coords();
    for (std::size_t i = 0; i < AlbertAlgebra::dim; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace albert
