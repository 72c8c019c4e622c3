#include "albert/field.hpp"

#include "albert/error.hpp"

#include <algorithm>
#include <sstream>

namespace albert {

Vec Automorphism::apply(const Vec& coeffs) const {
  const std::size_t n = columns_.size();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t r = 0; r < n; ++r) out[r] += coeffs[i] * columns_[i][r];
  }
  return out;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != (i == 1 ? 1 : 0)) return false;
  // In degree 1 the generator is 0 and the only automorphism is the identity.
  return image_.size() != 1 || image_[0] == 0;
}

NumberField::NumberField(Token, std::string label, poly::Poly f)
    : label_(std::move(label)), poly_(std::move(f)), degree_(static_cast<std::size_t>(poly::degree(poly_))) {
  const std::size_t n = degree_;
  // x^n = -(f_0 + ... + f_{n-1} x^{n-1})
  Vec cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = -poly_[i];
  for (std::size_t j = 0; j + 1 < n; ++j) {
    high_powers_.push_back(cur);
    Vec next(n);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    const Rational top = cur[n - 1];
    if (top != 0)
      for (std::size_t i = 0; i < n; ++i) next[i] -= top * poly_[i];
    cur = std::move(next);
  }
}

const FieldPtr& NumberField::rationals() {
  static const FieldPtr q = create("Q", poly::Poly{0, 1}, {});
  return q;
}

FieldPtr NumberField::create(std::string label, poly::Poly f, const std::vector<Vec>& automorphism_images) {
  poly::trim(f);
  const int deg = poly::degree(f);
  if (deg < 1 || deg > 6) fail(Errc::NotIrreducible, label + ": defining polynomial must have degree 1..6");
  if (f.back() != 1) fail(Errc::NotIrreducible, label + ": defining polynomial must be monic");
  if (!poly::is_irreducible(f)) fail(Errc::NotIrreducible, label + ": defining polynomial is reducible over Q");

  auto field = std::make_shared<NumberField>(Token{}, std::move(label), std::move(f));
  Vec identity(field->degree_);
  if (field->degree_ > 1) identity[1] = 1;
  field->group_.push_back(field->automorphism(identity));
  for (const auto& img : automorphism_images) {
    Automorphism s = field->automorphism(img);
    if (std::find(field->group_.begin(), field->group_.end(), s) == field->group_.end()) field->group_.push_back(s);
  }
  // Close under composition; the group of a degree-n field has order <= n.
  for (std::size_t i = 0; i < field->group_.size(); ++i) {
    for (std::size_t j = 0; j < field->group_.size(); ++j) {
      const Vec img = field->group_[i].apply(field->group_[j].image());
      Automorphism c = field->automorphism(img);
      if (std::find(field->group_.begin(), field->group_.end(), c) == field->group_.end()) {
        field->group_.push_back(std::move(c));
        if (field->group_.size() > field->degree_)
          fail(Errc::InvalidAutomorphism, field->label_ + ": automorphisms generate more than degree-many maps");
      }
    }
  }
  return field;
}

Automorphism NumberField::automorphism(const Vec& image_in) const {
  const std::size_t n = degree_;
  if (image_in.size() > n) fail(Errc::InvalidAutomorphism, label_ + ": automorphism image has too many coefficients");
  Vec image = image_in;
  image.resize(n);
  if (n == 1 && image[0] != 0) fail(Errc::InvalidAutomorphism, "Q has only the identity automorphism");
  std::vector<Vec> columns;
  Vec power(n);
  power[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    columns.push_back(power);
    power = multiply(power, image);
  }
  // f(sigma(x)) must vanish; power now holds sigma(x)^n.
  Vec value = Vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) value[r] += poly_[i] * columns[i][r];
  value = value + power;
  if (n > 1 && !is_zero(value))
    fail(Errc::InvalidAutomorphism, label_ + ": declared image is not a root of the defining polynomial");
  return Automorphism(std::move(image), std::move(columns));
}

Vec NumberField::reduce(const poly::Poly& p) const {
  const std::size_t n = degree_;
  Vec out(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (i < n) {
      out[i] += p[i];
    } else if (n == 1) {
      // x = 0 in Q = Q[x]/(x).
    } else if (i - n < high_powers_.size()) {
      const Vec& hp = high_powers_[i - n];
      for (std::size_t r = 0; r < n; ++r) out[r] += p[i] * hp[r];
    } else {
      auto [q, rem] = poly::divmod(p, poly_);
      Vec res(n);
      for (std::size_t r = 0; r < rem.size(); ++r) res[r] = rem[r];
      return res;
    }
  }
  return out;
}

Vec NumberField::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = degree_;
  if (n == 1) return Vec{a[0] * b[0]};
  poly::Poly prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  return reduce(prod);
}

Vec NumberField::invert(const Vec& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, label_ + ": inverse of zero");
  if (degree_ == 1) return Vec{1 / a[0]};
  poly::Poly pa(a.begin(), a.end());
  poly::trim(pa);
  const auto bz = poly::extended_gcd(pa, poly_);
  if (poly::degree(bz.gcd) != 0) fail(Errc::DivisionByZero, label_ + ": element is not invertible");
  return reduce(bz.s);
}

FieldElem::FieldElem(FieldPtr parent, Vec coeffs) : parent_(std::move(parent)) {
  if (coeffs.size() > parent_->degree()) {
    coeffs_ = parent_->reduce(coeffs);
  } else {
    coeffs.resize(parent_->degree());
    coeffs_ = std::move(coeffs);
  }
}

FieldElem FieldElem::zero(const FieldPtr& F) { return FieldElem(F, Vec(F->degree())); }

FieldElem FieldElem::one(const FieldPtr& F) { return rational(F, 1); }

FieldElem FieldElem::generator(const FieldPtr& F) {
  Vec c(F->degree());
  if (F->degree() > 1) c[1] = 1;
  return FieldElem(F, std::move(c));
}

FieldElem FieldElem::rational(const FieldPtr& F, const Rational& r) {
  Vec c(F->degree());
  c[0] = r;
  return FieldElem(F, std::move(c));
}

bool FieldElem::is_zero() const { return albert::is_zero(coeffs_); }

bool FieldElem::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool FieldElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational FieldElem::to_rational() const {
  if (!is_rational()) fail(Errc::NotInCenter, "field element " + to_string(*this) + " is not rational");
  return coeffs_[0];
}

void FieldElem::check_same(const FieldElem& o) const {
  if (parent_ != o.parent_)
    fail(Errc::MixedParents, "field elements from " + (parent_ ? parent_->label() : std::string("<none>")) + " and " +
                                 (o.parent_ ? o.parent_->label() : std::string("<none>")));
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  coeffs_ = parent_->multiply(coeffs_, o.coeffs_);
  return *this;
}

FieldElem& FieldElem::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

FieldElem FieldElem::inverse() const { return FieldElem(parent_, parent_->invert(coeffs_)); }

FieldElem FieldElem::apply(const Automorphism& sigma) const { return FieldElem(parent_, sigma.apply(coeffs_)); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

std::string to_string(const FieldElem& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational m = abs(c);
    if (i == 0) os << m.get_str();
    else {
      if (m != 1) os << m.get_str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

NormTrace galois_norm_trace(const FieldElem& a) {
  const auto& F = *a.parent();
  if (!F.is_galois())
    fail(Errc::NotGalois, F.label() + ": automorphism group has order " + std::to_string(F.automorphisms().size()) +
                              " but degree is " + std::to_string(F.degree()));
  FieldElem norm = FieldElem::one(a.parent());
  FieldElem trace = FieldElem::zero(a.parent());
  for (const auto& s : F.automorphisms()) {
    const FieldElem c = a.apply(s);
    norm *= c;
    trace += c;
  }
  return {norm.to_rational(), trace.to_rational()};
}

poly::Poly char_poly(const FieldElem& a) {
  const auto& F = *a.parent();
  const std::size_t n = F.degree();
  // Multiplication matrix, column i = a * x^i.
  std::vector<Vec> m(n, Vec(n));
  Vec basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(basis.begin(), basis.end(), Rational(0));
    basis[i] = 1;
    const Vec col = F.multiply(a.coeffs(), basis);
    for (std::size_t r = 0; r < n; ++r) m[r][i] = col[r];
  }
  // Faddeev-LeVerrier.
  poly::Poly c(n + 1);
  c[n] = 1;
  std::vector<Vec> mk(n, Vec(n));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Vec> next(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : Rational(0));
      }
    mk = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += m[i][l] * mk[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

FieldElem hilbert90(const FieldElem& alpha, const Automorphism& sigma) {
  const FieldPtr& L = alpha.parent();
  if (L->degree() != 3) fail(Errc::NotGalois, "hilbert90 requires a cubic field");
  const Vec sigma3 = sigma.apply(sigma.apply(sigma.image()));
  if (sigma.is_identity() || FieldElem(L, sigma3) != FieldElem::generator(L))
    fail(Errc::NotGalois, L->label() + ": supplied automorphism does not generate a cyclic group of order 3");
  const FieldElem norm = alpha * alpha.apply(sigma) * alpha.apply(sigma).apply(sigma);
  if (!norm.is_one()) fail(Errc::NormNotOne, "hilbert90: N(alpha) = " + to_string(norm));

  // With beta = alpha^{-1}, q = c + beta s(c) + beta s(beta) s^2(c) satisfies
  // s(q) = alpha q whenever N(alpha) = 1; scan small c until q != 0.
  const FieldElem beta = alpha.inverse();
  const FieldElem beta_s = beta * beta.apply(sigma);
  std::vector<Vec> candidates = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, -1, 0},
                                 {1, 0, -1}, {0, 1, -1}, {1, 2, 3}, {2, -1, 1}};
  for (const auto& cv : candidates) {
    const FieldElem c(L, cv);
    const FieldElem sc = c.apply(sigma);
    FieldElem q = c + beta * sc + beta_s * sc.apply(sigma);
    if (q.is_zero()) continue;
    // Any rational multiple works; normalize the lowest nonzero coefficient to 1.
    for (const auto& coef : q.coeffs())
      if (coef != 0) {
        q *= Rational(1 / coef);
        break;
      }
    if (alpha * q != q.apply(sigma)) fail(Errc::InvariantViolation, "hilbert90: postcondition failed");
    return q;
  }
  fail(Errc::ExhaustedCandidates, "hilbert90: no candidate produced q != 0");
}

}  // namespace albert
