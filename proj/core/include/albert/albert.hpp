#pragma once

#include "albert/assoc3.hpp"
#include "albert/composition.hpp"
#include "albert/linalg.hpp"

#include <array>
#include <memory>
#include <string>

namespace albert {

class AlbertAlgebra;
using AlbertPtr = std::shared_ptr<const AlbertAlgebra>;

enum class Construction { Reduced, First, Second };

// A 27-dimensional Albert algebra over Q in one of three presentations.
//
// Coordinates:
//   Reduced: xi1, xi2, xi3 | c1 | c2 | c3        (3 + 3*8)
//   First:   x0 | x1 | x2                        (3 * 9, each in D)
//   Second:  b0 | b                              (9 symmetric coords + 18)
//
// Reduced elements are the matrices
//   [ xi1             c3              g1^-1 g3 c2bar ]
//   [ g2^-1 g1 c3bar  xi2             c1             ]
//   [ c2              g3^-1 g2 c1bar  xi3            ]
// with X.Y = (XY + YX)/2.
class AlbertAlgebra {
  struct Token {};

 public:
  static constexpr std::size_t dim = 27;

  static AlbertPtr reduced(std::string label, CayleyPtr C, std::array<Rational, 3> gammas);
  static AlbertPtr first(std::string label, AssocPtr D, Rational mu);
  // Checks tau(u) = u and N_B(u) = mu * bar(mu).
  static AlbertPtr second(std::string label, AssocPtr B, const AssocElem& u, const FieldElem& mu);

  AlbertAlgebra(Token, std::string label, Construction c);

  const std::string& label() const { return label_; }
  Construction construction() const { return construction_; }

  const CayleyPtr& cayley() const { return cayley_; }
  const std::array<Rational, 3>& gammas() const { return gammas_; }
  const AssocPtr& assoc() const { return assoc_; }
  // First construction.
  const Rational& mu() const { return mu_; }
  // Second construction.
  const FieldElem& mu_k() const { return mu_k_; }
  const AssocElem& u() const { return u_; }
  const AssocElem& u_inv() const { return u_inv_; }

 private:
  std::string label_;
  Construction construction_;
  CayleyPtr cayley_;
  std::array<Rational, 3> gammas_;
  AssocPtr assoc_;
  Rational mu_;
  FieldElem mu_k_;
  AssocElem u_, u_inv_;
};

class AlbertElem {
 public:
  AlbertElem() = default;
  AlbertElem(AlbertPtr parent, Vec coords);

  static AlbertElem zero(const AlbertPtr& A) { return {A, Vec(AlbertAlgebra::dim)}; }
  static AlbertElem one(const AlbertPtr& A);
  static AlbertElem unit(const AlbertPtr& A, std::size_t i);

  static AlbertElem first(const AlbertPtr& A, const AssocElem& x0, const AssocElem& x1, const AssocElem& x2);
  static AlbertElem second(const AlbertPtr& A, const AssocElem& b0, const AssocElem& b);
  static AlbertElem reduced(const AlbertPtr& A, const std::array<Rational, 3>& xi, const std::array<CayleyElem, 3>& c);

  const AlbertPtr& parent() const { return parent_; }
  const Vec& coords() const { return coords_; }

  // First construction slots 0..2.
  AssocElem slot(std::size_t i) const;
  // Second construction parts.
  AssocElem herm() const;
  AssocElem bpart() const;
  // Reduced construction parts.
  const Rational& xi(std::size_t i) const { return coords_[i]; }
  CayleyElem c(std::size_t i) const;

  bool is_zero() const { return albert::is_zero(coords_); }

  AlbertElem operator-() const { return {parent_, -coords_}; }
  friend AlbertElem operator+(const AlbertElem& a, const AlbertElem& b);
  friend AlbertElem operator-(const AlbertElem& a, const AlbertElem& b);
  friend AlbertElem operator*(const Rational& s, const AlbertElem& a) { return {a.parent_, s * a.coords_}; }
  friend bool operator==(const AlbertElem& a, const AlbertElem& b);
  friend bool operator!=(const AlbertElem& a, const AlbertElem& b) { return !(a == b); }

 private:
  void check_same(const AlbertElem& o) const;

  AlbertPtr parent_;
  Vec coords_;
};

std::string to_string(const AlbertElem& x);

AlbertElem jmul(const AlbertElem& x, const AlbertElem& y);
Rational trace(const AlbertElem& x);
Rational trace_form(const AlbertElem& x, const AlbertElem& y);
// Closed-form norm of the first and second constructions; the Newton-identity
// norm for reduced algebras.
Rational norm(const AlbertElem& x);
Rational newton_norm(const AlbertElem& x);
AlbertElem adjoint(const AlbertElem& x);
AlbertElem cross(const AlbertElem& x, const AlbertElem& y);
// N(x)^{-1} x#; NotInvertible when N(x) = 0.
AlbertElem inverse(const AlbertElem& x);
bool is_invertible(const AlbertElem& x);

// U_x(y) = T(x, y) x - x# x y
AlbertElem u_apply(const AlbertElem& x, const AlbertElem& y);
Matrix u_op(const AlbertElem& x);
// Matrix of y -> x.y
Matrix mult_op(const AlbertElem& x);

}  // namespace albert
