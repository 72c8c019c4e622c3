#pragma once

#include "albert/linalg.hpp"
#include "albert/rational.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace albert {

class CayleyAlgebra;
using CayleyPtr = std::shared_ptr<const CayleyAlgebra>;

// Octonion algebra over Q obtained by three Cayley-Dickson doublings with
// parameters (alpha, beta, gamma). Basis order:
//   1, e1, e2, e1e2, e3, e1e3, e2e3, (e1e2)e3
// with e1^2 = alpha, e2^2 = beta, e3^2 = gamma.
class CayleyAlgebra {
  struct Token {};

 public:
  static constexpr std::size_t dim = 8;

  static CayleyPtr create(std::string label, Rational alpha, Rational beta, Rational gamma);
  CayleyAlgebra(Token, std::string label, std::array<Rational, 3> params);

  const std::string& label() const { return label_; }
  const std::array<Rational, 3>& params() const { return params_; }
  // Diagonal entries of the norm form in the basis above.
  const Vec& norm_diagonal() const { return norm_diag_; }
  // e_i e_j = coeff(i,j) * e_{index(i,j)}
  std::size_t index(std::size_t i, std::size_t j) const { return table_index_[i][j]; }
  const Rational& coeff(std::size_t i, std::size_t j) const { return table_coeff_[i][j]; }
  // True when the norm form is positive or negative definite off the
  // identity, i.e. the algebra is a division algebra already over R.
  bool norm_is_definite() const;

  Vec multiply(const Vec& a, const Vec& b) const;

 private:
  std::string label_;
  std::array<Rational, 3> params_;
  Vec norm_diag_;
  std::array<std::array<std::size_t, dim>, dim> table_index_{};
  std::array<std::array<Rational, dim>, dim> table_coeff_;
};

class CayleyElem {
 public:
  CayleyElem() = default;
  CayleyElem(CayleyPtr parent, Vec coords);

  static CayleyElem zero(const CayleyPtr& C) { return {C, Vec(CayleyAlgebra::dim)}; }
  static CayleyElem one(const CayleyPtr& C);
  static CayleyElem unit(const CayleyPtr& C, std::size_t i);

  const CayleyPtr& parent() const { return parent_; }
  const Vec& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  CayleyElem conj() const;
  Rational norm() const;
  Rational trace() const { return 2 * coords_[0]; }
  bool is_zero() const { return albert::is_zero(coords_); }

  CayleyElem operator-() const { return {parent_, -coords_}; }
  friend CayleyElem operator+(const CayleyElem& a, const CayleyElem& b);
  friend CayleyElem operator-(const CayleyElem& a, const CayleyElem& b);
  friend CayleyElem operator*(const CayleyElem& a, const CayleyElem& b);
  friend CayleyElem operator*(const Rational& s, const CayleyElem& a) { return {a.parent_, s * a.coords_}; }
  friend bool operator==(const CayleyElem& a, const CayleyElem& b);
  friend bool operator!=(const CayleyElem& a, const CayleyElem& b) { return !(a == b); }

 private:
  CayleyPtr parent_;
  Vec coords_;
};

// Polar form n(x, y) with n(x, x) = n(x).
Rational norm_form(const CayleyElem& x, const CayleyElem& y);

// Matrices (8x8, basis order above) of x -> ax, x -> xa and x -> a(xa).
Matrix left_mult(const CayleyElem& a);
Matrix right_mult(const CayleyElem& a);
Matrix cayley_u_op(const CayleyElem& a);

// The reflection fixing the quaternion subalgebra H spanned by `h_basis`
// pointwise and acting as -1 on its norm-orthogonal complement. Closure of
// H, nondegeneracy of the norm on H, the automorphism property and tau^2 = 1
// are all verified.
Matrix reflection(const std::vector<CayleyElem>& h_basis);

// Span of 1, e1, e2, e1e2.
std::vector<CayleyElem> standard_quaternions(const CayleyPtr& C);

}  // namespace albert
