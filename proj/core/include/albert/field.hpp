#pragma once

#include "albert/poly.hpp"
#include "albert/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace albert {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// A Q-algebra automorphism of a number field, stored as the image of the
// generator together with its matrix on the power basis.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(Vec image, std::vector<Vec> columns) : image_(std::move(image)), columns_(std::move(columns)) {}

  const Vec& image() const { return image_; }
  // Applies to a coefficient vector on the power basis.
  Vec apply(const Vec& coeffs) const;
  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.image_ == b.image_; }

 private:
  Vec image_;
  std::vector<Vec> columns_;  // columns_[i] = sigma(x^i)
};

// Q[x]/(f) with f monic irreducible of degree 1..6 and an explicit group of
// automorphisms. Degree-1 fields represent Q itself.
class NumberField {
  struct Token {};

 public:
  // Validates f (monic, irreducible) and each automorphism image
  // (f(sigma(x)) = 0 mod f). The stored group is the closure of the supplied
  // generators under composition; identity is always element 0.
  static FieldPtr create(std::string label, poly::Poly defining_poly, const std::vector<Vec>& automorphism_images);
  static const FieldPtr& rationals();

  NumberField(Token, std::string label, poly::Poly f);

  const std::string& label() const { return label_; }
  const poly::Poly& defining_poly() const { return poly_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Automorphism>& automorphisms() const { return group_; }
  bool is_galois() const { return group_.size() == degree_; }

  // Builds the automorphism x -> image (validated).
  Automorphism automorphism(const Vec& image) const;

  // Reduction of an arbitrary polynomial modulo f, as a length-degree vector.
  Vec reduce(const poly::Poly& p) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec invert(const Vec& a) const;

 private:
  std::string label_;
  poly::Poly poly_;
  std::size_t degree_;
  std::vector<Vec> high_powers_;  // x^(n+j) mod f for j = 0..n-2
  std::vector<Automorphism> group_;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr parent, Vec coeffs);

  static FieldElem zero(const FieldPtr& F);
  static FieldElem one(const FieldPtr& F);
  static FieldElem generator(const FieldPtr& F);
  static FieldElem rational(const FieldPtr& F, const Rational& r);

  const FieldPtr& parent() const { return parent_; }
  const Vec& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when all coefficients above degree 0 vanish.
  bool is_rational() const;
  // Throws NotInCenter when the element is not in Q.
  Rational to_rational() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator*=(const Rational& r);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator*(FieldElem a, const Rational& r) { return a *= r; }
  friend FieldElem operator*(const Rational& r, FieldElem a) { return a *= r; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

  FieldElem inverse() const;
  FieldElem apply(const Automorphism& sigma) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  void check_same(const FieldElem& o) const;

  FieldPtr parent_;
  Vec coeffs_;
};

std::string to_string(const FieldElem& a);

struct NormTrace {
  Rational norm;
  Rational trace;
};

// Norm and trace through the automorphism group; NotGalois unless the group
// has order equal to the degree.
NormTrace galois_norm_trace(const FieldElem& a);

// Characteristic polynomial of multiplication by a (monic, degree n). Used as
// an embedding-free cross-check of galois_norm_trace.
poly::Poly char_poly(const FieldElem& a);

// Multiplicative Hilbert 90 for a cyclic cubic field: returns q != 0 with
// alpha = q^{-1} sigma(q). The result is verified before it is returned.
FieldElem hilbert90(const FieldElem& alpha, const Automorphism& sigma);

}  // namespace albert
