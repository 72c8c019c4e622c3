#pragma once

#include "albert/field.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace albert {

class Assoc3Algebra;
using AssocPtr = std::shared_ptr<const Assoc3Algebra>;

enum class AssocBackend { Matrix3, Cyclic };

// A degree-3 associative algebra: either 3x3 matrices over a number field F
// (center F), or a cyclic algebra L + Lz + Lz^2 with z l = sigma(l) z and
// z^3 = gamma (center Q). A Matrix3 algebra over a quadratic field may carry
// the unitary involution x -> g^{-1} conj(x)^T g for a hermitian g.
class Assoc3Algebra {
  struct Token {};

 public:
  static AssocPtr matrix3(std::string label, FieldPtr F);
  // g: 9 entries of an invertible hermitian matrix over the quadratic field K.
  static AssocPtr matrix3_unitary(std::string label, FieldPtr K, std::vector<FieldElem> g);
  static AssocPtr cyclic(std::string label, FieldPtr L, const Automorphism& sigma, Rational gamma);

  Assoc3Algebra(Token, std::string label, AssocBackend backend, FieldPtr field);

  const std::string& label() const { return label_; }
  AssocBackend backend() const { return backend_; }
  // Field the stored entries live in (F, or L for cyclic algebras).
  const FieldPtr& field() const { return field_; }
  const FieldPtr& center() const { return center_; }
  // 9 matrix entries or 3 coefficients of 1, z, z^2.
  std::size_t entry_count() const { return backend_ == AssocBackend::Matrix3 ? 9 : 3; }
  // Dimension over Q.
  std::size_t q_dim() const { return entry_count() * field_->degree(); }

  const Automorphism& sigma() const { return sigma_; }
  const Automorphism& sigma_inv() const { return sigma_inv_; }
  const Rational& gamma() const { return gamma_; }

  bool has_involution() const { return !g_.empty(); }
  // Nontrivial automorphism of K (only with an involution).
  const Automorphism& bar() const { return bar_; }
  const std::vector<FieldElem>& g() const { return g_; }
  const std::vector<FieldElem>& g_inv() const { return g_inv_; }

  // Center element as an entry-field element.
  FieldElem embed_center(const FieldElem& c) const;

 private:
  std::string label_;
  AssocBackend backend_;
  FieldPtr field_;
  FieldPtr center_;
  Automorphism sigma_, sigma_inv_;
  Rational gamma_;
  Automorphism bar_;
  std::vector<FieldElem> g_, g_inv_;
};

class AssocElem {
 public:
  AssocElem() = default;
  AssocElem(AssocPtr parent, std::vector<FieldElem> entries);

  static AssocElem zero(const AssocPtr& A);
  static AssocElem one(const AssocPtr& A);
  // c * 1 for c in the center (or a rational).
  static AssocElem scalar(const AssocPtr& A, const FieldElem& c);
  static AssocElem scalar(const AssocPtr& A, const Rational& c);
  static AssocElem from_coords(const AssocPtr& A, const Vec& coords);
  // Matrix3: E_ij. Cyclic: not available.
  static AssocElem matrix_unit(const AssocPtr& A, std::size_t i, std::size_t j);
  // Cyclic only: the element l (resp. z).
  static AssocElem from_subfield(const AssocPtr& A, const FieldElem& l);
  static AssocElem z(const AssocPtr& A);

  const AssocPtr& parent() const { return parent_; }
  const std::vector<FieldElem>& entries() const { return entries_; }
  const FieldElem& entry(std::size_t i) const { return entries_[i]; }
  // Matrix3 entry (r, c).
  const FieldElem& at(std::size_t r, std::size_t c) const { return entries_[3 * r + c]; }
  Vec coords() const;

  bool is_zero() const;
  // True when the element is c * 1 with c in the center.
  bool is_central() const;
  // Cyclic only: true when the element lies in L = L * 1.
  bool in_subfield() const;

  AssocElem operator-() const;
  AssocElem& operator+=(const AssocElem& o);
  AssocElem& operator-=(const AssocElem& o);
  friend AssocElem operator+(AssocElem a, const AssocElem& b) { return a += b; }
  friend AssocElem operator-(AssocElem a, const AssocElem& b) { return a -= b; }
  friend AssocElem operator*(const AssocElem& a, const AssocElem& b);
  friend AssocElem operator*(const Rational& s, AssocElem a);
  // Entrywise scaling, i.e. left multiplication by c * 1 with c in the
  // entry field (central for Matrix3, an element of L for cyclic algebras).
  friend AssocElem operator*(const FieldElem& c, AssocElem a);
  friend bool operator==(const AssocElem& a, const AssocElem& b);
  friend bool operator!=(const AssocElem& a, const AssocElem& b) { return !(a == b); }

 private:
  void check_same(const AssocElem& o) const;

  AssocPtr parent_;
  std::vector<FieldElem> entries_;
};

std::string to_string(const AssocElem& a);

// Left multiplication on a cyclic algebra viewed as a right L-space with
// basis 1, z, z^2: a 3x3 matrix over L, row-major.
std::vector<FieldElem> regular_matrix(const AssocElem& a);

// Reduced trace and norm, valued in the center. For cyclic algebras both are
// read off the regular matrix and checked to lie in Q.
FieldElem reduced_trace(const AssocElem& a);
FieldElem reduced_norm(const AssocElem& a);
// Second coefficient of the reduced characteristic polynomial, t(a#).
FieldElem reduced_spur(const AssocElem& a);

// a.b = (ab + ba)/2
AssocElem dot(const AssocElem& a, const AssocElem& b);
// a x b = 2 a.b - t(a)b - t(b)a + (t(a)t(b) - t(a.b)) 1
AssocElem cross(const AssocElem& a, const AssocElem& b);
// a# = a^2 - t(a)a + (t(a)^2 - t(a^2))/2 * 1
AssocElem adjoint(const AssocElem& a);
// (t(a) 1 - a)/2
AssocElem tilde(const AssocElem& a);
// n(a)^{-1} a#; NotInvertible when n(a) = 0.
AssocElem inverse(const AssocElem& a);
bool is_invertible(const AssocElem& a);
AssocElem power(const AssocElem& a, int e);
AssocElem commutator(const AssocElem& i, const AssocElem& j);  // j i j^{-1} i^{-1}

// Unitary involution tau(x) = g^{-1} conj(x)^T g.
AssocElem involution(const AssocElem& a);

struct UnitaryData {
  bool is_symmetric;
  bool in_sigma_prime;  // reduced norm in Q
};
UnitaryData unitary_data(const AssocElem& a);

// Symmetric elements x = g^{-1} h with h hermitian, coordinatized by
// (h11, h22, h33, h12, h13, h23) with the off-diagonal entries taking two
// rationals each: 9 rationals in total.
AssocElem symmetric_from_coords(const AssocPtr& B, const Vec& coords);
Vec symmetric_coords(const AssocElem& x);

}  // namespace albert
