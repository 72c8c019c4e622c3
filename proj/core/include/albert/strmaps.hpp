#pragma once

#include "albert/albert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace albert {

// A Q-linear endomorphism of an Albert algebra, as a 27x27 matrix acting on
// coordinate columns.
struct LinOp {
  AlbertPtr parent;
  Matrix matrix;

  AlbertElem operator()(const AlbertElem& x) const { return {parent, matrix.apply(x.coords())}; }
  friend LinOp operator*(const LinOp& f, const LinOp& g);
  friend bool operator==(const LinOp& f, const LinOp& g) { return f.parent == g.parent && f.matrix == g.matrix; }
};

LinOp identity_op(const AlbertPtr& A);
LinOp u_linop(const AlbertElem& x);
// NotInvertible when singular.
LinOp invert(const LinOp& f);

struct Generator {
  enum class Kind { U, Scalar, Prim };
  Kind kind = Kind::U;
  AlbertElem elem;   // U
  Rational t;        // Scalar: R_t
  std::string name;  // Prim: currently only "Jp"
  AssocElem p;       // Prim Jp parameter
  std::string note;  // where the factor comes from, for reports

  static Generator u(AlbertElem x, std::string note = {});
  static Generator scalar(Rational t, std::string note = {});
  static Generator jp(AssocElem p, std::string note = {});
};

// Applied right to left: the word [g0, g1, ..., gn] evaluates to g0 g1 ... gn.
struct InstrWord {
  AlbertPtr parent;
  std::vector<Generator> gens;

  bool is_pure() const;  // only U and scalar generators
};

InstrWord concat(const InstrWord& a, const InstrWord& b);

struct Evaluated {
  LinOp op;
  // Product of N(x)^2 over U generators and t^3 over scalar generators.
  Rational similitude;
};

// NotInvertibleGenerator when some U generator has norm 0.
Evaluated eval_word(const InstrWord& w);

struct Classification {
  bool automorphism = false;
  bool isometry = false;
  Rational similarity;  // lambda with N(f(x)) = lambda N(x)
};

// Exact: multiplicativity on all 378 basis pairs and comparison of the full
// cubic coefficient vectors of N o f and N. NotSimilarity when N o f is not
// a multiple of N.
Classification classify(const LinOp& f);
bool is_automorphism(const LinOp& f);
// Coefficients c_ijk (i <= j <= k) of N(sum x_i e_i) composed with f.
Vec cubic_coefficients(const LinOp& f);

// First construction.
// psi_{a,b}(x, y, z) = (a x a^{-1}, a y b^{-1}, b z a^{-1}) with N(a) = N(b).
LinOp make_psi(const AlbertPtr& A, const AssocElem& a, const AssocElem& b);
// I_a = psi_{a,a}
LinOp make_ia(const AlbertPtr& A, const AssocElem& a);
// J_p(x, y, z) = (x, y p, p^{-1} z) with N(p) = 1.
LinOp make_jp(const AlbertPtr& A, const AssocElem& p);
// Any construction.
LinOp make_rt(const AlbertPtr& A, const Rational& t);
// Second construction: (a, b) -> (p a tau(p), p b q) with p tau(p) = 1,
// q u tau(q) u^{-1} = 1 and N(p) = N(q) = 1.
LinOp make_phi(const AlbertPtr& A, const AssocElem& p, const AssocElem& q);
bool is_special_unitary(const AssocElem& p);
bool is_special_unitary_twisted(const AlbertPtr& A, const AssocElem& q);

// Replaces each U(a) by U(theta^{-1}(a)), so that
// eval(result) = theta^{-1} eval(w) theta. NotIsomorphism unless theta is an
// automorphism; primitive generators are rejected (WrongConstruction).
InstrWord conjugate_word(const InstrWord& w, const LinOp& theta);

}  // namespace albert
