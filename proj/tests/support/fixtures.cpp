#include "fixtures.hpp"

#include "albert/error.hpp"

namespace albert::testing {

FieldElem q_elem(const FieldPtr& F, const Rational& r) { return FieldElem::rational(F, r); }

FieldElem k_elem(const Rational& re, const Rational& im) { return {shipped().K, Vec{re, im}}; }

namespace {

Shipped build() {
  Shipped s;
  s.Q = NumberField::rationals();
  s.L = NumberField::create("L", {-1, -2, 1, 1}, {Vec{-2, 0, 1}});
  s.K = NumberField::create("K", {1, 0, 1}, {Vec{0, -1}});
  s.sigma = s.L->automorphism(Vec{-2, 0, 1});
  s.M3 = Assoc3Algebra::matrix3("M3", s.Q);
  s.D = Assoc3Algebra::cyclic("D", s.L, s.sigma, 2);

  const auto zk = FieldElem::zero(s.K);
  std::vector<FieldElem> g(9, zk), u(9, zk);
  g[0] = g[4] = FieldElem::one(s.K);
  g[8] = FieldElem::rational(s.K, 2);
  s.B = Assoc3Algebra::matrix3_unitary("B", s.K, g);
  u[0] = u[4] = FieldElem::one(s.K);
  u[8] = FieldElem::rational(s.K, 5);

  s.O_split = CayleyAlgebra::create("Os", 1, 1, 1);
  s.O_div = CayleyAlgebra::create("O", -1, -1, -1);
  s.J_split = AlbertAlgebra::first("Jsplit", s.M3, 1);
  s.J_m3 = AlbertAlgebra::first("Jm3", s.M3, 2);
  s.J_cyc = AlbertAlgebra::first("Jcyc", s.D, 3);
  s.J_second = AlbertAlgebra::second("Jsec", s.B, AssocElem(s.B, u), FieldElem(s.K, Vec{2, 1}));
  s.H_split = AlbertAlgebra::reduced("Hsplit", s.O_split, {1, 1, 1});
  s.H_div = AlbertAlgebra::reduced("Hdiv", s.O_div, {1, -1, 2});
  return s;
}

}  // namespace

const Shipped& shipped() {
  static const Shipped s = build();
  return s;
}

AssocElem norm_one(Sampler& s, const AssocPtr& D) {
  return commutator(s.invertible_assoc(D), s.invertible_assoc(D));
}

AssocElem noncyclic_norm_one(Sampler& s, const AssocPtr& M3) {
  for (;;) {
    const int a1 = s.integer(-5, 5), a2 = s.integer(-5, 5);
    // rational roots of a monic cubic with constant term -1 are +-1
    if (a2 - a1 == 0 || a1 + a2 + 2 == 0) continue;
    const poly::Poly f = {-1, a2, -a1, 1};
    const Rational disc = poly::cubic_discriminant(f);
    if (is_rational_square(disc)) continue;
    const FieldPtr& Q = M3->field();
    std::vector<FieldElem> c(9, FieldElem::zero(Q));
    c[3] = c[7] = c[2] = FieldElem::one(Q);
    c[5] = q_elem(Q, -a2);
    c[8] = q_elem(Q, a1);
    const AssocElem g = s.invertible_assoc(M3);
    return g * AssocElem(M3, c) * inverse(g);
  }
}

AssocElem random_reflection(Sampler& s, const AssocPtr& B, const AssocElem& form) {
  for (;;) {
    std::vector<FieldElem> v;
    for (int i = 0; i < 3; ++i) v.push_back(s.field_elem(B->field()));
    try {
      return hermitian_reflection(B, v, form);
    } catch (const Error& e) {
      if (e.code() != Errc::NotInvertible) throw;
    }
  }
}

std::vector<AssocElem> admissible_factors(Sampler& s, const AlbertPtr& J, int pairs) {
  const AssocPtr& B = J->assoc();
  const AssocElem form(B, B->g());
  std::vector<AssocElem> out;
  for (int k = 0; k < pairs; ++k) {
    const Rational r = s.nonzero_rational();
    out.push_back(r * random_reflection(s, B, form));
    out.push_back((1 / r) * random_reflection(s, B, form));
  }
  return out;
}

AssocElem twisted_special_unitary(Sampler& s, const AlbertPtr& J, int pairs) {
  const AssocPtr& B = J->assoc();
  const AssocElem form = AssocElem(B, B->g()) * J->u_inv();
  AssocElem q = AssocElem::one(B);
  for (int k = 0; k < 2 * pairs; ++k) q = q * random_reflection(s, B, form);
  return q;
}

InstrWord random_similarity_word(Sampler& s, const AlbertPtr& A, int length) {
  InstrWord w{A, {}};
  for (int k = 0; k < length; ++k) {
    if (s.integer(0, 3) == 0)
      w.gens.push_back(Generator::scalar(s.nonzero_rational()));
    else
      w.gens.push_back(Generator::u(s.invertible_albert(A)));
  }
  return w;
}

}  // namespace albert::testing
