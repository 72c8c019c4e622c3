#include "samples.hpp"

#include "albert/error.hpp"
#include "albert/innerfact.hpp"

namespace albert::cli {

namespace {

AssocElem reflection(Sampler& s, const AssocPtr& B, const AssocElem& form) {
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

}  // namespace

AssocElem sample_norm_one(Sampler& s, const AssocPtr& D) {
  return commutator(s.invertible_assoc(D), s.invertible_assoc(D));
}

AssocElem sample_noncyclic_norm_one(Sampler& s, const AssocPtr& M3) {
  if (M3->backend() != AssocBackend::Matrix3 || M3->field()->degree() != 1)
    fail(Errc::WrongBackend, "non-cyclic samples need Matrix3 over Q");
  for (;;) {
    const int a1 = s.integer(-5, 5), a2 = s.integer(-5, 5);
    const poly::Poly f = {-1, a2, -a1, 1};
    if (!poly::is_irreducible(f) || is_rational_square(poly::cubic_discriminant(f))) continue;
    const FieldPtr& Q = M3->field();
    std::vector<FieldElem> c(9, FieldElem::zero(Q));
    c[3] = c[7] = c[2] = FieldElem::one(Q);
    c[5] = FieldElem::rational(Q, -a2);
    c[8] = FieldElem::rational(Q, a1);
    const AssocElem g = s.invertible_assoc(M3);
    return g * AssocElem(M3, c) * inverse(g);
  }
}

std::vector<AssocElem> sample_symmetric_factors(Sampler& s, const AlbertPtr& J, int pairs) {
  const AssocPtr& B = J->assoc();
  const AssocElem form(B, B->g());
  std::vector<AssocElem> out;
  for (int k = 0; k < pairs; ++k) {
    const Rational r = s.nonzero_rational();
    out.push_back(r * reflection(s, B, form));
    out.push_back((1 / r) * reflection(s, B, form));
  }
  return out;
}

AssocElem sample_twisted_unitary(Sampler& s, const AlbertPtr& J) {
  const AssocPtr& B = J->assoc();
  const AssocElem form = AssocElem(B, B->g()) * J->u_inv();
  return reflection(s, B, form) * reflection(s, B, form);
}

InstrWord sample_similarity_word(Sampler& s, const AlbertPtr& A, int length) {
  InstrWord w{A, {}};
  for (int k = 0; k < length; ++k) {
    if (s.integer(0, 3) == 0)
      w.gens.push_back(Generator::scalar(s.nonzero_rational()));
    else
      w.gens.push_back(Generator::u(s.invertible_albert(A)));
  }
  return w;
}

}  // namespace albert::cli
