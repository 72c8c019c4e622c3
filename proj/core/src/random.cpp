#include "albert/random.hpp"

namespace albert {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational() {
  Rational r(integer(-bound_, bound_), integer(1, 2));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

Vec Sampler::vec(std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rational();
  return v;
}

FieldElem Sampler::field_elem(const FieldPtr& F) { return {F, vec(F->degree())}; }

FieldElem Sampler::nonzero_field_elem(const FieldPtr& F) {
  for (;;) {
    FieldElem x = field_elem(F);
    if (!x.is_zero()) return x;
  }
}

AssocElem Sampler::assoc(const AssocPtr& A) { return AssocElem::from_coords(A, vec(A->q_dim())); }

AssocElem Sampler::invertible_assoc(const AssocPtr& A) {
  for (;;) {
    AssocElem a = assoc(A);
    if (is_invertible(a)) return a;
  }
}

AssocElem Sampler::symmetric(const AssocPtr& B) { return symmetric_from_coords(B, vec(9)); }

CayleyElem Sampler::cayley(const CayleyPtr& C) { return {C, vec(CayleyAlgebra::dim)}; }

AlbertElem Sampler::albert(const AlbertPtr& A) { return {A, vec(AlbertAlgebra::dim)}; }

AlbertElem Sampler::invertible_albert(const AlbertPtr& A) {
  for (;;) {
    AlbertElem x = albert(A);
    if (is_invertible(x)) return x;
  }
}

}  // namespace albert
