#include "albert/fixpoint.hpp"
#include "albert/random.hpp"
#include "albert/strmaps.hpp"
#include "check.hpp"
#include "fixtures.hpp"

using namespace albert;
using albert::testing::shipped;

namespace {

Subspace slot_span(const AlbertPtr& A, const std::vector<AssocElem>& xs) {
  std::vector<Vec> vs;
  const AssocElem z = AssocElem::zero(A->assoc());
  for (const auto& x : xs) vs.push_back(AlbertElem::first(A, x, z, z).coords());
  return span(A, vs);
}

}  // namespace

TEST_CASE("subspace basics") {
  const AlbertPtr A = shipped().J_m3;
  Sampler rng(60);
  CHECK(full_space(A).dim() == 27);
  CHECK(trace_zero(A).dim() == 26);
  CHECK_FALSE(trace_zero(A).contains(AlbertElem::one(A)));
  const AlbertElem x = rng.albert(A), y = rng.albert(A);
  const Subspace S = span(A, {x.coords(), y.coords(), (x + y).coords()});
  CHECK(S.dim() == 2);
  CHECK(S.contains(x - y));
  CHECK(S == span(A, {(x - y).coords(), y.coords()}));
  CHECK_FALSE(is_closed_under_jmul(S));
  CHECK(is_closed_under_jmul(full_space(A)));
}

TEST_CASE("subalgebra closure") {
  const AlbertPtr A = shipped().J_cyc;
  Sampler rng(61);
  CHECK(subalgebra_closure(A, {}).dim() == 1);
  const AlbertElem x = rng.albert(A);
  const Subspace S = subalgebra_closure(A, {x});
  CHECK(S.dim() == 3);
  CHECK(S.contains(jmul(x, x)));
  CHECK(is_closed_under_jmul(S));
}

TEST_CASE("fixed subalgebras of J_p and psi_{p,1} in the cyclic instance") {
  const auto& s = shipped();
  const AlbertPtr A = s.J_cyc;
  const FieldElem x = FieldElem::generator(s.L);
  const AssocElem p = AssocElem::from_subfield(s.D, x.apply(s.sigma) / x);
  const Subspace fj = fixed_subspace(make_jp(A, p));
  CHECK(fj.dim() == 9);
  CHECK(fj.closed);
  std::vector<AssocElem> basis;
  for (std::size_t i = 0; i < 9; ++i) {
    Vec e(9);
    e[i] = 1;
    basis.push_back(AssocElem::from_coords(s.D, e));
  }
  CHECK(fj == slot_span(A, basis));

  const Subspace fp = fixed_subspace(make_psi(A, p, AssocElem::one(s.D)));
  CHECK(fp.dim() == 3);
  CHECK(fp == slot_span(A, {AssocElem::one(s.D), p, p * p}));
  CHECK(element_fixed_set(A, {make_jp(A, p), make_psi(A, p, AssocElem::one(s.D))}) == fp);
  CHECK(element_fixed_set(A, {}) == full_space(A));
  CHECK(fixed_subspace(identity_op(A)) == full_space(A));
}

TEST_CASE("automorphisms have a fixed trace-zero vector") {
  const auto& s = shipped();
  Sampler rng(62);
  for (const AlbertPtr& A : s.firsts()) {
    const AssocElem a = rng.invertible_assoc(A->assoc()), p = testing::norm_one(rng, A->assoc());
    for (const LinOp& f : {make_ia(A, a), make_jp(A, p), make_psi(A, a, p * a)}) {
      CHECK(fixed_point_determinant(f) == 0);
      CHECK(has_fixed_vector_in_A0(f));
    }
    CHECK_ERRC(fixed_point_determinant(make_rt(A, 2)), Errc::NotAutomorphism);
  }
}
