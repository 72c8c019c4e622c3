#include "albert/innerfact.hpp"
#include "albert/random.hpp"
#include "check.hpp"
#include "fixtures.hpp"

using namespace albert;
using albert::testing::shipped;

TEST_CASE("jp_word is a five-generator word for J_p") {
  Sampler rng(50);
  for (const AlbertPtr& A : shipped().firsts()) {
    CAPTURE(A->label());
    const AssocPtr& D = A->assoc();
    const AssocElem i = rng.invertible_assoc(D), j = rng.invertible_assoc(D);
    const InstrWord w = jp_word(A, i, j);
    CHECK(w.gens.size() == 5);
    CHECK(w.is_pure());
    CHECK(eval_word(w).op == make_jp(A, commutator(i, j)));
    CHECK(eval_word(w).similitude == 1);

    const AssocElem k = rng.invertible_assoc(D), l = rng.invertible_assoc(D);
    const CommutatorWitness wit{commutator(i, j) * commutator(k, l), {{i, j}, {k, l}}};
    CHECK(wit.verify());
    CHECK(eval_word(jp_word(A, wit)).op == make_jp(A, wit.target));
    CHECK_ERRC(jp_word(A, AssocElem::zero(D), j), Errc::NotInvertible);
  }
  CHECK_ERRC(jp_word(shipped().J_second, AssocElem::one(shipped().B), AssocElem::one(shipped().B)),
             Errc::WrongConstruction);
}

TEST_CASE("Hilbert 90 commutator witnesses in the cyclic algebra") {
  const auto& s = shipped();
  Sampler rng(51);
  for (int k = 0; k < 10; ++k) {
    const FieldElem q = rng.nonzero_field_elem(s.L);
    const AssocElem p = AssocElem::from_subfield(s.D, q.apply(s.sigma) / q);
    const CommutatorWitness w = commutator_decomp_cyclic(p);
    CHECK(w.pairs.size() == 1);
    CHECK(w.verify());
    CHECK(w.target == p);
  }
  CHECK_ERRC(commutator_decomp_cyclic(AssocElem::z(s.D)), Errc::WrongBackend);
}

TEST_CASE("reduced characteristic polynomial and cyclicity") {
  const auto& s = shipped();
  Sampler rng(52);
  for (const AssocPtr& D : {s.M3, s.D}) {
    const AssocElem a = rng.assoc(D);
    const poly::Poly f = reduced_char_poly(a);
    REQUIRE(f.size() == 4);
    CHECK(f[3] == 1);
    CHECK(f[2] == -reduced_trace(a).to_rational());
    CHECK(f[1] == reduced_spur(a).to_rational());
    CHECK(f[0] == -reduced_norm(a).to_rational());
  }
  CHECK(generates_cyclic_subfield(AssocElem::from_subfield(s.D, FieldElem::generator(s.L))));
  CHECK_FALSE(generates_cyclic_subfield(testing::noncyclic_norm_one(rng, s.M3)));
  CHECK_ERRC(generates_cyclic_subfield(AssocElem::one(s.M3)), Errc::NotCubicSubfield);
}

TEST_CASE("Wedderburn factorization and the cube of a norm-one element") {
  const auto& s = shipped();
  Sampler rng(53);
  for (int k = 0; k < 3; ++k) {
    const AssocElem p = testing::noncyclic_norm_one(rng, s.M3);
    const WedderburnData w = wedderburn_factor(p, 100 + k);
    CHECK(verify_wedderburn(w));
    CHECK(w.a0 == p);
    CHECK(w.c * w.a0 * inverse(w.c) == w.a1);
    CHECK(w.c * w.a1 * inverse(w.c) == w.a2);
    CHECK(w.c * w.c * w.c == AssocElem::scalar(s.M3, w.gamma));
    CHECK(w.attempts >= 1);
    const CommutatorWitness cube = cube_commutators(p, 200 + k);
    CHECK(cube.pairs.size() == 2);
    CHECK(cube.target == p * p * p);
    CHECK(cube.verify());
  }
  const AssocElem l = AssocElem::from_subfield(s.D, FieldElem::generator(s.L));
  CHECK_ERRC(wedderburn_factor(l, 1), Errc::CyclicElement);

  const FieldElem q = rng.nonzero_field_elem(s.L);
  const AssocElem pl = AssocElem::from_subfield(s.D, q.apply(s.sigma) / q);
  CHECK(cube_commutators(pl, 1).pairs.size() == 1);
  CHECK(cube_commutators(pl, 1).verify());
  CHECK(cube_commutators(AssocElem::one(s.D), 1).pairs.empty());
  const AssocElem d = rng.invertible_assoc(s.D);
  CHECK_ERRC(cube_commutators(d * pl * inverse(d), 1), Errc::CyclicElement);
  CHECK_ERRC(cube_commutators(Rational(2) * pl, 1), Errc::NormNotOne);
}

TEST_CASE("ia_word expansions") {
  const auto& s = shipped();
  Sampler rng(54);
  for (const AlbertPtr& A : s.firsts()) {
    const AssocElem a = rng.invertible_assoc(A->assoc());
    const IaFactorization f = ia_word(A, a);
    CHECK_FALSE(f.expanded);
    CHECK(f.word.gens.size() == 7);
    CHECK(eval_word(f.word).op == make_ia(A, a));
    // s = n(a) a^-3 = 1 for scalar a
    const IaFactorization g = ia_word(A, AssocElem::scalar(A->assoc(), Rational(2)));
    CHECK(g.expanded);
    CHECK(eval_word(g.word).op.matrix.is_identity());
  }
  const AssocElem a = AssocElem::from_subfield(s.D, rng.nonzero_field_elem(s.L));
  const IaFactorization f = ia_word(s.J_cyc, a);
  CHECK(f.expanded);
  CHECK(f.word.is_pure());
  CHECK(eval_word(f.word).op == make_ia(s.J_cyc, a));

  const AssocElem sa = AssocElem::scalar(s.D, reduced_norm(a)) * power(a, -3);
  const IaFactorization h = ia_word(s.J_cyc, a, commutator_decomp_cyclic(sa));
  CHECK(h.expanded);
  CHECK(eval_word(h.word).op == make_ia(s.J_cyc, a));
  CHECK_ERRC(ia_word(s.J_cyc, a, commutator_decomp_cyclic(AssocElem::one(s.D))), Errc::InvariantViolation);
  CHECK_ERRC(ia_word(s.J_cyc, AssocElem::zero(s.D)), Errc::NotInvertible);
}

TEST_CASE("similarity reduction") {
  const auto& s = shipped();
  Sampler rng(55);
  for (const AlbertPtr& A : s.firsts()) {
    CAPTURE(A->label());
    const AssocPtr& D = A->assoc();
    const AssocElem c = rng.invertible_assoc(D), x = rng.assoc(D);
    const AssocElem zero = AssocElem::zero(D);
    const LinOp chi = eval_word(chi_map(A, c)).op;
    CHECK(chi(AlbertElem::first(A, x, zero, zero)) == AlbertElem::first(A, c * x, zero, zero));

    const AssocElem a = rng.invertible_assoc(D), b = testing::norm_one(rng, D) * a;
    const LinOp f = chi * make_psi(A, a, b);
    const SimilarityReduction r = reduce_similarity(f);
    CHECK(eval_word(r.chi).op * make_psi(A, r.a, r.b) == f);

    const LinOp g = eval_word(testing::random_similarity_word(rng, A, 2)).op;
    const IsometryReduction iso = reduce_to_isometry(g);
    CHECK(norm(iso.g(AlbertElem::one(A))) == 1);
    CHECK(eval_word(iso.chi).op * g == iso.g);
  }
  const AlbertPtr A = s.J_m3;
  const AlbertElem e = AlbertElem::first(A, AssocElem::zero(A->assoc()), AssocElem::one(A->assoc()), AssocElem::zero(A->assoc()));
  CHECK_ERRC(reduce_similarity(u_linop(e)), Errc::NotStabilizing);
  CHECK_ERRC(reduce_to_isometry(LinOp{A, Matrix(27, 27)}), Errc::SingularImageOfOne);
}

TEST_CASE("second construction words and reflections") {
  const auto& s = shipped();
  Sampler rng(56);
  const AlbertPtr J = s.J_second;
  const AssocElem form(s.B, s.B->g());
  for (int k = 0; k < 5; ++k) {
    const AssocElem h = testing::random_reflection(rng, s.B, form);
    CHECK(involution(h) == h);
    CHECK(h * h == AssocElem::one(s.B));
    CHECK(reduced_norm(h) == FieldElem::rational(s.K, -1));
  }
  const auto f = testing::admissible_factors(rng, J, 1);
  CHECK(eval_word(phi_p_word(J, f)).op == make_phi(J, f[0] * f[1], AssocElem::one(s.B)));
  CHECK_ERRC(phi_p_word(J, {f[0]}), Errc::NotSpecialUnitary);
  CHECK_ERRC(phi_p_word(J, {AssocElem::matrix_unit(s.B, 0, 1)}), Errc::NotSymmetric);

  const auto zk = FieldElem::zero(s.K), one = FieldElem::one(s.K);
  std::vector<FieldElem> hf(9, zk);
  hf[0] = hf[8] = one;
  hf[4] = -one;
  CHECK_ERRC(hermitian_reflection(s.B, {one, one, zk}, AssocElem(s.B, hf)), Errc::NotInvertible);
}
