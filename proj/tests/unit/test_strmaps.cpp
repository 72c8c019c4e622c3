#include "albert/random.hpp"
#include "albert/strmaps.hpp"
#include "check.hpp"
#include "fixtures.hpp"

using namespace albert;
using albert::testing::shipped;

TEST_CASE("linear operators") {
  const auto& s = shipped();
  Sampler rng(40);
  const AlbertPtr A = s.J_m3;
  const AlbertElem x = rng.invertible_albert(A), y = rng.albert(A);
  const LinOp U = u_linop(x);
  CHECK(U(y) == u_apply(x, y));
  CHECK(identity_op(A)(y) == y);
  CHECK((U * invert(U)).matrix.is_identity());
  CHECK((U * u_linop(y))(x) == U(u_apply(y, x)));
  CHECK_ERRC(invert(LinOp{A, Matrix(27, 27)}), Errc::NotInvertible);
  CHECK_ERRC(U * identity_op(s.J_cyc), Errc::MixedParents);
}

TEST_CASE("constructor families are automorphisms") {
  const auto& s = shipped();
  Sampler rng(41);
  for (const AlbertPtr& A : s.firsts()) {
    CAPTURE(A->label());
    const AssocPtr& D = A->assoc();
    const AssocElem a = rng.invertible_assoc(D), p = testing::norm_one(rng, D);
    const AssocElem b = p * a;
    CHECK(is_automorphism(make_psi(A, a, b)));
    CHECK(make_ia(A, a) == make_psi(A, a, a));
    CHECK(is_automorphism(make_jp(A, p)));
    // psi_{a,b} = J_{a b^{-1}} I_a
    CHECK(make_psi(A, a, b) == make_jp(A, a * inverse(b)) * make_ia(A, a));
    const AlbertElem x = rng.albert(A);
    const LinOp J = make_jp(A, p);
    CHECK(J(x) == AlbertElem::first(A, x.slot(0), x.slot(1) * p, inverse(p) * x.slot(2)));
    CHECK_ERRC(make_psi(A, a, Rational(2) * a), Errc::NormMismatch);
    CHECK_ERRC(make_jp(A, Rational(2) * p), Errc::NormNotOne);
  }
  const AlbertPtr J = s.J_second;
  const auto f = testing::admissible_factors(rng, J, 1);
  const AssocElem p = f[0] * f[1], q = testing::twisted_special_unitary(rng, J, 1);
  CHECK(is_special_unitary(p));
  CHECK(is_special_unitary_twisted(J, q));
  CHECK(is_automorphism(make_phi(J, p, q)));
  CHECK_ERRC(make_phi(J, Rational(2) * p, q), Errc::NotSpecialUnitary);
  CHECK_ERRC(make_psi(J, p, p), Errc::WrongConstruction);
}

TEST_CASE("classification of similarities") {
  const auto& s = shipped();
  Sampler rng(42);
  for (const AlbertPtr& A : {s.J_m3, s.H_split}) {
    CAPTURE(A->label());
    const AlbertElem x = rng.invertible_albert(A);
    const Classification cu = classify(u_linop(x));
    CHECK(cu.similarity == norm(x) * norm(x));
    CHECK_FALSE(cu.automorphism);
    const Classification cr = classify(make_rt(A, 2));
    CHECK(cr.similarity == 8);
    CHECK_FALSE(cr.automorphism);
    const Classification ci = classify(identity_op(A));
    CHECK(ci.automorphism);
    CHECK(ci.isometry);
    Matrix m = Matrix::identity(27);
    m(0, 1) = 1;
    CHECK_ERRC(classify(LinOp{A, m}), Errc::NotSimilarity);
  }
}

TEST_CASE("cubic coefficients reproduce the norm") {
  Sampler rng(44);
  for (const AlbertPtr& A : {shipped().J_cyc, shipped().H_div}) {
    const LinOp f = u_linop(rng.invertible_albert(A));
    const Vec c = cubic_coefficients(f);
    REQUIRE(c.size() == 3654);
    for (int k = 0; k < 3; ++k) {
      const Vec x = rng.vec(27);
      Rational sum = 0;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < 27; ++i)
        for (std::size_t j = i; j < 27; ++j)
          for (std::size_t l = j; l < 27; ++l) sum += c[idx++] * x[i] * x[j] * x[l];
      CHECK(sum == norm(f(AlbertElem(A, x))));
    }
  }
}

TEST_CASE("word evaluation and conjugation") {
  const auto& s = shipped();
  Sampler rng(43);
  const AlbertPtr A = s.J_m3;
  const AlbertElem x = rng.invertible_albert(A), y = rng.invertible_albert(A);
  const AssocElem p = testing::norm_one(rng, A->assoc());
  const InstrWord w{A, {Generator::u(x), Generator::scalar(3), Generator::u(y)}};
  CHECK(w.is_pure());
  const Evaluated e = eval_word(w);
  CHECK(e.op == u_linop(x) * make_rt(A, 3) * u_linop(y));
  CHECK(e.similitude == norm(x) * norm(x) * 27 * norm(y) * norm(y));
  CHECK(classify(e.op).similarity == e.similitude);

  const InstrWord wp{A, {Generator::jp(p)}};
  CHECK_FALSE(wp.is_pure());
  CHECK(eval_word(wp).op == make_jp(A, p));
  CHECK(eval_word(concat(w, wp)).op == e.op * make_jp(A, p));

  const LinOp theta = make_ia(A, rng.invertible_assoc(A->assoc()));
  CHECK(eval_word(conjugate_word(w, theta)).op == invert(theta) * e.op * theta);
  CHECK_ERRC(conjugate_word(wp, theta), Errc::WrongConstruction);
  CHECK_ERRC(conjugate_word(w, make_rt(A, 2)), Errc::NotIsomorphism);

  const AlbertElem e11 = AlbertElem::first(A, AssocElem::matrix_unit(A->assoc(), 0, 0), AssocElem::zero(A->assoc()),
                                           AssocElem::zero(A->assoc()));
  CHECK_ERRC(eval_word(InstrWord{A, {Generator::u(e11)}}), Errc::NotInvertibleGenerator);
  CHECK_ERRC(eval_word(InstrWord{A, {Generator::scalar(0)}}), Errc::NotInvertibleGenerator);
}
