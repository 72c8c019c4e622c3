#include "albert/albert.hpp"
#include "albert/random.hpp"
#include "check.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace albert;
using albert::testing::shipped;

namespace {

Rational oracle_norm(const AlbertElem& x) {
  switch (x.parent()->construction()) {
    case Construction::First: return oracle::first_norm(x);
    case Construction::Second: return oracle::second_norm(x);
    case Construction::Reduced: return oracle::reduced_norm_formula(x);
  }
  return {};
}

}  // namespace

TEST_CASE("cubic norm structure identities in every shipped algebra") {
  Sampler rng(30);
  for (const AlbertPtr& A : shipped().all()) {
    CAPTURE(A->label());
    const AlbertElem one = AlbertElem::one(A);
    CHECK(trace(one) == 3);
    CHECK(norm(one) == 1);
    CHECK(adjoint(one) == one);
    for (int k = 0; k < 8; ++k) {
      const AlbertElem x = rng.albert(A), y = rng.albert(A);
      const AlbertElem x2 = jmul(x, x), xs = adjoint(x);
      const Rational n = norm(x);
      CHECK(jmul(x, one) == x);
      CHECK(jmul(x, y) == jmul(y, x));
      CHECK(jmul(jmul(x2, y), x) == jmul(x2, jmul(y, x)));
      CHECK(jmul(x, xs) == n * one);
      CHECK(adjoint(xs) == n * x);
      CHECK(cross(x, x) == Rational(2) * xs);
      CHECK(n == newton_norm(x));
      CHECK(n == oracle_norm(x));
      CHECK(trace_form(x, y) == trace(jmul(x, y)));
      // x^3 - T(x) x^2 + S(x) x - N(x) 1 = 0
      CHECK(jmul(x2, x) - trace(x) * x2 + trace(xs) * x - n * one == AlbertElem::zero(A));
      const AlbertElem u = u_apply(x, y);
      CHECK(u == Rational(2) * jmul(x, jmul(x, y)) - jmul(x2, y));
      CHECK(u_op(x).apply(y.coords()) == u.coords());
      CHECK(mult_op(x).apply(y.coords()) == jmul(x, y).coords());
      CHECK(norm(u) == n * n * norm(y));
      if (n != 0) CHECK(jmul(x, inverse(x)) == one);
    }
  }
}

TEST_CASE("first construction product against the cofactor transcription") {
  Sampler rng(31);
  for (const AlbertPtr& A : {shipped().J_split, shipped().J_m3}) {
    for (int k = 0; k < 25; ++k) {
      const AlbertElem x = rng.albert(A), y = rng.albert(A);
      CHECK(jmul(x, y) == oracle::first_product_m3(x, y));
    }
  }
}

TEST_CASE("non-invertible elements") {
  const auto& s = shipped();
  const AlbertElem e = AlbertElem::first(s.J_m3, AssocElem::matrix_unit(s.M3, 0, 0), AssocElem::zero(s.M3),
                                         AssocElem::zero(s.M3));
  CHECK(norm(e) == 0);
  CHECK_FALSE(is_invertible(e));
  CHECK_ERRC(inverse(e), Errc::NotInvertible);
  CHECK_ERRC(jmul(AlbertElem::one(s.J_m3), AlbertElem::one(s.J_cyc)), Errc::MixedParents);
  CHECK_ERRC(AlbertElem::one(s.J_m3).herm(), Errc::WrongConstruction);
  CHECK_ERRC(AlbertElem(s.J_m3, Vec(5)), Errc::DimensionMismatch);
}

TEST_CASE("constructor checks") {
  const auto& s = shipped();
  CHECK_ERRC(AlbertAlgebra::first("bad", s.M3, 0), Errc::InvariantViolation);
  CHECK_ERRC(AlbertAlgebra::first("bad", Assoc3Algebra::matrix3("MK", s.K), 1), Errc::WrongBackend);
  CHECK_ERRC(AlbertAlgebra::reduced("bad", s.O_div, {1, 0, 1}), Errc::InvariantViolation);
  const AssocElem u = s.J_second->u();
  CHECK_ERRC(AlbertAlgebra::second("bad", s.B, u, FieldElem(s.K, Vec{1, 1})), Errc::InvariantViolation);
  CHECK_ERRC(AlbertAlgebra::second("bad", s.B, AssocElem::matrix_unit(s.B, 0, 1), FieldElem::one(s.K)),
             Errc::InvariantViolation);
  CHECK_ERRC(AlbertAlgebra::second("bad", s.M3, AssocElem::one(s.M3), FieldElem::one(s.Q)), Errc::WrongBackend);
}

TEST_CASE("reduced algebra element layout") {
  const auto& s = shipped();
  const AlbertPtr H = s.H_div;
  const CayleyElem z = CayleyElem::zero(s.O_div);
  const AlbertElem diag = AlbertElem::reduced(H, {2, 3, 5}, {z, z, z});
  CHECK(norm(diag) == 30);
  CHECK(trace(diag) == 10);
  const AlbertElem e = AlbertElem::reduced(H, {0, 0, 0}, {CayleyElem::one(s.O_div), z, z});
  // off-diagonal c1 with Gamma = (1,-1,2): N(xi + c1) = -(g2/g3) xi1 n(c1)
  CHECK(norm(AlbertElem::one(H) + e) == 1 - Rational(-1, 2));
}

TEST_CASE("J(D,3) is isotropic: 3 is the reduced norm of 1 + z") {
  const auto& s = shipped();
  const AssocElem d = AssocElem::one(s.D) + AssocElem::z(s.D);
  REQUIRE(reduced_norm(d).to_rational() == 3);
  const AlbertElem x = AlbertElem::first(s.J_cyc, -d, AssocElem::one(s.D), AssocElem::zero(s.D));
  CHECK(norm(x) == 0);
  CHECK_FALSE(is_invertible(x));
  CHECK(jmul(x, adjoint(x)).is_zero());
  CHECK_FALSE(adjoint(x).is_zero());
}
