#include "albert/assoc3.hpp"
#include "albert/random.hpp"
#include "check.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace albert;
using albert::testing::shipped;

namespace {

AssocElem from_mat(const AssocPtr& A, const oracle::Mat3& m) { return {A, std::vector<FieldElem>(m.begin(), m.end())}; }

}  // namespace

TEST_CASE("matrix backend against cofactor oracles") {
  const auto& s = shipped();
  const AssocPtr MK = Assoc3Algebra::matrix3("MK", s.K);
  Sampler rng(20);
  for (const AssocPtr& A : {s.M3, MK, s.B}) {
    for (int k = 0; k < 30; ++k) {
      const AssocElem a = rng.assoc(A), b = rng.assoc(A);
      const oracle::Mat3 ma = oracle::mat3(a), mb = oracle::mat3(b);
      CHECK(oracle::equal3(oracle::mul3(ma, mb), a * b));
      CHECK(reduced_norm(a) == oracle::det3(ma));
      CHECK(reduced_trace(a) == oracle::tr3(ma));
      CHECK(oracle::equal3(oracle::adjugate3(ma), adjoint(a)));
      const oracle::Mat3 sum_adj = oracle::adjugate3(oracle::add3(ma, mb));
      CHECK(cross(a, b) == from_mat(A, sum_adj) - adjoint(a) - adjoint(b));
      CHECK(reduced_spur(a) == reduced_trace(adjoint(a)));
      CHECK(a * adjoint(a) == AssocElem::scalar(A, reduced_norm(a)));
    }
  }
}

TEST_CASE("cyclic backend against the closed-form norm") {
  const auto& s = shipped();
  Sampler rng(21);
  const AssocElem z = AssocElem::z(s.D);
  CHECK(z * z * z == AssocElem::scalar(s.D, Rational(2)));
  for (int k = 0; k < 40; ++k) {
    const AssocElem a = rng.assoc(s.D), b = rng.assoc(s.D);
    CHECK(a * b == oracle::cyclic_mul(a, b));
    CHECK(reduced_norm(a).to_rational() == oracle::cyclic_norm(a));
    CHECK(reduced_trace(a).to_rational() == oracle::cyclic_trace(a));
    CHECK(reduced_norm(a * b) == reduced_norm(a) * reduced_norm(b));
    CHECK(a * adjoint(a) == AssocElem::scalar(s.D, reduced_norm(a)));
    const FieldElem l = rng.field_elem(s.L);
    CHECK(z * AssocElem::from_subfield(s.D, l) == AssocElem::from_subfield(s.D, l.apply(s.sigma)) * z);
  }
  CHECK(AssocElem::from_subfield(s.D, FieldElem::generator(s.L)).in_subfield());
  CHECK_FALSE(z.in_subfield());
  CHECK_ERRC(AssocElem::matrix_unit(s.D, 0, 0), Errc::WrongBackend);
  CHECK_ERRC(AssocElem::z(s.M3), Errc::WrongBackend);
}

TEST_CASE("inverse, power and commutator") {
  const auto& s = shipped();
  Sampler rng(22);
  for (const AssocPtr& A : {s.M3, s.D, s.B}) {
    for (int k = 0; k < 10; ++k) {
      const AssocElem a = rng.invertible_assoc(A), b = rng.invertible_assoc(A);
      CHECK(a * inverse(a) == AssocElem::one(A));
      CHECK(power(a, 3) == a * a * a);
      CHECK(power(a, -2) * a * a == AssocElem::one(A));
      const AssocElem c = commutator(a, b);
      CHECK(c == b * a * inverse(b) * inverse(a));
      CHECK(reduced_norm(c).is_one());
    }
    CHECK_ERRC(inverse(AssocElem::zero(A)), Errc::NotInvertible);
  }
  CHECK_ERRC(inverse(AssocElem::matrix_unit(s.M3, 0, 1)), Errc::NotInvertible);
}

TEST_CASE("cyclic construction rejects bad data") {
  const auto& s = shipped();
  CHECK_ERRC(Assoc3Algebra::cyclic("bad", s.L, s.L->automorphisms()[0], 2), Errc::InvalidAutomorphism);
  CHECK_ERRC(Assoc3Algebra::cyclic("bad", s.L, s.sigma, 0), Errc::InvariantViolation);
  const auto C = NumberField::create("C", {-2, 0, 0, 1}, {});
  CHECK_ERRC(Assoc3Algebra::cyclic("bad", C, C->automorphisms()[0], 2), Errc::NotGalois);
}

TEST_CASE("unitary involution") {
  const auto& s = shipped();
  Sampler rng(23);
  for (int k = 0; k < 20; ++k) {
    const AssocElem a = rng.assoc(s.B), b = rng.assoc(s.B);
    CHECK(involution(a * b) == involution(b) * involution(a));
    CHECK(involution(involution(a)) == a);
    CHECK(reduced_norm(involution(a)) == reduced_norm(a).apply(s.B->bar()));
    const Vec c = rng.vec(9);
    const AssocElem h = symmetric_from_coords(s.B, c);
    CHECK(involution(h) == h);
    CHECK(symmetric_coords(h) == c);
    CHECK(unitary_data(h).is_symmetric);
    CHECK(reduced_norm(h).is_rational());
    const AssocElem sym = rng.symmetric(s.B);
    CHECK(involution(sym) == sym);
  }
  CHECK_ERRC(symmetric_coords(AssocElem::matrix_unit(s.B, 0, 1)), Errc::NotSymmetric);
  CHECK_ERRC(involution(AssocElem::one(s.M3)), Errc::WrongBackend);

  const auto zk = FieldElem::zero(s.K);
  std::vector<FieldElem> g(9, zk);
  g[0] = g[4] = g[8] = FieldElem::one(s.K);
  g[1] = testing::k_elem(0, 1);
  g[3] = testing::k_elem(0, 1);
  CHECK_ERRC(Assoc3Algebra::matrix3_unitary("bad", s.K, g), Errc::NotSymmetric);
  CHECK_ERRC(Assoc3Algebra::matrix3_unitary("bad", s.L, std::vector<FieldElem>(9, FieldElem::one(s.L))), Errc::WrongBackend);
}
