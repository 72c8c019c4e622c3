#include "albert/hexagon.hpp"
#include "albert/random.hpp"
#include "check.hpp"
#include "fixtures.hpp"

using namespace albert;
using albert::testing::shipped;

namespace {

HexElem random_hex(Sampler& rng, const AlbertPtr& A) {
  return {A, rng.albert(A), rng.rational(), rng.albert(A), rng.rational(), rng.albert(A), rng.rational()};
}

}  // namespace

TEST_CASE("root groups are additive and the identity is neutral") {
  const AlbertPtr A = shipped().J_split;
  Sampler rng(70);
  const AlbertElem a = rng.albert(A), b = rng.albert(A);
  for (int i : {1, 3, 5}) {
    CHECK(hex_mul(HexElem::root(i, a), HexElem::root(i, b)) == HexElem::root(i, a + b));
    CHECK(hex_inv(HexElem::root(i, a)) == HexElem::root(i, -a));
  }
  for (int i : {2, 4, 6})
    CHECK(hex_mul(HexElem::root(A, i, 2), HexElem::root(A, i, Rational(1, 3))) == HexElem::root(A, i, Rational(7, 3)));
  const HexElem g = random_hex(rng, A);
  CHECK(hex_mul(g, HexElem::identity(A)) == g);
  CHECK(hex_mul(HexElem::identity(A), g) == g);
  CHECK(hex_mul(g, hex_inv(g)).is_identity());
  CHECK(hex_mul(hex_inv(g), g).is_identity());
  CHECK(hex_inv(HexElem::identity(A)).is_identity());
  CHECK_ERRC(HexElem::root(A, 1, 1), Errc::DimensionMismatch);
  CHECK_ERRC(HexElem::root(2, a), Errc::DimensionMismatch);
  CHECK_ERRC(hex_mul(g, HexElem::identity(shipped().J_m3)), Errc::MixedParents);
}

TEST_CASE("displayed commutators") {
  const AlbertPtr A = shipped().J_split;
  Sampler rng(71);
  const AlbertElem a = rng.albert(A), b = rng.albert(A);
  const Rational t = rng.nonzero_rational(), u = rng.nonzero_rational();
  CHECK(hex_comm(HexElem::root(A, 2, t), HexElem::root(A, 6, u)) == HexElem::root(A, 4, t * u));
  CHECK(hex_comm(HexElem::root(1, a), HexElem::root(3, b)) == HexElem::root(A, 2, trace_form(a, b)));
  CHECK(hex_comm(HexElem::root(3, a), HexElem::root(5, b)) == HexElem::root(A, 4, trace_form(a, b)));
  const HexElem c16 = hex_comm(HexElem::root(1, a), HexElem::root(A, 6, t));
  const HexElem rhs{A, AlbertElem::zero(A), -t * norm(a), t * adjoint(a), t * t * norm(a), -t * a, 0};
  CHECK(c16 == rhs);
  CHECK(hex_comm(HexElem::root(1, AlbertElem::zero(A)), HexElem::root(A, 6, t)).is_identity());
  CHECK(hex_comm(HexElem::root(A, 2, 0), HexElem::root(A, 6, u)).is_identity());
  CHECK(hex_comm(HexElem::root(1, a), HexElem::root(A, 4, t)).is_identity());
  CHECK(hex_comm(HexElem::root(3, a), HexElem::root(A, 6, t)).is_identity());
}

TEST_CASE("normal forms are unique") {
  const AlbertPtr A = shipped().J_split;
  Sampler rng(72);
  for (int k = 0; k < 10; ++k) {
    const HexElem g = random_hex(rng, A);
    HexElem h = g;
    h.t4 += 1;
    CHECK(g != h);
    CHECK_FALSE(hex_mul(g, hex_inv(h)).is_identity());
  }
}

TEST_CASE("relation audit and associativity across backends") {
  for (const AlbertPtr& A : {shipped().J_split, shipped().J_cyc, shipped().H_div}) {
    CAPTURE(A->label());
    for (const RelationResult& r : relation_audit(A, 5, 5)) {
      CAPTURE(r.name);
      CHECK(r.total == 5);
      CHECK(r.passed == r.total);
    }
    CHECK(hex_associativity(A, 6, 10) == 10);
  }
}

TEST_CASE("subgroup U[3,5] is closed") {
  const AlbertPtr A = shipped().J_split;
  Sampler rng(73);
  const HexElem g{A, AlbertElem::zero(A), 0, rng.albert(A), rng.rational(), rng.albert(A), 0};
  const HexElem h{A, AlbertElem::zero(A), 0, rng.albert(A), rng.rational(), rng.albert(A), 0};
  const HexElem gh = hex_mul(g, h);
  CHECK(gh.a1.is_zero());
  CHECK(gh.t2 == 0);
  CHECK(gh.t6 == 0);
}
