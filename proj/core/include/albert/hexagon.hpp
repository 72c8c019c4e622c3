#pragma once

#include "albert/albert.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace albert {

// x1(a1) x2(t2) x3(a3) x4(t4) x5(a5) x6(t6): normal form of an element of
// the group U+ generated by root groups U1, U3, U5 (parametrized by A) and
// U2, U4, U6 (parametrized by Q).
struct HexElem {
  AlbertPtr parent;
  AlbertElem a1;
  Rational t2;
  AlbertElem a3;
  Rational t4;
  AlbertElem a5;
  Rational t6;

  static HexElem identity(const AlbertPtr& A);
  // x_i(value) for odd i; x_i(t) for even i.
  static HexElem root(int i, const AlbertElem& a);
  static HexElem root(const AlbertPtr& A, int i, const Rational& t);

  bool is_identity() const;
  friend bool operator==(const HexElem& g, const HexElem& h);
  friend bool operator!=(const HexElem& g, const HexElem& h) { return !(g == h); }
};

// Collection: letters of h are moved left past the tail of g one at a time,
// using x_j(s) x_i(v) = x_i(v) x_j(s) [x_i(v), x_j(s)]^{-1} for i < j with
// [a, b] = a^{-1} b^{-1} a b and
//   [x1(a), x3(b)] = x2(T(a,b))
//   [x3(a), x5(b)] = x4(T(a,b))
//   [x1(a), x5(b)] = x2(-T(a#,b)) x3(a x b) x4(T(a,b#))
//   [x2(t), x6(u)] = x4(tu)
//   [x1(a), x6(t)] = x2(-t N(a)) x3(t a#) x4(t^2 N(a)) x5(-t a)
// and all other pairs commuting.
HexElem hex_mul(const HexElem& g, const HexElem& h);
HexElem hex_inv(const HexElem& g);
// g^{-1} h^{-1} g h
HexElem hex_comm(const HexElem& g, const HexElem& h);

struct RelationResult {
  std::string name;
  int passed = 0;
  int total = 0;
};

// Instantiates every commutator relation (and the cubic-norm identities they
// rely on) `count` times with seeded random parameters and compares both
// sides exactly.
std::vector<RelationResult> relation_audit(const AlbertPtr& A, std::uint64_t seed, int count);
// (gh)w = g(hw) on `count` random triples; returns the number that hold.
int hex_associativity(const AlbertPtr& A, std::uint64_t seed, int count);

}  // namespace albert
