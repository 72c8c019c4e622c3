#pragma once

#include "albert/strmaps.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace albert {

// target = prod_k (j_k i_k j_k^{-1} i_k^{-1}), leftmost pair first.
struct CommutatorWitness {
  AssocElem target;
  std::vector<std::pair<AssocElem, AssocElem>> pairs;  // (i, j)

  AssocElem product() const;
  bool verify() const { return product() == target; }
};

// f(X) = (X - a2)(X - a1)(X - a0) with c = a0 a1 - a1 a0, c a_i c^{-1} = a_{i+1}
// and c^3 = gamma.
struct WedderburnData {
  AssocElem a0, a1, a2, c;
  Rational gamma;
  std::uint64_t seed = 0;  // seed of the successful attempt
  int attempts = 0;
};

// Evaluates to J_p for p = j i j^{-1} i^{-1}:
//   [U(0,0,1), U((ij)^{-1},0,0), U(i,0,0), U(j,0,0), U(0,1,0)]
InstrWord jp_word(const AlbertPtr& A, const AssocElem& i, const AssocElem& j);
// Word for J_{target}: jp_word of the pairs in reverse order (J_{ab} = J_b J_a).
InstrWord jp_word(const AlbertPtr& A, const CommutatorWitness& w);

// p in L with N(p) = 1: the single pair (z, q^{-1}) with p = q^{-1} sigma(q).
CommutatorWitness commutator_decomp_cyclic(const AssocElem& p);

// Reduced characteristic polynomial X^3 - t X^2 + s X - n of a over Q.
poly::Poly reduced_char_poly(const AssocElem& a);
// True when the reduced characteristic polynomial is irreducible with square
// discriminant. NotCubicSubfield when it is reducible.
bool generates_cyclic_subfield(const AssocElem& a);

WedderburnData wedderburn_factor(const AssocElem& a, std::uint64_t seed, int retries = 64);
bool verify_wedderburn(const WedderburnData& w);

// Witness for p^3 with N(p) = 1: one pair for p in the distinguished L of a
// cyclic algebra, two pairs built from a Wedderburn factorization for
// non-cyclic p, none for p = 1.
CommutatorWitness cube_commutators(const AssocElem& p, std::uint64_t seed, int retries = 64);

struct IaFactorization {
  InstrWord word;
  bool expanded = false;  // true when the word is free of primitive generators
};

// I_a = U_{n(a)^{-1}1} U_(0,0,1) J_s U_(0,a,0) U_(0,0,a) U_(a,0,0) U_(0,1,0),
// s = n(a) a^{-3}. J_s is expanded into U generators when a commutator
// witness for s is supplied or can be found (a in L for cyclic algebras,
// s = 1); otherwise it stays primitive and `expanded` is false.
IaFactorization ia_word(const AlbertPtr& A, const AssocElem& a, const std::optional<CommutatorWitness>& witness = {});

// [R_{N(c)^{-1}}, U(0,0,1), U(0,c#,0)]: sends (x,0,0) to (cx,0,0).
InstrWord chi_map(const AlbertPtr& A, const AssocElem& c);

struct SimilarityReduction {
  InstrWord chi;
  AssocElem a, b;  // f = eval(chi) psi_{a,b}
};

// f must be a similarity of a first construction mapping slot 0 onto itself.
SimilarityReduction reduce_similarity(const LinOp& f);

struct IsometryReduction {
  InstrWord chi;
  LinOp g;  // eval(chi) f, with N(g(1)) = 1
};

IsometryReduction reduce_to_isometry(const LinOp& f);

// Second construction: [U(s1,0), ..., U(sn,0)], evaluating to phi_{s1...sn}.
InstrWord phi_p_word(const AlbertPtr& A, const std::vector<AssocElem>& s);

// 1 - 2P with P the g-orthogonal projection onto K v (v^* g v != 0):
// symmetric, unitary, squares to 1, norm -1.
AssocElem hermitian_reflection(const AssocPtr& B, const std::vector<FieldElem>& v);
AssocElem hermitian_reflection(const AssocPtr& B, const std::vector<FieldElem>& v, const AssocElem& form);

}  // namespace albert
