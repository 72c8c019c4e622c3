#pragma once

#include "albert/albert.hpp"
#include "albert/innerfact.hpp"
#include "albert/random.hpp"
#include "albert/strmaps.hpp"

#include <vector>

namespace albert::testing {

// The algebras the repository ships configs for, built once per process.
struct Shipped {
  FieldPtr Q, L, K;
  Automorphism sigma;   // x -> x^2 - 2 on L
  AssocPtr M3;          // Matrix3(Q)
  AssocPtr D;           // (L/Q, sigma, 2)
  AssocPtr B;           // Matrix3(Q(i)) with tau(x) = g^{-1} conj(x)^T g, g = diag(1,1,2)
  CayleyPtr O_split;    // (1,1,1)
  CayleyPtr O_div;      // (-1,-1,-1)
  AlbertPtr J_split;    // J(M3, 1)
  AlbertPtr J_m3;       // J(M3, 2)
  AlbertPtr J_cyc;      // J(D, 3)
  AlbertPtr J_second;   // J(B, tau, diag(1,1,5), 2+i)
  AlbertPtr H_split;    // H3(O_split, 1,1,1)
  AlbertPtr H_div;      // H3(O_div, 1,-1,2)

  std::vector<AlbertPtr> all() const { return {J_split, J_m3, J_cyc, J_second, H_split, H_div}; }
  std::vector<AlbertPtr> firsts() const { return {J_m3, J_cyc}; }
};

const Shipped& shipped();

FieldElem q_elem(const FieldPtr& F, const Rational& r);
FieldElem k_elem(const Rational& re, const Rational& im);

// Reduced norm one, built as j i j^{-1} i^{-1} for random invertible i, j.
AssocElem norm_one(Sampler& s, const AssocPtr& D);

// g C g^{-1} with C the companion matrix of X^3 - a1 X^2 + a2 X - 1,
// irreducible over Q with non-square discriminant, and g random invertible.
AssocElem noncyclic_norm_one(Sampler& s, const AssocPtr& M3);

// Hermitian reflection of B for a random vector v with v^* form v != 0.
AssocElem random_reflection(Sampler& s, const AssocPtr& B, const AssocElem& form);

// Symmetric factors r1 e1, r1^{-1} e2, ... with e_i reflections; `pairs`
// pairs of them, so the product lies in SU(B, tau).
std::vector<AssocElem> admissible_factors(Sampler& s, const AlbertPtr& J, int pairs);

// Product of `pairs` twisted reflection pairs: an element q of SU(B, Int(u) tau).
AssocElem twisted_special_unitary(Sampler& s, const AlbertPtr& J, int pairs);

// Word of random invertible U generators and nonzero scalars.
InstrWord random_similarity_word(Sampler& s, const AlbertPtr& A, int length);

}  // namespace albert::testing
