#pragma once

#include "albert/random.hpp"
#include "albert/strmaps.hpp"

#include <vector>

namespace albert::cli {

// Random inputs for the factorization commands and verify suites.
AssocElem sample_norm_one(Sampler& s, const AssocPtr& D);
// Conjugate of a companion matrix of X^3 - a1 X^2 + a2 X - 1 with
// non-square discriminant: norm one, generating a non-cyclic cubic field.
AssocElem sample_noncyclic_norm_one(Sampler& s, const AssocPtr& M3);
// r1 e1, r1^{-1} e2, ... with e_i hermitian reflections (2 * pairs factors).
std::vector<AssocElem> sample_symmetric_factors(Sampler& s, const AlbertPtr& J, int pairs);
// Element of SU(B, Int(u) tau).
AssocElem sample_twisted_unitary(Sampler& s, const AlbertPtr& J);
InstrWord sample_similarity_word(Sampler& s, const AlbertPtr& A, int length);

}  // namespace albert::cli
