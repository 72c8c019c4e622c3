#pragma once

#include "albert/strmaps.hpp"

#include <vector>

namespace albert {

// A Q-subspace of an Albert algebra, stored as the nonzero rows of a reduced
// row echelon form, so equal subspaces have equal bases.
struct Subspace {
  AlbertPtr parent;
  std::vector<Vec> basis;
  bool closed = false;  // verified closed under jmul

  std::size_t dim() const { return basis.size(); }
  bool contains(const AlbertElem& x) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.parent == b.parent && a.basis == b.basis;
  }
};

Subspace span(const AlbertPtr& A, const std::vector<Vec>& vectors);
Subspace full_space(const AlbertPtr& A);
bool is_closed_under_jmul(const Subspace& S);

// ker(f - id). When f is an automorphism the result is checked to be a
// unital subalgebra and `closed` is set.
Subspace fixed_subspace(const LinOp& f);
// Intersection of the fixed subspaces; the whole algebra for an empty list.
Subspace element_fixed_set(const AlbertPtr& A, const std::vector<LinOp>& fs);
// Elements of trace zero (dimension 26).
Subspace trace_zero(const AlbertPtr& A);
// det(f|A0 - id) == 0 for an automorphism f. NotAutomorphism otherwise.
bool has_fixed_vector_in_A0(const LinOp& f);
Rational fixed_point_determinant(const LinOp& f);
// Smallest unital subalgebra containing gens.
Subspace subalgebra_closure(const AlbertPtr& A, const std::vector<AlbertElem>& gens);

}  // namespace albert
