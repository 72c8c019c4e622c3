#pragma once

#include "albert/albert.hpp"

#include <cstdint>
#include <random>

namespace albert {

// Seeded generator of small random exact objects. Numerators are drawn
// uniformly from [-bound, bound] and denominators from {1, 2}, which keeps
// coefficient growth in 27x27 products modest.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int bound = 3) : rng_(seed), bound_(bound) {}

  std::mt19937_64& engine() { return rng_; }
  int bound() const { return bound_; }

  int integer(int lo, int hi);
  Rational rational();
  Rational nonzero_rational();
  Vec vec(std::size_t n);

  FieldElem field_elem(const FieldPtr& F);
  FieldElem nonzero_field_elem(const FieldPtr& F);
  AssocElem assoc(const AssocPtr& A);
  AssocElem invertible_assoc(const AssocPtr& A);
  // tau(h) + h for random h.
  AssocElem symmetric(const AssocPtr& B);
  CayleyElem cayley(const CayleyPtr& C);
  AlbertElem albert(const AlbertPtr& A);
  AlbertElem invertible_albert(const AlbertPtr& A);

 private:
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace albert
