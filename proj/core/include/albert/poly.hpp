#pragma once

#include "albert/rational.hpp"

#include <utility>
#include <vector>

// Dense univariate polynomials over Q, coefficients in ascending degree.
namespace albert::poly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& s);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic_gcd(const Poly& a, const Poly& b);
Rational eval(const Poly& p, const Rational& x);

// Bezout: returns (g, s, t) with s*a + t*b = g, g the monic gcd.
struct Bezout {
  Poly gcd, s, t;
};
Bezout extended_gcd(const Poly& a, const Poly& b);

std::vector<Rational> rational_roots(const Poly& p);

// Irreducibility over Q for degree 1..6: rational-root test followed by a
// Kronecker search for factors of degree 2 and 3.
bool is_irreducible(const Poly& p);

// Discriminant of a cubic (any leading coefficient).
Rational cubic_discriminant(const Poly& p);

}  // namespace albert::poly
