#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace albert {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). The result is
// canonical. Throws Error(ParseError) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& v);

// Exact square test in Q; on success the root is written to *root.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

}  // namespace albert
