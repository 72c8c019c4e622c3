#include "albert/rational.hpp"

#include "albert/error.hpp"

#include <cctype>

namespace albert {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = strip(text);
  const auto slash = s.find('/');
  const std::string_view num = strip(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : strip(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    fail(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  Rational r(parse_integer(num), parse_integer(den));
  if (r.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_rational_square(const Rational& r, Rational* root) {
  if (r < 0) return false;
  if (r == 0) {
    if (root) *root = 0;
    return true;
  }
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
  if (root) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    *root = Rational(n, d);
  }
  return true;
}

}  // namespace albert
