#include "albert/poly.hpp"

#include "albert/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace albert::poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (p[i - 1] != 0) return static_cast<int>(i) - 1;
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, const Rational& s) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly rem = a;
  trim(rem);
  const int da = degree(rem);
  if (da < db) return {Poly{}, rem};
  Poly quot(static_cast<std::size_t>(da - db + 1));
  const Rational lead_inv = 1 / b[static_cast<std::size_t>(db)];
  for (int k = da; k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly monic_gcd(const Poly& a, const Poly& b) { return extended_gcd(a, b).gcd; }

Bezout extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (degree(r1) >= 0) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const int d = degree(r0);
  if (d < 0) return {Poly{}, Poly{}, Poly{}};
  const Rational lead_inv = 1 / r0[static_cast<std::size_t>(d)];
  return {scale(r0, lead_inv), scale(s0, lead_inv), scale(t0, lead_inv)};
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
  return acc;
}

namespace {

using IntPoly = std::vector<mpz_class>;

// Primitive integer polynomial proportional to p.
IntPoly primitive_part(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  for (const auto& c : p) {
    Rational v = c * l;
    out.push_back(v.get_num());
  }
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : out) c /= g;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Poly to_poly(const IntPoly& p) {
  Poly out;
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = mul(basis, Poly{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    result = add(result, scale(basis, ys[i] / denom));
  }
  return result;
}

bool all_integral(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.get_den() == 1; });
}

// Kronecker search for a factor of exact degree d of the primitive poly f.
bool has_factor_of_degree(const IntPoly& f, int d) {
  struct Point {
    mpz_class x;
    std::vector<mpz_class> divisors;
  };
  std::vector<Point> candidates;
  for (int x = -8; x <= 8; ++x) {
    const mpz_class v = eval_int(f, x);
    if (v == 0) return true;  // integer root, linear factor
    candidates.push_back({x, positive_divisors(v)});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
  candidates.resize(static_cast<std::size_t>(d + 1));

  const Poly target = to_poly(f);
  std::vector<Rational> xs;
  for (const auto& c : candidates) xs.emplace_back(c.x);
  // Odometer over divisor choices. Positions after the first also choose a
  // sign; the first value stays positive since g and -g are interchangeable.
  const std::size_t n = candidates.size();
  std::vector<std::size_t> radix(n), idx(n, 0);
  for (std::size_t i = 0; i < n; ++i) radix[i] = candidates[i].divisors.size() * (i == 0 ? 1 : 2);
  while (true) {
    std::vector<Rational> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = i == 0 ? idx[i] : idx[i] / 2;
      const int sign = (i > 0 && idx[i] % 2 == 1) ? -1 : 1;
      ys[i] = Rational(candidates[i].divisors[k] * sign);
    }
    const Poly g = interpolate(xs, ys);
    if (degree(g) == d && all_integral(g)) {
      auto [q, r] = divmod(target, g);
      if (degree(r) < 0) return true;
    }
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == radix[pos]) idx[pos++] = 0;
    if (pos == n) return false;
  }
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  const IntPoly f = primitive_part(p);
  std::vector<Rational> roots;
  if (f.size() < 2) return roots;
  if (f[0] == 0) roots.emplace_back(0);
  std::size_t low = 0;
  while (low < f.size() && f[low] == 0) ++low;
  const auto num_divs = positive_divisors(f[low]);
  const auto den_divs = positive_divisors(f.back());
  for (const auto& a : num_divs) {
    for (const auto& b : den_divs) {
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (eval(to_poly(f), r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  return roots;
}

bool is_irreducible(const Poly& p) {
  const int n = degree(p);
  if (n < 1) return false;
  if (n == 1) return true;
  if (n > 6) fail(Errc::NotIrreducible, "irreducibility test supports degree <= 6");
  if (!rational_roots(p).empty()) return false;
  const IntPoly f = primitive_part(p);
  for (int d = 2; d <= n / 2; ++d)
    if (has_factor_of_degree(f, d)) return false;
  return true;
}

Rational cubic_discriminant(const Poly& p) {
  if (degree(p) != 3) fail(Errc::DimensionMismatch, "cubic_discriminant expects a cubic");
  const Rational& d = p[0];
  const Rational& c = p[1];
  const Rational& b = p[2];
  const Rational& a = p[3];
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

}  // namespace albert::poly
