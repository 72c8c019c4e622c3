#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace albert::oracle {

Rational gauss_det(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational resultant_norm(const FieldElem& a) {
  const poly::Poly& f = a.parent()->defining_poly();
  poly::Poly g = a.coeffs();
  poly::trim(g);
  const int n = poly::degree(f), m = poly::degree(g);
  if (m < 0) return 0;
  if (m == 0) {
    Rational out = 1;
    for (int i = 0; i < n; ++i) out *= g[0];
    return out;
  }
  // Sylvester matrix: m shifted rows of f, n shifted rows of g (leading
  // coefficient first). f is monic, so Res(f, g) = prod over roots of g(r).
  const std::size_t size = n + m;
  Matrix s(size, size);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(r, r + k) = f[n - k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(m + r, r + k) = g[m - k];
  return gauss_det(s);
}

Rational power_sum_trace(const FieldElem& a) {
  const poly::Poly& f = a.parent()->defining_poly();
  const int n = poly::degree(f);
  // e_k from f = x^n + c_{n-1} x^{n-1} + ... : c_{n-k} = (-1)^k e_k
  std::vector<Rational> e(n + 1), p(n + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) e[k] = (k % 2 ? -1 : 1) * f[n - k];
  p[0] = n;
  for (int k = 1; k < n; ++k) {
    Rational s = 0;
    for (int i = 1; i < k; ++i) s += (i % 2 ? 1 : -1) * e[i] * p[k - i];
    p[k] = s + (k % 2 ? 1 : -1) * k * e[k];
  }
  Rational t = 0;
  for (int k = 0; k < n; ++k) t += a.coeffs()[k] * p[k];
  return t;
}

Mat3 mat3(const AssocElem& a) {
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = a.entry(i);
  return m;
}

Mat3 mul3(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      out[3 * r + c] = a[3 * r] * b[c] + a[3 * r + 1] * b[3 + c] + a[3 * r + 2] * b[6 + c];
  return out;
}

Mat3 add3(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out[i] = a[i] + b[i];
  return out;
}

Mat3 scale3(const FieldElem& s, const Mat3& a) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out[i] = s * a[i];
  return out;
}

FieldElem det3(const Mat3& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

FieldElem tr3(const Mat3& m) { return m[0] + m[4] + m[8]; }

Mat3 adjugate3(const Mat3& m) {
  auto minor = [&](std::size_t r, std::size_t c) {
    std::size_t rs[2], cs[2], k = 0, l = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != r) rs[k++] = i;
      if (i != c) cs[l++] = i;
    }
    return m[3 * rs[0] + cs[0]] * m[3 * rs[1] + cs[1]] - m[3 * rs[0] + cs[1]] * m[3 * rs[1] + cs[0]];
  };
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const FieldElem cof = minor(r, c);
      out[3 * c + r] = (r + c) % 2 ? -cof : cof;
    }
  return out;
}

Mat3 conj_transpose3(const Mat3& a, const Automorphism& bar) {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[3 * c + r] = a[3 * r + c].apply(bar);
  return out;
}

bool equal3(const Mat3& a, const AssocElem& b) {
  for (std::size_t i = 0; i < 9; ++i)
    if (a[i] != b.entry(i)) return false;
  return true;
}

namespace {

FieldElem sigma_pow(const FieldElem& l, const Automorphism& s, std::size_t k) {
  FieldElem out = l;
  for (std::size_t i = 0; i < k; ++i) out = out.apply(s);
  return out;
}

Rational to_q(const FieldElem& x) { return x.to_rational(); }

}  // namespace

AssocElem cyclic_mul(const AssocElem& a, const AssocElem& b) {
  const Assoc3Algebra& D = *a.parent();
  const FieldPtr& L = D.field();
  std::vector<FieldElem> out(3, FieldElem::zero(L));
  // (l_i z^i)(m_j z^j) = l_i s^i(m_j) z^{i+j}, z^3 = gamma
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      FieldElem term = a.entry(i) * sigma_pow(b.entry(j), D.sigma(), i);
      if (i + j >= 3) term *= D.gamma();
      out[(i + j) % 3] += term;
    }
  return {a.parent(), out};
}

Rational cyclic_norm(const AssocElem& a) {
  const Assoc3Algebra& D = *a.parent();
  const Rational& g = D.gamma();
  const FieldElem prod = a.entry(0) * sigma_pow(a.entry(1), D.sigma(), 1) * sigma_pow(a.entry(2), D.sigma(), 2);
  return resultant_norm(a.entry(0)) + g * resultant_norm(a.entry(1)) + g * g * resultant_norm(a.entry(2)) -
         g * power_sum_trace(prod);
}

Rational cyclic_trace(const AssocElem& a) { return power_sum_trace(a.entry(0)); }

Rational first_norm(const AlbertElem& x) {
  const Rational& mu = x.parent()->mu();
  const AssocElem x0 = x.slot(0), x1 = x.slot(1), x2 = x.slot(2);
  if (x0.parent()->backend() == AssocBackend::Cyclic)
    return cyclic_norm(x0) + mu * cyclic_norm(x1) + cyclic_norm(x2) / mu -
           cyclic_trace(cyclic_mul(cyclic_mul(x0, x1), x2));
  const Mat3 m0 = mat3(x0), m1 = mat3(x1), m2 = mat3(x2);
  return to_q(det3(m0)) + mu * to_q(det3(m1)) + to_q(det3(m2)) / mu - to_q(tr3(mul3(mul3(m0, m1), m2)));
}

AlbertElem first_product_m3(const AlbertElem& x, const AlbertElem& y) {
  const AssocPtr& D = x.parent()->assoc();
  const FieldPtr& F = D->field();
  const Rational& mu = x.parent()->mu();
  const FieldElem half = FieldElem::rational(F, Rational(1, 2));
  Mat3 one;
  for (std::size_t i = 0; i < 9; ++i) one[i] = i % 4 == 0 ? FieldElem::one(F) : FieldElem::zero(F);
  auto neg = [&](const Mat3& a) { return scale3(FieldElem::rational(F, -1), a); };
  auto tilde = [&](const Mat3& a) { return scale3(half, add3(scale3(tr3(a), one), neg(a))); };
  auto cross = [&](const Mat3& a, const Mat3& b) {
    return add3(adjugate3(add3(a, b)), neg(add3(adjugate3(a), adjugate3(b))));
  };
  const Mat3 x0 = mat3(x.slot(0)), x1 = mat3(x.slot(1)), x2 = mat3(x.slot(2));
  const Mat3 y0 = mat3(y.slot(0)), y1 = mat3(y.slot(1)), y2 = mat3(y.slot(2));
  const Mat3 s0 = add3(scale3(half, add3(mul3(x0, y0), mul3(y0, x0))), add3(tilde(mul3(x1, y2)), tilde(mul3(y1, x2))));
  const Mat3 s1 = add3(add3(mul3(tilde(x0), y1), mul3(tilde(y0), x1)),
                       scale3(FieldElem::rational(F, 1 / (2 * mu)), cross(x2, y2)));
  const Mat3 s2 = add3(add3(mul3(x2, tilde(y0)), mul3(y2, tilde(x0))), scale3(FieldElem::rational(F, mu / 2), cross(x1, y1)));
  auto elem = [&](const Mat3& m) { return AssocElem(D, std::vector<FieldElem>(m.begin(), m.end())); };
  return AlbertElem::first(x.parent(), elem(s0), elem(s1), elem(s2));
}

Rational second_norm(const AlbertElem& x) {
  const AlbertAlgebra& A = *x.parent();
  const Assoc3Algebra& B = *A.assoc();
  const Automorphism& bar = B.bar();
  const Mat3 g = mat3(AssocElem(A.assoc(), B.g()));
  const Mat3 ginv = scale3(det3(g).inverse(), adjugate3(g));
  auto tau = [&](const Mat3& a) { return mul3(mul3(ginv, conj_transpose3(a, bar)), g); };
  const Mat3 b0 = mat3(x.herm()), b = mat3(x.bpart()), u = mat3(A.u());
  const FieldElem& mu = A.mu_k();
  const FieldElem n = det3(b0) + mu * det3(b) + mu.apply(bar) * det3(tau(b)) - tr3(mul3(mul3(mul3(b0, b), u), tau(b)));
  return to_q(n);
}

Rational reduced_norm_formula(const AlbertElem& x) {
  const auto& g = x.parent()->gammas();
  const auto& params = x.parent()->cayley()->params();
  auto cvec = [&](std::size_t i) { return x.c(i).coords(); };
  auto n = [&](const Vec& c) {
    Vec conj = -c;
    conj[0] = c[0];
    return cayley_dickson(c, conj, params)[0];
  };
  const Vec c1 = cvec(0), c2 = cvec(1), c3 = cvec(2);
  const Rational t123 = 2 * cayley_dickson(cayley_dickson(c1, c2, params), c3, params)[0];
  return x.xi(0) * x.xi(1) * x.xi(2) - g[1] / g[2] * x.xi(0) * n(c1) - g[2] / g[0] * x.xi(1) * n(c2) -
         g[0] / g[1] * x.xi(2) * n(c3) + t123;
}

Vec cayley_dickson(const Vec& a, const Vec& b, const std::array<Rational, 3>& params) {
  const std::size_t n = a.size();
  if (n == 1) return {a[0] * b[0]};
  const std::size_t h = n / 2;
  const Rational& lambda = params[h == 1 ? 0 : h == 2 ? 1 : 2];
  const Vec u(a.begin(), a.begin() + h), v(a.begin() + h, a.end());
  const Vec w(b.begin(), b.begin() + h), z(b.begin() + h, b.end());
  auto bar = [](Vec c) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
    return c;
  };
  Vec out = cayley_dickson(u, w, params) + lambda * cayley_dickson(bar(z), v, params);
  const Vec second = cayley_dickson(z, u, params) + cayley_dickson(v, bar(w), params);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace albert::oracle
