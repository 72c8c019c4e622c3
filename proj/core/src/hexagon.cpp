#include "albert/hexagon.hpp"

#include "albert/error.hpp"
#include "albert/random.hpp"

#include <array>

namespace albert {

namespace {

// A letter x_i(value): value has 27 coordinates for odd i, one for even i.
struct Letter {
  int index;
  Vec value;
};

using Word = std::vector<Letter>;

bool odd(int i) { return i % 2 == 1; }

struct Collector {
  AlbertPtr A;
  std::array<Vec, 7> slots;  // slots[1..6]

  explicit Collector(const AlbertPtr& alg) : A(alg) {
    for (int i = 1; i <= 6; ++i) slots[i] = Vec(odd(i) ? AlbertAlgebra::dim : 1);
  }

  AlbertElem elem(const Vec& v) const { return {A, v}; }

  // [x_i(v), x_j(s)] for i < j as a word in increasing index order.
  Word commutator(int i, const Vec& v, int j, const Vec& s) const {
    if (i == 1 && j == 3) return {{2, {trace_form(elem(v), elem(s))}}};
    if (i == 3 && j == 5) return {{4, {trace_form(elem(v), elem(s))}}};
    if (i == 1 && j == 5) {
      const AlbertElem a = elem(v), b = elem(s);
      return {{2, {-trace_form(adjoint(a), b)}}, {3, cross(a, b).coords()}, {4, {trace_form(a, adjoint(b))}}};
    }
    if (i == 2 && j == 6) return {{4, {v[0] * s[0]}}};
    if (i == 1 && j == 6) {
      const AlbertElem a = elem(v);
      const Rational& t = s[0];
      const Rational n = norm(a);
      return {{2, {-t * n}}, {3, (t * adjoint(a)).coords()}, {4, {t * t * n}}, {5, (-t * a).coords()}};
    }
    return {};
  }

  void mul(int i, const Vec& v) {
    if (is_zero(v)) return;
    Word tail;
    for (int j = i + 1; j <= 6; ++j) {
      if (!is_zero(slots[j])) tail.push_back({j, slots[j]});
      slots[j] = Vec(slots[j].size());
    }
    slots[i] = slots[i] + v;
    for (const auto& t : tail) {
      mul(t.index, t.value);
      const Word c = commutator(i, v, t.index, t.value);
      for (auto it = c.rbegin(); it != c.rend(); ++it) mul(it->index, -it->value);
    }
  }

  void mul(const HexElem& h) {
    mul(1, h.a1.coords());
    mul(2, {h.t2});
    mul(3, h.a3.coords());
    mul(4, {h.t4});
    mul(5, h.a5.coords());
    mul(6, {h.t6});
  }

  HexElem result() const {
    return {A, elem(slots[1]), slots[2][0], elem(slots[3]), slots[4][0], elem(slots[5]), slots[6][0]};
  }
};

}  // namespace

HexElem HexElem::identity(const AlbertPtr& A) {
  const AlbertElem z = AlbertElem::zero(A);
  return {A, z, 0, z, 0, z, 0};
}

HexElem HexElem::root(int i, const AlbertElem& a) {
  HexElem g = identity(a.parent());
  switch (i) {
    case 1: g.a1 = a; break;
    case 3: g.a3 = a; break;
    case 5: g.a5 = a; break;
    default: fail(Errc::DimensionMismatch, "root groups U1, U3, U5 are parametrized by the algebra");
  }
  return g;
}

HexElem HexElem::root(const AlbertPtr& A, int i, const Rational& t) {
  HexElem g = identity(A);
  switch (i) {
    case 2: g.t2 = t; break;
    case 4: g.t4 = t; break;
    case 6: g.t6 = t; break;
    default: fail(Errc::DimensionMismatch, "root groups U2, U4, U6 are parametrized by scalars");
  }
  return g;
}

bool HexElem::is_identity() const {
  return a1.is_zero() && t2 == 0 && a3.is_zero() && t4 == 0 && a5.is_zero() && t6 == 0;
}

bool operator==(const HexElem& g, const HexElem& h) {
  return g.parent == h.parent && g.a1 == h.a1 && g.t2 == h.t2 && g.a3 == h.a3 && g.t4 == h.t4 && g.a5 == h.a5 &&
         g.t6 == h.t6;
}

HexElem hex_mul(const HexElem& g, const HexElem& h) {
  if (g.parent != h.parent) fail(Errc::MixedParents, "hexagon elements over different algebras");
  Collector c(g.parent);
  c.mul(g);
  c.mul(h);
  return c.result();
}

HexElem hex_inv(const HexElem& g) {
  Collector c(g.parent);
  c.mul(6, {-g.t6});
  c.mul(5, (-g.a5).coords());
  c.mul(4, {-g.t4});
  c.mul(3, (-g.a3).coords());
  c.mul(2, {-g.t2});
  c.mul(1, (-g.a1).coords());
  return c.result();
}

HexElem hex_comm(const HexElem& g, const HexElem& h) { return hex_mul(hex_mul(hex_inv(g), hex_inv(h)), hex_mul(g, h)); }

namespace {

HexElem random_hex(const AlbertPtr& A, Sampler& s) {
  return {A, s.albert(A), s.rational(), s.albert(A), s.rational(), s.albert(A), s.rational()};
}

HexElem product(const std::vector<HexElem>& gs) {
  HexElem out = HexElem::identity(gs.front().parent);
  for (const auto& g : gs) out = hex_mul(out, g);
  return out;
}

}  // namespace

std::vector<RelationResult> relation_audit(const AlbertPtr& A, std::uint64_t seed, int count) {
  Sampler s(seed);
  std::vector<RelationResult> out;
  const auto run = [&](std::string name, const auto& check) {
    RelationResult r{std::move(name), 0, count};
    for (int k = 0; k < count; ++k) r.passed += check() ? 1 : 0;
    out.push_back(std::move(r));
  };
  const auto x = [&](int i, const AlbertElem& a) { return HexElem::root(i, a); };
  const auto xt = [&](int i, const Rational& t) { return HexElem::root(A, i, t); };

  run("[x1(a),x3(b)] = x2(T(a,b))", [&] {
    const AlbertElem a = s.albert(A), b = s.albert(A);
    return hex_comm(x(1, a), x(3, b)) == xt(2, trace_form(a, b));
  });
  run("[x3(a),x5(b)] = x4(T(a,b))", [&] {
    const AlbertElem a = s.albert(A), b = s.albert(A);
    return hex_comm(x(3, a), x(5, b)) == xt(4, trace_form(a, b));
  });
  run("[x1(a),x5(b)] = x2(-T(a#,b)) x3(a x b) x4(T(a,b#))", [&] {
    const AlbertElem a = s.albert(A), b = s.albert(A);
    return hex_comm(x(1, a), x(5, b)) ==
           product({xt(2, -trace_form(adjoint(a), b)), x(3, cross(a, b)), xt(4, trace_form(a, adjoint(b)))});
  });
  run("[x2(t),x6(u)] = x4(tu)", [&] {
    const Rational t = s.rational(), u = s.rational();
    return hex_comm(xt(2, t), xt(6, u)) == xt(4, t * u);
  });
  run("[x1(a),x6(t)] = x2(-tN(a)) x3(ta#) x4(t^2N(a)) x5(-ta)", [&] {
    const AlbertElem a = s.albert(A);
    const Rational t = s.rational(), n = norm(a);
    return hex_comm(x(1, a), xt(6, t)) ==
           product({xt(2, -t * n), x(3, t * adjoint(a)), xt(4, t * t * n), x(5, -t * a)});
  });
  run("trivial commutators [Ui,Uj]", [&] {
    const auto gen = [&](int i) { return odd(i) ? x(i, s.albert(A)) : xt(i, s.rational()); };
    const int pairs[][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {4, 6}, {1, 4}, {2, 5}, {3, 6}};
    for (const auto& p : pairs)
      if (!hex_comm(gen(p[0]), gen(p[1])).is_identity()) return false;
    return true;
  });
  run("root groups additive", [&] {
    const AlbertElem a = s.albert(A), b = s.albert(A);
    const Rational t = s.rational(), u = s.rational();
    return hex_mul(x(1, a), x(1, b)) == x(1, a + b) && hex_mul(x(5, a), x(5, b)) == x(5, a + b) &&
           hex_mul(xt(6, t), xt(6, u)) == xt(6, t + u);
  });
  run("T bilinear and symmetric", [&] {
    const AlbertElem a = s.albert(A), b = s.albert(A), c = s.albert(A);
    const Rational r = s.rational();
    return trace_form(a, b) == trace_form(b, a) && trace_form(r * a + c, b) == r * trace_form(a, b) + trace_form(c, b);
  });
  run("cross symmetric, a x a = 2a#", [&] {
    const AlbertElem a = s.albert(A), b = s.albert(A);
    return cross(a, b) == cross(b, a) && cross(a, a) == Rational(2) * adjoint(a) &&
           cross(a, b) == adjoint(a + b) - adjoint(a) - adjoint(b);
  });
  run("a## = N(a)a, T(a#,a) = 3N(a)", [&] {
    const AlbertElem a = s.albert(A);
    return adjoint(adjoint(a)) == norm(a) * a && trace_form(adjoint(a), a) == 3 * norm(a);
  });
  return out;
}

int hex_associativity(const AlbertPtr& A, std::uint64_t seed, int count) {
  Sampler s(seed);
  int ok = 0;
  for (int k = 0; k < count; ++k) {
    const HexElem g = random_hex(A, s), h = random_hex(A, s), w = random_hex(A, s);
    ok += hex_mul(hex_mul(g, h), w) == hex_mul(g, hex_mul(h, w)) ? 1 : 0;
  }
  return ok;
}

}  // namespace albert
