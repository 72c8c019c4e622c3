#include "albert/strmaps.hpp"

#include "albert/error.hpp"

#include <algorithm>

namespace albert {

namespace {

constexpr std::size_t n27 = AlbertAlgebra::dim;

LinOp from_map(const AlbertPtr& A, const auto& map) {
  Matrix m(n27, n27);
  for (std::size_t j = 0; j < n27; ++j) {
    const Vec col = map(AlbertElem::unit(A, j)).coords();
    for (std::size_t i = 0; i < n27; ++i) m(i, j) = col[i];
  }
  return {A, std::move(m)};
}

void require_construction(const AlbertPtr& A, Construction c, const char* what) {
  if (A->construction() != c) fail(Errc::WrongConstruction, std::string(what) + ": wrong construction for " + A->label());
}

void verify_automorphism(const LinOp& f, const char* what) {
  if (!is_automorphism(f)) fail(Errc::InvariantViolation, std::string(what) + " is not an automorphism");
}

Rational q_norm(const AssocElem& a) {
  const FieldElem n = reduced_norm(a);
  if (!n.is_rational()) return Rational(0);
  return n.coeffs()[0];
}

}  // namespace

LinOp operator*(const LinOp& f, const LinOp& g) {
  if (f.parent != g.parent) fail(Errc::MixedParents, "composition of maps on different algebras");
  return {f.parent, f.matrix * g.matrix};
}

LinOp identity_op(const AlbertPtr& A) { return {A, Matrix::identity(n27)}; }

LinOp u_linop(const AlbertElem& x) { return {x.parent(), u_op(x)}; }

LinOp invert(const LinOp& f) {
  auto inv = inverse(f.matrix);
  if (!inv) fail(Errc::NotInvertible, "linear map is singular");
  return {f.parent, std::move(*inv)};
}

Generator Generator::u(AlbertElem x, std::string note) {
  Generator g;
  g.kind = Kind::U;
  g.elem = std::move(x);
  g.note = std::move(note);
  return g;
}

Generator Generator::scalar(Rational t, std::string note) {
  Generator g;
  g.kind = Kind::Scalar;
  g.t = std::move(t);
  g.note = std::move(note);
  return g;
}

Generator Generator::jp(AssocElem p, std::string note) {
  Generator g;
  g.kind = Kind::Prim;
  g.name = "Jp";
  g.p = std::move(p);
  g.note = std::move(note);
  return g;
}

bool InstrWord::is_pure() const {
  for (const auto& g : gens)
    if (g.kind == Generator::Kind::Prim) return false;
  return true;
}

InstrWord concat(const InstrWord& a, const InstrWord& b) {
  if (a.parent != b.parent) fail(Errc::MixedParents, "concatenating words over different algebras");
  InstrWord out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

Evaluated eval_word(const InstrWord& w) {
  Evaluated out{identity_op(w.parent), Rational(1)};
  for (const auto& g : w.gens) {
    switch (g.kind) {
      case Generator::Kind::U: {
        const Rational n = norm(g.elem);
        if (n == 0) fail(Errc::NotInvertibleGenerator, "U generator " + to_string(g.elem) + " has norm 0");
        out.op = out.op * u_linop(g.elem);
        out.similitude *= n * n;
        break;
      }
      case Generator::Kind::Scalar:
        if (g.t == 0) fail(Errc::NotInvertibleGenerator, "scalar generator 0");
        out.op.matrix = g.t * out.op.matrix;
        out.similitude *= g.t * g.t * g.t;
        break;
      case Generator::Kind::Prim:
        if (g.name != "Jp") fail(Errc::NotInvertibleGenerator, "unknown primitive generator " + g.name);
        out.op = out.op * make_jp(w.parent, g.p);
        break;
    }
  }
  return out;
}

bool is_automorphism(const LinOp& f) {
  const AlbertPtr& A = f.parent;
  std::vector<AlbertElem> img;
  for (std::size_t j = 0; j < n27; ++j) img.emplace_back(A, f.matrix.column(j));
  for (std::size_t i = 0; i < n27; ++i)
    for (std::size_t j = i; j < n27; ++j) {
      const AlbertElem p = jmul(AlbertElem::unit(A, i), AlbertElem::unit(A, j));
      if (f(p) != jmul(img[i], img[j])) return false;
    }
  return true;
}

Vec cubic_coefficients(const LinOp& f) {
  // N(sum x_i v_i) with v_i = f(e_i) expands through
  //   N(x + y) = N(x) + T(x#, y) + T(x, y#) + N(y)
  // into c_iii = N(v_i), c_iij = T(v_i#, v_j), c_ijk = T(v_i x v_j, v_k).
  // T is evaluated through its Gram matrix on the coordinate basis.
  const AlbertPtr& A = f.parent;
  Matrix gram(n27, n27);
  for (std::size_t i = 0; i < n27; ++i)
    for (std::size_t j = i; j < n27; ++j)
      gram(i, j) = gram(j, i) = trace_form(AlbertElem::unit(A, i), AlbertElem::unit(A, j));
  std::vector<AlbertElem> col;
  std::vector<Vec> gcol;  // G v_k
  for (std::size_t j = 0; j < n27; ++j) {
    col.emplace_back(A, f.matrix.column(j));
    gcol.push_back(gram.apply(col.back().coords()));
  }
  const auto dot = [](const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
  };
  std::vector<Vec> adj;
  for (const auto& v : col) adj.push_back(adjoint(v).coords());
  Vec out;
  for (std::size_t i = 0; i < n27; ++i) {
    for (std::size_t j = i; j < n27; ++j) {
      const Vec cij = i == j ? Vec{} : cross(col[i], col[j]).coords();
      for (std::size_t k = j; k < n27; ++k) {
        if (i == j && j == k)
          out.push_back(norm(col[i]));
        else if (i == j)
          out.push_back(dot(adj[i], gcol[k]));
        else if (j == k)
          out.push_back(dot(adj[j], gcol[i]));
        else
          out.push_back(dot(cij, gcol[k]));
      }
    }
  }
  return out;
}

Classification classify(const LinOp& f) {
  const AlbertPtr& A = f.parent;
  if (!inverse(f.matrix)) fail(Errc::NotInvertible, "classify needs an invertible map");
  Classification c;
  c.similarity = norm(f(AlbertElem::one(A)));
  if (c.similarity == 0) fail(Errc::NotSimilarity, "N(f(1)) = 0");
  const Vec base = cubic_coefficients(identity_op(A));
  if (cubic_coefficients(f) != c.similarity * base) fail(Errc::NotSimilarity, "N o f is not a multiple of N");
  c.isometry = c.similarity == 1;
  c.automorphism = c.isometry && is_automorphism(f);
  return c;
}

LinOp make_psi(const AlbertPtr& A, const AssocElem& a, const AssocElem& b) {
  require_construction(A, Construction::First, "psi_{a,b}");
  if (a.parent() != A->assoc() || b.parent() != A->assoc()) fail(Errc::MixedParents, "psi parameters not in D");
  const Rational na = q_norm(a), nb = q_norm(b);
  if (na == 0 || nb == 0) fail(Errc::NotInvertible, "psi parameters must be invertible");
  if (na != nb) fail(Errc::NormMismatch, "psi needs N(a) = N(b)");
  const AssocElem ai = inverse(a), bi = inverse(b);
  LinOp f = from_map(A, [&](const AlbertElem& x) {
    return AlbertElem::first(A, a * x.slot(0) * ai, a * x.slot(1) * bi, b * x.slot(2) * ai);
  });
  verify_automorphism(f, "psi_{a,b}");
  return f;
}

LinOp make_ia(const AlbertPtr& A, const AssocElem& a) { return make_psi(A, a, a); }

LinOp make_jp(const AlbertPtr& A, const AssocElem& p) {
  require_construction(A, Construction::First, "J_p");
  if (p.parent() != A->assoc()) fail(Errc::MixedParents, "J_p parameter not in D");
  if (q_norm(p) != 1) fail(Errc::NormNotOne, "J_p needs N(p) = 1");
  const AssocElem pi = inverse(p);
  LinOp f = from_map(A, [&](const AlbertElem& x) { return AlbertElem::first(A, x.slot(0), x.slot(1) * p, pi * x.slot(2)); });
  verify_automorphism(f, "J_p");
  return f;
}

LinOp make_rt(const AlbertPtr& A, const Rational& t) {
  if (t == 0) fail(Errc::NotInvertible, "R_0 is not invertible");
  return {A, t * Matrix::identity(n27)};
}

bool is_special_unitary(const AssocElem& p) {
  return p * involution(p) == AssocElem::one(p.parent()) && reduced_norm(p).is_one();
}

bool is_special_unitary_twisted(const AlbertPtr& A, const AssocElem& q) {
  return q * A->u() * involution(q) * A->u_inv() == AssocElem::one(q.parent()) && reduced_norm(q).is_one();
}

LinOp make_phi(const AlbertPtr& A, const AssocElem& p, const AssocElem& q) {
  require_construction(A, Construction::Second, "phi_{p,q}");
  if (p.parent() != A->assoc() || q.parent() != A->assoc()) fail(Errc::MixedParents, "phi parameters not in B");
  if (!is_special_unitary(p)) fail(Errc::NotSpecialUnitary, "p is not in SU(B, tau)");
  if (!is_special_unitary_twisted(A, q)) fail(Errc::NotSpecialUnitary, "q is not in SU(B, Int(u) tau)");
  const AssocElem tp = involution(p);
  LinOp f = from_map(A, [&](const AlbertElem& x) { return AlbertElem::second(A, p * x.herm() * tp, p * x.bpart() * q); });
  verify_automorphism(f, "phi_{p,q}");
  return f;
}

InstrWord conjugate_word(const InstrWord& w, const LinOp& theta) {
  if (theta.parent != w.parent) fail(Errc::MixedParents, "conjugating by a map on another algebra");
  if (!is_automorphism(theta)) fail(Errc::NotIsomorphism, "conjugating map is not an automorphism");
  const LinOp inv = invert(theta);
  InstrWord out{w.parent, {}};
  for (const auto& g : w.gens) {
    if (g.kind == Generator::Kind::Prim)
      fail(Errc::WrongConstruction, "primitive generators cannot be conjugated; expand them first");
    Generator h = g;
    if (g.kind == Generator::Kind::U) h.elem = inv(g.elem);
    out.gens.push_back(std::move(h));
  }
  return out;
}

}  // namespace albert
