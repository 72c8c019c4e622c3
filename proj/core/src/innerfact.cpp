#include "albert/innerfact.hpp"

#include "albert/error.hpp"
#include "albert/random.hpp"

namespace albert {

namespace {

Rational q_value(const FieldElem& v, const char* what) {
  if (!v.is_rational()) fail(Errc::NotInCenter, std::string(what) + " is not in Q");
  return v.coeffs()[0];
}

AlbertElem slot_elem(const AlbertPtr& A, std::size_t slot, const AssocElem& x) {
  const AssocElem z = AssocElem::zero(A->assoc());
  return AlbertElem::first(A, slot == 0 ? x : z, slot == 1 ? x : z, slot == 2 ? x : z);
}

void require_first(const AlbertPtr& A, const char* what) {
  if (A->construction() != Construction::First)
    fail(Errc::WrongConstruction, std::string(what) + " needs a first construction");
}

}  // namespace

AssocElem CommutatorWitness::product() const {
  AssocElem out = AssocElem::one(target.parent());
  for (const auto& [i, j] : pairs) out = out * commutator(i, j);
  return out;
}

InstrWord jp_word(const AlbertPtr& A, const AssocElem& i, const AssocElem& j) {
  require_first(A, "jp_word");
  if (!is_invertible(i) || !is_invertible(j)) fail(Errc::NotInvertible, "jp_word needs invertible i, j");
  const AssocElem one = AssocElem::one(A->assoc());
  return {A,
          {Generator::u(slot_elem(A, 2, one), "J_p word: U_(0,0,1)"),
           Generator::u(slot_elem(A, 0, inverse(i * j)), "J_p word: U_((ij)^-1,0,0)"),
           Generator::u(slot_elem(A, 0, i), "J_p word: U_(i,0,0)"),
           Generator::u(slot_elem(A, 0, j), "J_p word: U_(j,0,0)"),
           Generator::u(slot_elem(A, 1, one), "J_p word: U_(0,1,0)")}};
}

InstrWord jp_word(const AlbertPtr& A, const CommutatorWitness& w) {
  InstrWord out{A, {}};
  for (auto it = w.pairs.rbegin(); it != w.pairs.rend(); ++it) out = concat(out, jp_word(A, it->first, it->second));
  return out;
}

CommutatorWitness commutator_decomp_cyclic(const AssocElem& p) {
  const AssocPtr& D = p.parent();
  if (D->backend() != AssocBackend::Cyclic) fail(Errc::WrongBackend, "Hilbert 90 witnesses need a cyclic algebra");
  if (!p.in_subfield()) fail(Errc::WrongBackend, "element does not lie in the distinguished subfield L");
  const FieldElem q = hilbert90(p.entry(0), D->sigma());
  // z q z^{-1} = sigma(q), so q^{-1} z q z^{-1} = q^{-1} sigma(q) = p.
  CommutatorWitness w{p, {{AssocElem::z(D), AssocElem::from_subfield(D, q.inverse())}}};
  if (!w.verify()) fail(Errc::InvariantViolation, "Hilbert 90 commutator witness failed");
  return w;
}

poly::Poly reduced_char_poly(const AssocElem& a) {
  const Rational t = q_value(reduced_trace(a), "reduced trace");
  const Rational s = q_value(reduced_spur(a), "reduced spur");
  const Rational n = q_value(reduced_norm(a), "reduced norm");
  return {-n, s, -t, 1};
}

bool generates_cyclic_subfield(const AssocElem& a) {
  const poly::Poly f = reduced_char_poly(a);
  if (!poly::is_irreducible(f)) fail(Errc::NotCubicSubfield, "reduced characteristic polynomial is reducible");
  return is_rational_square(poly::cubic_discriminant(f));
}

bool verify_wedderburn(const WedderburnData& w) {
  const AssocPtr& D = w.a0.parent();
  if (w.c.is_zero() || !is_invertible(w.c)) return false;
  if (w.c != w.a0 * w.a1 - w.a1 * w.a0) return false;
  if (w.c != w.a1 * w.a2 - w.a2 * w.a1 || w.c != w.a2 * w.a0 - w.a0 * w.a2) return false;
  const AssocElem ci = inverse(w.c);
  if (w.c * w.a0 * ci != w.a1 || w.c * w.a1 * ci != w.a2 || w.c * w.a2 * ci != w.a0) return false;
  if (w.gamma == 0 || w.c * w.c * w.c != AssocElem::scalar(D, w.gamma)) return false;
  // (X - a2)(X - a1)(X - a0) = X^3 - (a0+a1+a2) X^2 + (a2a1 + a2a0 + a1a0) X - a2a1a0
  const poly::Poly f = reduced_char_poly(w.a0);
  const auto sc = [&](const Rational& r) { return AssocElem::scalar(D, r); };
  return w.a0 + w.a1 + w.a2 == sc(-f[2]) && w.a2 * w.a1 + w.a2 * w.a0 + w.a1 * w.a0 == sc(f[1]) &&
         w.a2 * w.a1 * w.a0 == sc(-f[0]);
}

WedderburnData wedderburn_factor(const AssocElem& a, std::uint64_t seed, int retries) {
  const AssocPtr& D = a.parent();
  if (D->center()->degree() != 1) fail(Errc::WrongBackend, "Wedderburn factorization needs a central algebra over Q");
  if (generates_cyclic_subfield(a)) fail(Errc::CyclicElement, "Q(a) is a cyclic cubic field");
  const poly::Poly f = reduced_char_poly(a);
  // Right division f(X) = q(X)(X - a) with q(X) = X^2 + q1 X + q0.
  const AssocElem q1 = a - AssocElem::scalar(D, -f[2]);
  const AssocElem q0 = AssocElem::scalar(D, f[1]) + q1 * a;
  Sampler rng(seed);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    const AssocElem d = rng.invertible_assoc(D);
    const AssocElem b = d * a * inverse(d);
    const AssocElem diff = b - a;
    if (!is_invertible(diff)) continue;
    // f(b) = q(lambda)(b - a) with lambda = (b - a) b (b - a)^{-1}; f(b) = 0.
    const AssocElem lambda = diff * b * inverse(diff);
    if (!(lambda * lambda + q1 * lambda + q0).is_zero()) continue;
    WedderburnData w;
    w.a0 = a;
    w.a1 = lambda;
    w.a2 = -q1 - lambda;
    w.c = w.a0 * w.a1 - w.a1 * w.a0;
    if (!is_invertible(w.c)) continue;
    const AssocElem c3 = w.c * w.c * w.c;
    if (!c3.is_central()) continue;
    w.gamma = q_value(reduced_trace(c3), "trace of c^3") / 3;
    w.seed = seed;
    w.attempts = attempt;
    if (verify_wedderburn(w)) return w;
  }
  fail(Errc::RetriesExhausted, "no verified Wedderburn factorization after " + std::to_string(retries) +
                                   " attempts (seed " + std::to_string(seed) + ")");
}

CommutatorWitness cube_commutators(const AssocElem& p, std::uint64_t seed, int retries) {
  const AssocPtr& D = p.parent();
  if (q_value(reduced_norm(p), "reduced norm") != 1) fail(Errc::NormNotOne, "cube_commutators needs N(p) = 1");
  const AssocElem p3 = p * p * p;
  if (p == AssocElem::one(D)) return {p3, {}};
  if (D->backend() == AssocBackend::Cyclic && p.in_subfield()) return commutator_decomp_cyclic(p3);
  if (generates_cyclic_subfield(p))
    fail(Errc::CyclicElement, "p generates a cyclic subfield other than the distinguished L");
  const WedderburnData w = wedderburn_factor(p, seed, retries);
  // c p0^{-1} c^{-1} = p1^{-1} and c p2 c^{-1} = p0, and p2 p1 p0 = 1, so
  // (p0 c p0^{-1} c^{-1})(p2^{-1} c p2 c^{-1}) = p0 p1^{-1} p2^{-1} p0 = p^3.
  CommutatorWitness out{p3, {{w.c, w.a0}, {w.c, inverse(w.a2)}}};
  if (!out.verify()) fail(Errc::InvariantViolation, "two-commutator witness for p^3 failed");
  return out;
}

IaFactorization ia_word(const AlbertPtr& A, const AssocElem& a, const std::optional<CommutatorWitness>& witness) {
  require_first(A, "ia_word");
  const AssocPtr& D = A->assoc();
  const Rational n = q_value(reduced_norm(a), "reduced norm");
  if (n == 0) fail(Errc::NotInvertible, "ia_word needs invertible a");
  const AssocElem one = AssocElem::one(D);
  const AssocElem s = n * power(a, -3);

  IaFactorization out{{A, {}}, true};
  auto& g = out.word.gens;
  g.push_back(Generator::u((1 / n) * AlbertElem::one(A), "I_a word: U_(n(a)^-1 1)"));
  g.push_back(Generator::u(slot_elem(A, 2, one), "I_a word: U_(0,0,1)"));
  std::optional<CommutatorWitness> w = witness;
  if (!w && s == one) w = CommutatorWitness{s, {}};
  if (!w && D->backend() == AssocBackend::Cyclic && s.in_subfield()) w = commutator_decomp_cyclic(s);
  if (w) {
    if (w->target != s) fail(Errc::InvariantViolation, "supplied witness does not decompose n(a) a^-3");
    if (!w->verify()) fail(Errc::InvariantViolation, "supplied commutator witness does not verify");
    for (auto& gen : jp_word(A, *w).gens) g.push_back(std::move(gen));
  } else {
    g.push_back(Generator::jp(s, "I_a word: J_(n(a) a^-3), no commutator decomposition"));
    out.expanded = false;
  }
  g.push_back(Generator::u(slot_elem(A, 1, a), "I_a word: U_(0,a,0)"));
  g.push_back(Generator::u(slot_elem(A, 2, a), "I_a word: U_(0,0,a)"));
  g.push_back(Generator::u(slot_elem(A, 0, a), "I_a word: U_(a,0,0)"));
  g.push_back(Generator::u(slot_elem(A, 1, one), "I_a word: U_(0,1,0)"));
  return out;
}

InstrWord chi_map(const AlbertPtr& A, const AssocElem& c) {
  require_first(A, "chi_map");
  const Rational n = q_value(reduced_norm(c), "reduced norm");
  if (n == 0) fail(Errc::NotInvertible, "chi_map needs invertible c");
  const AssocElem one = AssocElem::one(A->assoc());
  return {A,
          {Generator::scalar(1 / n, "chi: R_(N(c)^-1)"), Generator::u(slot_elem(A, 2, one), "chi: U_(0,0,1)"),
           Generator::u(slot_elem(A, 1, adjoint(c)), "chi: U_(0,c#,0)")}};
}

SimilarityReduction reduce_similarity(const LinOp& f) {
  const AlbertPtr& A = f.parent;
  require_first(A, "reduce_similarity");
  const AssocPtr& D = A->assoc();
  for (std::size_t j = 0; j < 9; ++j)
    for (std::size_t i = 9; i < AlbertAlgebra::dim; ++i)
      if (f.matrix(i, j) != 0) fail(Errc::NotStabilizing, "f does not map slot 0 into itself");

  const AssocElem c = f(AlbertElem::one(A)).slot(0);
  if (!is_invertible(c)) fail(Errc::RecoveryFailed, "f(1,0,0) is not invertible");
  SimilarityReduction out{chi_map(A, c), {}, {}};
  const LinOp phi = invert(eval_word(out.chi).op) * f;
  if (phi(AlbertElem::one(A)) != AlbertElem::one(A)) fail(Errc::RecoveryFailed, "chi^-1 f does not fix 1");

  // a x = phi0(x) a for every basis element x of slot 0: 81 equations in the
  // 9 coordinates of a.
  std::vector<AssocElem> basis, image;
  for (std::size_t j = 0; j < 9; ++j) {
    Vec e(9);
    e[j] = 1;
    basis.push_back(AssocElem::from_coords(D, e));
    image.push_back(phi(AlbertElem::unit(A, j)).slot(0));
  }
  Matrix sys(81, 9);
  for (std::size_t k = 0; k < 9; ++k) {
    for (std::size_t x = 0; x < 9; ++x) {
      const Vec col = (basis[k] * basis[x] - image[x] * basis[k]).coords();
      for (std::size_t r = 0; r < 9; ++r) sys(9 * x + r, k) = col[r];
    }
  }
  const auto ker = kernel(sys);
  if (ker.size() != 1) fail(Errc::RecoveryFailed, "conjugating element is not determined up to a scalar");
  out.a = AssocElem::from_coords(D, ker.front());
  if (!is_invertible(out.a)) fail(Errc::RecoveryFailed, "recovered a is not invertible");
  const AlbertElem y = phi(AlbertElem::first(A, AssocElem::zero(D), AssocElem::one(D), AssocElem::zero(D)));
  if (!y.slot(0).is_zero() || !y.slot(2).is_zero()) fail(Errc::RecoveryFailed, "phi does not stabilize slot 1");
  const AssocElem w = y.slot(1);
  if (!is_invertible(w)) fail(Errc::RecoveryFailed, "phi(0,1,0) is not invertible");
  out.b = inverse(w) * out.a;
  if (q_value(reduced_norm(out.a), "N(a)") != q_value(reduced_norm(out.b), "N(b)"))
    fail(Errc::RecoveryFailed, "recovered a, b have different norms");
  if (eval_word(out.chi).op * make_psi(A, out.a, out.b) != f) fail(Errc::RecoveryFailed, "f != chi psi_{a,b}");
  return out;
}

IsometryReduction reduce_to_isometry(const LinOp& f) {
  const AlbertPtr& A = f.parent;
  const AlbertElem a = f(AlbertElem::one(A));
  const Rational alpha = norm(a);
  if (alpha == 0) fail(Errc::SingularImageOfOne, "N(f(1)) = 0");
  IsometryReduction out{{A, {Generator::scalar(1 / alpha, "R_(N(f(1))^-1)"), Generator::u(a, "U_(f(1))")}}, {}};
  out.g = eval_word(out.chi).op * f;
  if (norm(out.g(AlbertElem::one(A))) != 1) fail(Errc::InvariantViolation, "N(g(1)) != 1");
  return out;
}

InstrWord phi_p_word(const AlbertPtr& A, const std::vector<AssocElem>& s) {
  if (A->construction() != Construction::Second) fail(Errc::WrongConstruction, "phi_p_word needs a second construction");
  const AssocPtr& B = A->assoc();
  AssocElem p = AssocElem::one(B);
  InstrWord out{A, {}};
  for (const auto& si : s) {
    if (!unitary_data(si).is_symmetric) fail(Errc::NotSymmetric, "phi_p_word factor is not symmetric");
    p = p * si;
    out.gens.push_back(Generator::u(AlbertElem::second(A, si, AssocElem::zero(B)), "phi_p word: U_(s,0)"));
  }
  if (!is_special_unitary(p)) fail(Errc::NotSpecialUnitary, "product of the factors is not special unitary");
  return out;
}

AssocElem hermitian_reflection(const AssocPtr& B, const std::vector<FieldElem>& v) {
  return hermitian_reflection(B, v, AssocElem(B, B->g()));
}

AssocElem hermitian_reflection(const AssocPtr& B, const std::vector<FieldElem>& v, const AssocElem& form) {
  if (!B->has_involution()) fail(Errc::WrongBackend, "reflections need a unitary involution");
  if (v.size() != 3) fail(Errc::DimensionMismatch, "reflection vector needs 3 entries");
  // P = v (v^* h v)^{-1} v^* h
  std::vector<FieldElem> vvh(9), hv(3, FieldElem::zero(B->field()));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) hv[r] += form.at(r, c) * v[c];
  FieldElem vhv = FieldElem::zero(B->field());
  for (std::size_t r = 0; r < 3; ++r) vhv += v[r].apply(B->bar()) * hv[r];
  if (vhv.is_zero()) fail(Errc::NotInvertible, "isotropic reflection vector");
  // row vector v^* h = (h^* v)^* = (h v)^* since h is hermitian
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) vvh[3 * r + c] = v[r] * hv[c].apply(B->bar()) / vhv;
  return AssocElem::one(B) - Rational(2) * AssocElem(B, vvh);
}

}  // namespace albert
