#include "commands.hpp"

#include "albert/error.hpp"
#include "albert/innerfact.hpp"
#include "expr.hpp"
#include "samples.hpp"

#include <functional>
#include <optional>

namespace albert::cli {

namespace {

struct Checks {
  json list = json::array();
  bool ok = true;

  void add(const std::string& name, const std::string& algebra, int passed, int total) {
    list.push_back({{"name", name}, {"algebra", algebra}, {"passed", passed}, {"total", total}});
    if (passed != total) ok = false;
  }

  // Runs `test` count times and records the tally.
  void run(const std::string& name, const std::string& algebra, int count, const std::function<bool()>& test) {
    int passed = 0;
    for (int k = 0; k < count; ++k)
      if (test()) ++passed;
    add(name, algebra, passed, count);
  }
};

int count_or(const Options& o, int fallback) { return o.count > 0 ? o.count : fallback; }

std::vector<AlbertPtr> targets(const Workspace& ws, const Options& o) {
  if (!o.algebra.empty()) return {ws.algebra(o.algebra)};
  return ws.algebras();
}

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::Reduced: return "reduced";
    case Construction::First: return "first";
    case Construction::Second: return "second";
  }
  return {};
}

bool has_arg(const Options& o, const std::string& k) { return o.args.count(k) != 0; }

json arg_json(const Options& o, const std::string& k) { return parse_json(o.args.at(k), "--" + k); }

AssocElem assoc_arg(const Options& o, const std::string& k, const AssocPtr& D, const std::function<AssocElem()>& fallback) {
  if (!has_arg(o, k)) return fallback();
  return assoc_from_json(D, arg_json(o, k));
}

void require_first(const AlbertPtr& A, const std::string& what) {
  if (A->construction() != Construction::First)
    fail(Errc::WrongConstruction, what + " needs a first construction; " + A->label() + " is " +
                                      construction_name(A->construction()));
}

json word_report(const std::string& kind, const AlbertPtr& A, const InstrWord& w, bool verified) {
  const Evaluated e = eval_word(w);
  return {{"kind", kind},
          {"algebra", A->label()},
          {"word", to_json(w)},
          {"length", w.gens.size()},
          {"expanded", w.is_pure()},
          {"verified", verified},
          {"similitude", to_string(e.similitude)}};
}

Result finish(json report, bool passed) {
  report["passed"] = passed;
  return {std::move(report), passed ? 0 : 1};
}

// verify suites

void suite_albert_identities(const Workspace& ws, const Options& o, Checks& c) {
  const int n = count_or(o, 20);
  Sampler s(o.seed);
  for (const AlbertPtr& A : targets(ws, o)) {
    const std::string& l = A->label();
    const AlbertElem one = AlbertElem::one(A);
    c.run("commutativity", l, n, [&] {
      const AlbertElem x = s.albert(A), y = s.albert(A);
      return jmul(x, y) == jmul(y, x);
    });
    c.run("jordan-identity", l, n, [&] {
      const AlbertElem x = s.albert(A), y = s.albert(A), x2 = jmul(x, x);
      return jmul(jmul(x2, y), x) == jmul(x2, jmul(y, x));
    });
    c.run("adjoint-identity", l, n, [&] {
      const AlbertElem x = s.albert(A);
      const Rational nx = norm(x);
      return jmul(x, adjoint(x)) == nx * one && adjoint(adjoint(x)) == nx * x;
    });
    c.run("newton-norm", l, n, [&] {
      const AlbertElem x = s.albert(A);
      return norm(x) == newton_norm(x);
    });
    c.run("similitude", l, n, [&] {
      const AlbertElem x = s.albert(A), y = s.albert(A);
      const Rational nx = norm(x);
      return norm(u_apply(x, y)) == nx * nx * norm(y);
    });
    c.run("fundamental-identity", l, n, [&] {
      const AlbertElem x = s.albert(A), y = s.albert(A), z = s.albert(A);
      return u_apply(u_apply(x, y), z) == u_apply(x, u_apply(y, u_apply(x, z)));
    });
  }
}

void suite_uop_closed_forms(const Workspace& ws, const Options& o, Checks& c) {
  const int n = count_or(o, 50);
  Sampler s(o.seed);
  for (const AlbertPtr& A : targets(ws, o)) {
    const std::string& l = A->label();
    switch (A->construction()) {
      case Construction::First: {
        const AssocPtr& D = A->assoc();
        const AssocElem z = AssocElem::zero(D);
        const Rational& mu = A->mu();
        c.run("U(a,0,0)", l, n, [&] {
          const AssocElem a = s.assoc(D), as = adjoint(a);
          const AlbertElem y = s.albert(A);
          return u_apply(AlbertElem::first(A, a, z, z), y) ==
                 AlbertElem::first(A, a * y.slot(0) * a, as * y.slot(1), y.slot(2) * as);
        });
        c.run("U(0,b,0)", l, n, [&] {
          const AssocElem b = s.assoc(D), bs = adjoint(b);
          const AlbertElem y = s.albert(A);
          return u_apply(AlbertElem::first(A, z, b, z), y) ==
                 AlbertElem::first(A, mu * (y.slot(1) * bs), b * y.slot(2) * b, mu * (bs * y.slot(0)));
        });
        c.run("U(0,0,c)", l, n, [&] {
          const AssocElem cc = s.assoc(D), cs = adjoint(cc);
          const AlbertElem y = s.albert(A);
          return u_apply(AlbertElem::first(A, z, z, cc), y) ==
                 AlbertElem::first(A, (1 / mu) * (cs * y.slot(2)), (1 / mu) * (y.slot(0) * cs), cc * y.slot(1) * cc);
        });
        break;
      }
      case Construction::Second: {
        const AssocPtr& B = A->assoc();
        c.run("U(a,0)", l, n, [&] {
          const AssocElem a = s.symmetric(B);
          const AlbertElem y = s.albert(A);
          return u_apply(AlbertElem::second(A, a, AssocElem::zero(B)), y) ==
                 AlbertElem::second(A, a * y.herm() * a, adjoint(a) * y.bpart());
        });
        break;
      }
      case Construction::Reduced:
        c.run("U_x = 2 L_x^2 - L_{x^2}", l, n, [&] {
          const AlbertElem x = s.albert(A), y = s.albert(A);
          return u_apply(x, y) == Rational(2) * jmul(x, jmul(x, y)) - jmul(jmul(x, x), y);
        });
        break;
    }
  }
}

void suite_factorization(const Workspace& ws, const Options& o, Checks& c) {
  const int n = count_or(o, 3);
  Sampler s(o.seed);
  for (const AlbertPtr& A : targets(ws, o)) {
    const std::string& l = A->label();
    if (A->construction() == Construction::First) {
      const AssocPtr& D = A->assoc();
      c.run("jp-word", l, n, [&] {
        const AssocElem i = s.invertible_assoc(D), j = s.invertible_assoc(D);
        return eval_word(jp_word(A, i, j)).op == make_jp(A, commutator(i, j));
      });
      c.run("ia-word", l, n, [&] {
        const AssocElem a = s.invertible_assoc(D);
        return eval_word(ia_word(A, a).word).op == make_ia(A, a);
      });
      if (D->backend() == AssocBackend::Cyclic) {
        c.run("ia-word-expanded", l, n, [&] {
          const AssocElem a = AssocElem::from_subfield(D, s.nonzero_field_elem(D->field()));
          const IaFactorization f = ia_word(A, a);
          return f.expanded && eval_word(f.word).op == make_ia(A, a);
        });
      }
      c.run("similarity-reduction", l, n, [&] {
        const AssocElem cc = s.invertible_assoc(D), a = s.invertible_assoc(D);
        const LinOp f = eval_word(chi_map(A, cc)).op * make_psi(A, a, sample_norm_one(s, D) * a);
        const SimilarityReduction r = reduce_similarity(f);
        return eval_word(r.chi).op * make_psi(A, r.a, r.b) == f;
      });
      if (D->backend() == AssocBackend::Matrix3 && D->field()->degree() == 1) {
        c.run("wedderburn", l, n, [&] {
          const AssocElem p = sample_noncyclic_norm_one(s, D);
          const WedderburnData w = wedderburn_factor(p, s.engine()());
          const CommutatorWitness cube = cube_commutators(p, s.engine()());
          return verify_wedderburn(w) && cube.pairs.size() == 2 && cube.verify() && cube.target == p * p * p;
        });
      }
    }
    if (A->construction() == Construction::Second) {
      c.run("phi-word", l, n, [&] {
        const auto f = sample_symmetric_factors(s, A, 1);
        return eval_word(phi_p_word(A, f)).op == make_phi(A, f[0] * f[1], AssocElem::one(A->assoc()));
      });
    }
    c.run("isometry-reduction", l, n, [&] {
      const Evaluated f = eval_word(sample_similarity_word(s, A, 2));
      const IsometryReduction r = reduce_to_isometry(f.op);
      return norm(r.g(AlbertElem::one(A))) == 1 && eval_word(r.chi).op * f.op == r.g;
    });
  }
}

void suite_hexagon(const Workspace& ws, const Options& o, Checks& c) {
  const int n = count_or(o, 50);
  const AlbertPtr A = ws.algebra(o.algebra);
  for (const RelationResult& r : relation_audit(A, o.seed, n)) c.add(r.name, A->label(), r.passed, r.total);
  c.add("associativity", A->label(), hex_associativity(A, o.seed + 1, n), n);
}

void suite_fixedpoint(const Workspace& ws, const Options& o, Checks& c) {
  const int n = count_or(o, 6);
  Sampler s(o.seed);
  for (const AlbertPtr& A : targets(ws, o)) {
    if (A->construction() == Construction::Reduced) continue;
    int k = 0;
    c.run("fixed-vector-in-A0", A->label(), n, [&] {
      LinOp f;
      if (A->construction() == Construction::Second) {
        const auto fs = sample_symmetric_factors(s, A, 1);
        f = make_phi(A, fs[0] * fs[1], sample_twisted_unitary(s, A));
      } else {
        const AssocPtr& D = A->assoc();
        const AssocElem a = s.invertible_assoc(D);
        switch (k++ % 3) {
          case 0: f = make_psi(A, a, sample_norm_one(s, D) * a); break;
          case 1: f = make_ia(A, a); break;
          default: f = make_jp(A, sample_norm_one(s, D));
        }
      }
      return fixed_point_determinant(f) == 0 && fixed_subspace(f).closed;
    });
  }
}

void suite_composition(const Workspace& ws, const Options& o, Checks& c) {
  const int n = count_or(o, 100);
  Sampler s(o.seed);
  for (const CayleyPtr& C : ws.cayley_algebras()) {
    const std::string& l = C->label();
    c.run("flexible", l, n, [&] {
      const CayleyElem x = s.cayley(C), y = s.cayley(C);
      return (x * y) * x == x * (y * x);
    });
    c.run("moufang", l, n, [&] {
      const CayleyElem x = s.cayley(C), y = s.cayley(C), z = s.cayley(C);
      return (x * y) * (z * x) == x * ((y * z) * x);
    });
    c.run("norm-multiplicative", l, n, [&] {
      const CayleyElem x = s.cayley(C), y = s.cayley(C);
      return (x * y).norm() == x.norm() * y.norm();
    });
    // reflection() verifies tau^2 = 1 and multiplicativity itself
    const Matrix tau = reflection(standard_quaternions(C));
    c.add("quaternion-reflection", l, (tau * tau).is_identity() ? 1 : 0, 1);
  }
}

// N(x0, x1, x2) = N(x0) + mu N(x1) + mu^{-1} N(x2) - T(x0 x1 x2), so any a
// with Nrd(a) = mu gives the zero of the norm (-a, 1, 0). Searches a with
// coordinates in {-1, 0, 1}.
std::optional<AlbertElem> isotropy_witness(const AlbertPtr& A) {
  const AssocPtr& D = A->assoc();
  const std::size_t n = D->q_dim();
  Vec c(n, Rational(-1));
  const AssocElem one = AssocElem::one(D), zero = AssocElem::zero(D);
  for (;;) {
    const AssocElem a = AssocElem::from_coords(D, c);
    const FieldElem nrd = reduced_norm(a);
    if (nrd.is_rational() && nrd.to_rational() == A->mu()) {
      const AlbertElem x = AlbertElem::first(A, -a, one, zero);
      if (norm(x) == 0) return x;
    }
    std::size_t k = 0;
    while (k < n && c[k] == 1) c[k++] = -1;
    if (k == n) return std::nullopt;
    c[k] += 1;
  }
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvariantViolation:
    case Errc::RetriesExhausted:
    case Errc::RecoveryFailed:
    case Errc::ExhaustedCandidates:
      return 1;
    default:
      return 2;
  }
}

Result cmd_define(const Workspace& ws, const Options& o) {
  json fields = json::array(), cayley = json::array(), assoc = json::array(), algebras = json::array();
  for (const auto& l : ws.field_order) {
    const FieldPtr& F = ws.fields.at(l);
    fields.push_back({{"label", l}, {"degree", F->degree()}, {"galois", F->is_galois()},
                      {"automorphisms", F->automorphisms().size()}});
  }
  for (const auto& C : ws.cayley_algebras())
    cayley.push_back({{"label", C->label()}, {"dimension", 8}, {"params", to_json(Vec(C->params().begin(), C->params().end()))},
                      {"norm_definite", C->norm_is_definite()}});
  for (const auto& l : ws.assoc_order) {
    const AssocPtr& A = ws.assoc.at(l);
    assoc.push_back({{"label", l},
                     {"backend", A->backend() == AssocBackend::Cyclic ? "cyclic" : "matrix3"},
                     {"field", A->field()->label()},
                     {"q_dimension", A->q_dim()},
                     {"unitary_involution", A->has_involution()}});
  }
  Checks checks;
  Sampler s(o.seed);
  const int n = count_or(o, 3);
  for (const AlbertPtr& A : ws.algebras()) {
    json entry = {{"label", A->label()}, {"construction", construction_name(A->construction())}, {"dimension", AlbertAlgebra::dim}};
    checks.run("unit", A->label(), 1, [&] {
      const AlbertElem one = AlbertElem::one(A);
      return jmul(one, one) == one && norm(one) == 1 && trace(one) == 3;
    });
    checks.run("jordan-and-norm", A->label(), n, [&] {
      const AlbertElem x = s.albert(A), y = s.albert(A), x2 = jmul(x, x);
      return jmul(jmul(x2, y), x) == jmul(x2, jmul(y, x)) && norm(x) == newton_norm(x) &&
             jmul(x, adjoint(x)) == norm(x) * AlbertElem::one(A);
    });
    if (A->construction() == Construction::First) {
      const auto witness = isotropy_witness(A);
      json note = {{"isotropic", witness.has_value()}};
      if (witness) {
        note["witness"] = to_json(witness->coords());
        note["norm"] = to_json(norm(*witness));
        note["note"] = "N(-a, 1, 0) = mu - Nrd(a) = 0: not a division algebra";
      } else {
        note["note"] = "no a with small coordinates has Nrd(a) = mu";
      }
      entry["anisotropy"] = note;
    }
    algebras.push_back(entry);
  }
  json report = {{"command", "define"}, {"fields", fields},   {"cayley", cayley},
                 {"assoc", assoc},      {"albert", algebras}, {"default", ws.default_albert},
                 {"checks", checks.list}};
  return finish(report, checks.ok);
}

Result cmd_verify(const Workspace& ws, const Options& o) {
  static const std::map<std::string, std::function<void(const Workspace&, const Options&, Checks&)>> suites = {
      {"albert-identities", suite_albert_identities}, {"uop-closed-forms", suite_uop_closed_forms},
      {"factorization", suite_factorization},         {"hexagon", suite_hexagon},
      {"fixedpoint", suite_fixedpoint},               {"composition", suite_composition},
  };
  auto it = suites.find(o.suite);
  if (it == suites.end()) fail(Errc::UnknownSuite, "unknown suite '" + o.suite + "'");
  Checks c;
  it->second(ws, o, c);
  json report = {{"command", "verify"}, {"suite", o.suite}, {"seed", o.seed}, {"checks", c.list}};
  return finish(report, c.ok);
}

Result cmd_factor(const Workspace& ws, const Options& o) {
  const AlbertPtr A = ws.algebra(o.algebra);
  Sampler s(o.seed);
  json r;
  if (o.kind == "jp") {
    require_first(A, "factor jp");
    const AssocPtr& D = A->assoc();
    const AssocElem i = assoc_arg(o, "i", D, [&] { return s.invertible_assoc(D); });
    const AssocElem j = assoc_arg(o, "j", D, [&] { return s.invertible_assoc(D); });
    const AssocElem p = commutator(i, j);
    const InstrWord w = jp_word(A, i, j);
    r = word_report("jp", A, w, eval_word(w).op == make_jp(A, p));
    r["target"] = {{"map", "J_p, p = j i j^-1 i^-1"}, {"p", to_json(p.coords())}};
  } else if (o.kind == "ia") {
    require_first(A, "factor ia");
    const AssocPtr& D = A->assoc();
    const AssocElem a = assoc_arg(o, "a", D, [&] { return s.invertible_assoc(D); });
    const IaFactorization f = ia_word(A, a);
    r = word_report("ia", A, f.word, eval_word(f.word).op == make_ia(A, a));
    r["target"] = {{"map", "I_a"}, {"a", to_json(a.coords())}};
    if (!f.expanded) r["flag"] = std::string(to_string(Errc::NoDecomposition));
  } else if (o.kind == "psi") {
    require_first(A, "factor psi");
    const AssocPtr& D = A->assoc();
    const AssocElem a = assoc_arg(o, "a", D, [&] { return s.invertible_assoc(D); });
    InstrWord jw{A, {}};
    AssocElem b;
    if (has_arg(o, "b")) {
      b = assoc_from_json(D, arg_json(o, "b"));
      const AssocElem p = a * inverse(b);
      if (p != AssocElem::one(D)) {
        if (D->backend() == AssocBackend::Cyclic && p.in_subfield() && reduced_norm(p).is_one())
          jw = jp_word(A, commutator_decomp_cyclic(p));
        else
          jw.gens.push_back(Generator::jp(p, "J_{ab^-1}"));
      }
    } else {
      const AssocElem i = s.invertible_assoc(D), j = s.invertible_assoc(D);
      b = commutator(i, j) * a;
      jw = jp_word(A, j, i);  // a b^-1 = (j i j^-1 i^-1)^-1 = i j i^-1 j^-1
    }
    const InstrWord w = concat(jw, ia_word(A, a).word);
    r = word_report("psi", A, w, eval_word(w).op == make_psi(A, a, b));
    r["target"] = {{"map", "psi_{a,b} = J_{ab^-1} I_a"}, {"a", to_json(a.coords())}, {"b", to_json(b.coords())}};
    if (!w.is_pure()) r["flag"] = std::string(to_string(Errc::NoDecomposition));
  } else if (o.kind == "phi") {
    if (A->construction() != Construction::Second) fail(Errc::WrongConstruction, "factor phi needs a second construction");
    const AssocPtr& B = A->assoc();
    std::vector<AssocElem> f;
    if (has_arg(o, "s")) {
      const json j = arg_json(o, "s");
      if (!j.is_array()) fail(Errc::ParseError, "--s expects an array of symmetric coordinate arrays");
      for (const json& e : j) f.push_back(symmetric_from_coords(B, vec_from_json(e, 9, "symmetric factor")));
    } else {
      f = sample_symmetric_factors(s, A, 1);
    }
    AssocElem p = AssocElem::one(B);
    for (const auto& x : f) p = p * x;
    const InstrWord w = phi_p_word(A, f);
    r = word_report("phi", A, w, eval_word(w).op == make_phi(A, p, AssocElem::one(B)));
    r["target"] = {{"map", "phi_{p,1}, p = s1 ... sn"}, {"p", to_json(p.coords())}};
  } else if (o.kind == "chi") {
    require_first(A, "factor chi");
    const AssocPtr& D = A->assoc();
    const AssocElem c = assoc_arg(o, "c", D, [&] { return s.invertible_assoc(D); });
    const InstrWord w = chi_map(A, c);
    const AssocElem x = s.assoc(D), z = AssocElem::zero(D);
    const bool ok = eval_word(w).op(AlbertElem::first(A, x, z, z)) == AlbertElem::first(A, c * x, z, z);
    r = word_report("chi", A, w, ok);
    r["target"] = {{"map", "(x,0,0) -> (cx,0,0)"}, {"c", to_json(c.coords())}};
  } else if (o.kind == "reduce") {
    LinOp f;
    if (has_arg(o, "word")) {
      f = eval_word(word_from_json(A, arg_json(o, "word"))).op;
    } else if (A->construction() == Construction::First) {
      const AssocPtr& D = A->assoc();
      const AssocElem c = s.invertible_assoc(D), a = s.invertible_assoc(D);
      f = eval_word(chi_map(A, c)).op * make_psi(A, a, sample_norm_one(s, D) * a);
    } else {
      f = eval_word(sample_similarity_word(s, A, 2)).op;
    }
    bool done = false;
    if (A->construction() == Construction::First) {
      try {
        const SimilarityReduction red = reduce_similarity(f);
        r = word_report("reduce", A, red.chi, eval_word(red.chi).op * make_psi(A, red.a, red.b) == f);
        r["method"] = "f = chi psi_{a,b}";
        r["a"] = to_json(red.a.coords());
        r["b"] = to_json(red.b.coords());
        done = true;
      } catch (const Error& e) {
        if (e.code() != Errc::NotStabilizing) throw;
      }
    }
    if (!done) {
      const IsometryReduction red = reduce_to_isometry(f);
      const Rational n1 = norm(red.g(AlbertElem::one(A)));
      r = word_report("reduce", A, red.chi, n1 == 1 && eval_word(red.chi).op * f == red.g);
      r["method"] = "g = chi f with N(g(1)) = 1";
      r["norm_g_one"] = to_string(n1);
    }
  } else {
    fail(Errc::ParseError, "unknown factor kind '" + o.kind + "' (jp, ia, psi, phi, chi, reduce)");
  }
  json report = {{"command", "factor"}};
  report.update(r);
  return finish(report, r.at("verified").get<bool>());
}

Result cmd_fixpoint(const Workspace& ws, const Options& o) {
  const AlbertPtr A = ws.algebra(o.algebra);
  Sampler s(o.seed);
  std::string family = o.family;
  if (family.empty()) family = has_arg(o, "word") ? "word" : A->construction() == Construction::Second ? "phi" : "jp";
  LinOp f;
  if (family == "word") {
    if (!has_arg(o, "word")) fail(Errc::ParseError, "--family word needs --word");
    f = eval_word(word_from_json(A, arg_json(o, "word"))).op;
  } else if (family == "identity") {
    f = identity_op(A);
  } else if (family == "phi") {
    if (A->construction() != Construction::Second) fail(Errc::WrongConstruction, "phi needs a second construction");
    const AssocPtr& B = A->assoc();
    AssocElem p, q;
    if (has_arg(o, "p")) {
      p = assoc_from_json(B, arg_json(o, "p"));
    } else {
      const auto fs = sample_symmetric_factors(s, A, 1);
      p = fs[0] * fs[1];
    }
    q = assoc_arg(o, "q", B, [&] { return sample_twisted_unitary(s, A); });
    f = make_phi(A, p, q);
  } else {
    require_first(A, "fixpoint --family " + family);
    const AssocPtr& D = A->assoc();
    if (family == "jp") {
      f = make_jp(A, assoc_arg(o, "p", D, [&] { return sample_norm_one(s, D); }));
    } else if (family == "ia") {
      f = make_ia(A, assoc_arg(o, "a", D, [&] { return s.invertible_assoc(D); }));
    } else if (family == "psi") {
      const AssocElem a = assoc_arg(o, "a", D, [&] { return s.invertible_assoc(D); });
      f = make_psi(A, a, assoc_arg(o, "b", D, [&] { return sample_norm_one(s, D) * a; }));
    } else {
      fail(Errc::ParseError, "unknown family '" + family + "' (jp, ia, psi, phi, identity, word)");
    }
  }
  const Rational det = fixed_point_determinant(f);
  const Subspace fixed = fixed_subspace(f);
  json r = {{"command", "fixpoint"}, {"algebra", A->label()},   {"family", family},
            {"det_A0", to_string(det)}, {"fixed_vector_in_A0", det == 0}, {"fixed_subalgebra", to_json(fixed)}};
  return finish(r, det == 0 && fixed.closed);
}

Result cmd_hexagon(const Workspace& ws, const Options& o) {
  const AlbertPtr A = ws.algebra(o.algebra);
  if (has_arg(o, "g") || has_arg(o, "h")) {
    const HexElem g = has_arg(o, "g") ? hex_from_json(A, arg_json(o, "g")) : HexElem::identity(A);
    const HexElem h = has_arg(o, "h") ? hex_from_json(A, arg_json(o, "h")) : HexElem::identity(A);
    const HexElem gh = hex_mul(g, h);
    const bool ok = hex_mul(gh, hex_inv(gh)).is_identity();
    json r = {{"command", "hexagon"}, {"algebra", A->label()}, {"product", to_json(gh)},
              {"inverse_g", to_json(hex_inv(g))}, {"commutator", to_json(hex_comm(g, h))}};
    return finish(r, ok);
  }
  Checks c;
  Options opts = o;
  opts.algebra = A->label();
  suite_hexagon(ws, opts, c);
  json r = {{"command", "hexagon"}, {"algebra", A->label()}, {"seed", o.seed}, {"checks", c.list}};
  return finish(r, c.ok);
}

Result cmd_eval(const Workspace& ws, const Options& o) {
  Env env{ws.algebra(o.algebra), {}};
  for (const auto& l : o.lets) env.vars.insert(parse_binding(env.algebra, l));
  const Value v = evaluate(o.expr, env);
  json r = {{"command", "eval"}, {"algebra", env.algebra->label()}, {"expr", o.expr}};
  r.update(to_json(v));
  return finish(r, true);
}

}  // namespace albert::cli
