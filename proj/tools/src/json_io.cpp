#include "json_io.hpp"

#include "albert/error.hpp"

#include <fstream>
#include <sstream>

namespace albert::cli {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, what + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(Errc::ParseError, "expected a rational string, got " + j.dump());
}

json to_json(const Rational& r) { return to_string(r); }

Vec vec_from_json(const json& j, std::size_t size, const std::string& what) {
  if (!j.is_array()) fail(Errc::ParseError, what + ": expected an array, got " + j.dump());
  if (size != 0 && j.size() != size)
    fail(Errc::ParseError, what + ": expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  Vec out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

FieldElem field_elem_from_json(const FieldPtr& F, const json& j) {
  if (j.is_array()) {
    Vec c = vec_from_json(j, 0, "field element of " + F->label());
    if (c.size() > F->degree()) fail(Errc::ParseError, "field element of " + F->label() + " has too many coefficients");
    c.resize(F->degree());
    return {F, c};
  }
  return FieldElem::rational(F, rational_from_json(j));
}

json to_json(const FieldElem& a) { return to_json(a.coeffs()); }

AssocElem assoc_from_json(const AssocPtr& A, const json& j) {
  return AssocElem::from_coords(A, vec_from_json(j, A->q_dim(), "element of " + A->label()));
}

AlbertElem albert_from_json(const AlbertPtr& A, const json& j) {
  const json& c = j.is_object() && j.contains("coords") ? j.at("coords") : j;
  return {A, vec_from_json(c, AlbertAlgebra::dim, "element of " + A->label())};
}

json to_json(const AlbertElem& x) { return json{{"algebra", x.parent()->label()}, {"coords", to_json(x.coords())}}; }

json to_json(const Generator& g) {
  json out;
  switch (g.kind) {
    case Generator::Kind::U: out = {{"gen", "U"}, {"elem", to_json(g.elem.coords())}}; break;
    case Generator::Kind::Scalar: out = {{"gen", "scalar"}, {"t", to_string(g.t)}}; break;
    case Generator::Kind::Prim: out = {{"gen", "prim"}, {"name", g.name}, {"p", to_json(g.p.coords())}}; break;
  }
  if (!g.note.empty()) out["note"] = g.note;
  return out;
}

json to_json(const InstrWord& w) {
  json out = json::array();
  for (const auto& g : w.gens) out.push_back(to_json(g));
  return out;
}

InstrWord word_from_json(const AlbertPtr& A, const json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "a word is an array of generators");
  InstrWord w{A, {}};
  for (const auto& g : j) {
    if (!g.is_object() || !g.contains("gen")) fail(Errc::ParseError, "generator without \"gen\": " + g.dump());
    const std::string kind = g.at("gen").get<std::string>();
    if (kind == "U") {
      w.gens.push_back(Generator::u(albert_from_json(A, g.at("elem"))));
    } else if (kind == "scalar") {
      w.gens.push_back(Generator::scalar(rational_from_json(g.at("t"))));
    } else if (kind == "prim") {
      if (g.value("name", "") != "Jp") fail(Errc::ParseError, "unknown primitive generator " + g.dump());
      if (A->construction() != Construction::First) fail(Errc::ParseError, "Jp generators need a first construction");
      w.gens.push_back(Generator::jp(assoc_from_json(A->assoc(), g.at("p"))));
    } else {
      fail(Errc::ParseError, "unknown generator kind " + kind);
    }
  }
  return w;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis) basis.push_back(to_json(v));
  return json{{"dimension", s.dim()}, {"closed", s.closed}, {"basis", basis}};
}

json to_json(const HexElem& g) {
  return json{{"a1", to_json(g.a1.coords())}, {"t2", to_string(g.t2)}, {"a3", to_json(g.a3.coords())},
              {"t4", to_string(g.t4)},        {"a5", to_json(g.a5.coords())}, {"t6", to_string(g.t6)}};
}

HexElem hex_from_json(const AlbertPtr& A, const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "hexagon element must be an object");
  HexElem g = HexElem::identity(A);
  auto elem = [&](const char* k, AlbertElem& out) {
    if (j.contains(k)) out = albert_from_json(A, j.at(k));
  };
  auto scalar = [&](const char* k, Rational& out) {
    if (j.contains(k)) out = rational_from_json(j.at(k));
  };
  elem("a1", g.a1);
  scalar("t2", g.t2);
  elem("a3", g.a3);
  scalar("t4", g.t4);
  elem("a5", g.a5);
  scalar("t6", g.t6);
  return g;
}

}  // namespace albert::cli
