#include "workspace.hpp"

#include "albert/error.hpp"

#include <set>

namespace albert::cli {

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(Errc::ParseError, where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string str(const json& obj, const char* key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) fail(Errc::ParseError, where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& label, const std::string& where) {
  auto it = m.find(label);
  if (it == m.end()) fail(Errc::ParseError, where + ": unknown reference \"" + label + "\"");
  return it->second;
}

const json& section(const json& config, const char* key) {
  static const json empty = json::array();
  if (!config.contains(key)) return empty;
  const json& s = config.at(key);
  if (!s.is_array()) fail(Errc::ParseError, std::string("\"") + key + "\" must be an array");
  return s;
}

}  // namespace

AlbertPtr Workspace::algebra(const std::string& label) const {
  const std::string& name = label.empty() ? default_albert : label;
  if (name.empty()) fail(Errc::ParseError, "the workspace defines no Albert algebra");
  return lookup(albert, name, "--algebra");
}

std::vector<AlbertPtr> Workspace::algebras() const {
  std::vector<AlbertPtr> out;
  for (const auto& l : albert_order) out.push_back(albert.at(l));
  return out;
}

std::vector<CayleyPtr> Workspace::cayley_algebras() const {
  std::vector<CayleyPtr> out;
  for (const auto& l : cayley_order) out.push_back(cayley.at(l));
  return out;
}

Workspace load_workspace(const json& config) {
  if (!config.is_object()) fail(Errc::ParseError, "config must be a JSON object");
  Workspace ws;
  std::set<std::string> labels = {"Q"};
  ws.fields["Q"] = NumberField::rationals();
  auto claim = [&](const json& desc, const std::string& kind) {
    const std::string label = str(desc, "label", kind);
    if (!labels.insert(label).second) fail(Errc::ParseError, kind + ": duplicate label \"" + label + "\"");
    return label;
  };

  for (const json& d : section(config, "fields")) {
    const std::string label = claim(d, "field");
    const std::string where = "field " + label;
    const Vec poly = vec_from_json(member(d, "poly", where), 0, where + " poly");
    std::vector<Vec> autos;
    if (d.contains("automorphisms")) {
      if (!d.at("automorphisms").is_array()) fail(Errc::ParseError, where + ": automorphisms must be an array");
      for (const json& a : d.at("automorphisms")) autos.push_back(vec_from_json(a, 0, where + " automorphism"));
    }
    ws.fields[label] = NumberField::create(label, poly, autos);
    ws.field_order.push_back(label);
  }

  for (const json& d : section(config, "cayley")) {
    const std::string label = claim(d, "cayley");
    const std::string where = "cayley " + label;
    const FieldPtr& base = lookup(ws.fields, d.value("base", std::string("Q")), where);
    if (base->degree() != 1) fail(Errc::ParseError, where + ": Cayley algebras are supported over Q only");
    const Vec p = vec_from_json(member(d, "params", where), 3, where + " params");
    ws.cayley[label] = CayleyAlgebra::create(label, p[0], p[1], p[2]);
    ws.cayley_order.push_back(label);
  }

  for (const json& d : section(config, "assoc")) {
    const std::string label = claim(d, "assoc");
    const std::string where = "assoc " + label;
    const std::string backend = str(d, "backend", where);
    AssocPtr A;
    if (backend == "matrix3") {
      const FieldPtr& F = lookup(ws.fields, d.value("field", std::string("Q")), where);
      if (d.contains("involution")) {
        const json& inv = d.at("involution");
        const FieldPtr& K = lookup(ws.fields, inv.value("K", F->label()), where);
        if (K != F) fail(Errc::ParseError, where + ": involution center must be the entry field");
        const json& g = member(inv, "g", where);
        if (!g.is_array() || g.size() != 9) fail(Errc::ParseError, where + ": g needs 9 entries");
        std::vector<FieldElem> entries;
        for (const json& e : g) entries.push_back(field_elem_from_json(K, e));
        A = Assoc3Algebra::matrix3_unitary(label, K, entries);
      } else {
        A = Assoc3Algebra::matrix3(label, F);
      }
    } else if (backend == "cyclic") {
      const FieldPtr& L = lookup(ws.fields, str(d, "L", where), where);
      const Automorphism sigma = L->automorphism(vec_from_json(member(d, "sigma", where), 0, where + " sigma"));
      A = Assoc3Algebra::cyclic(label, L, sigma, rational_from_json(member(d, "gamma", where)));
    } else {
      fail(Errc::ParseError, where + ": unknown backend \"" + backend + "\"");
    }
    ws.assoc[label] = A;
    ws.assoc_order.push_back(label);
  }

  for (const json& d : section(config, "albert")) {
    const std::string label = claim(d, "albert");
    const std::string where = "albert " + label;
    const std::string c = str(d, "construction", where);
    AlbertPtr J;
    if (c == "first") {
      J = AlbertAlgebra::first(label, lookup(ws.assoc, str(d, "D", where), where),
                               rational_from_json(member(d, "mu", where)));
    } else if (c == "second") {
      const AssocPtr& B = lookup(ws.assoc, str(d, "B", where), where);
      const json& u = member(d, "u", where);
      if (!u.is_array() || u.size() != 9) fail(Errc::ParseError, where + ": u needs 9 entries");
      std::vector<FieldElem> entries;
      for (const json& e : u) entries.push_back(field_elem_from_json(B->field(), e));
      J = AlbertAlgebra::second(label, B, AssocElem(B, entries), field_elem_from_json(B->field(), member(d, "mu", where)));
    } else if (c == "reduced") {
      const Vec g = vec_from_json(member(d, "gammas", where), 3, where + " gammas");
      J = AlbertAlgebra::reduced(label, lookup(ws.cayley, str(d, "C", where), where), {g[0], g[1], g[2]});
    } else {
      fail(Errc::ParseError, where + ": unknown construction \"" + c + "\"");
    }
    ws.albert[label] = J;
    ws.albert_order.push_back(label);
  }

  if (config.contains("default")) {
    ws.default_albert = config.at("default").get<std::string>();
    lookup(ws.albert, ws.default_albert, "default");
  } else if (!ws.albert_order.empty()) {
    ws.default_albert = ws.albert_order.front();
  }
  return ws;
}

Workspace load_workspace_file(const std::string& path) { return load_workspace(read_json_file(path)); }

const json& default_config() {
  static const json config = json::parse(R"({
  "fields": [
    {"label": "L", "poly": ["-1", "-2", "1", "1"], "automorphisms": [["-2", "0", "1"]]},
    {"label": "K", "poly": ["1", "0", "1"], "automorphisms": [["0", "-1"]]}
  ],
  "cayley": [
    {"label": "Os", "base": "Q", "params": ["1", "1", "1"]},
    {"label": "O", "base": "Q", "params": ["-1", "-1", "-1"]}
  ],
  "assoc": [
    {"label": "M3", "backend": "matrix3", "field": "Q"},
    {"label": "D", "backend": "cyclic", "L": "L", "sigma": ["-2", "0", "1"], "gamma": "2"},
    {"label": "B", "backend": "matrix3", "field": "K",
     "involution": {"K": "K", "g": ["1", "0", "0", "0", "1", "0", "0", "0", "2"]}}
  ],
  "albert": [
    {"label": "split", "construction": "first", "D": "M3", "mu": "1"},
    {"label": "m3", "construction": "first", "D": "M3", "mu": "2"},
    {"label": "cyclic", "construction": "first", "D": "D", "mu": "3"},
    {"label": "second", "construction": "second", "B": "B",
     "u": ["1", "0", "0", "0", "1", "0", "0", "0", "5"], "mu": ["2", "1"]},
    {"label": "hsplit", "construction": "reduced", "C": "Os", "gammas": ["1", "1", "1"]},
    {"label": "hdiv", "construction": "reduced", "C": "O", "gammas": ["1", "-1", "2"]}
  ],
  "default": "split"
})");
  return config;
}

}  // namespace albert::cli
