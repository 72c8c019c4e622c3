#pragma once

#include "albert/albert.hpp"
#include "json_io.hpp"

#include <map>
#include <string>
#include <variant>

namespace albert::cli {

using Value = std::variant<Rational, AlbertElem>;

struct Env {
  AlbertPtr algebra;
  std::map<std::string, Value> vars;
};

// Expressions over one Albert algebra:
//   x + y, x - y, -x, s * x, x * y (Jordan product), x / s, x#, (x)
//   N(x), T(x), T(x, y), adj(x), cross(x, y), U(x, y), inv(x), jmul(x, y), e(i)
// with rational literals (3, 3/4), `one` for the identity and --let names.
// A scalar added to an element stands for scalar * one.
Value evaluate(const std::string& text, const Env& env);

// "name=JSON" where JSON is a rational or a 27-coordinate array.
std::pair<std::string, Value> parse_binding(const AlbertPtr& A, const std::string& text);

json to_json(const Value& v);

}  // namespace albert::cli
