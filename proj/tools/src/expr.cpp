#include "expr.hpp"

#include "albert/error.hpp"

#include <cctype>

namespace albert::cli {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Env& env) : s_(text), env_(env) {}

  Value parse() {
    Value v = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, "expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  AlbertElem as_elem(const Value& v) const {
    if (const auto* x = std::get_if<AlbertElem>(&v)) return *x;
    return std::get<Rational>(v) * AlbertElem::one(env_.algebra);
  }

  const Rational& as_scalar(const Value& v, const char* what) const {
    if (const auto* r = std::get_if<Rational>(&v)) return *r;
    error(std::string(what) + " needs a scalar");
  }

  static bool is_scalar(const Value& v) { return std::holds_alternative<Rational>(v); }

  Value add(const Value& a, const Value& b, int sign) const {
    if (is_scalar(a) && is_scalar(b)) return std::get<Rational>(a) + sign * std::get<Rational>(b);
    return as_elem(a) + Rational(sign) * as_elem(b);
  }

  Value sum() {
    Value v = product();
    for (;;) {
      if (eat('+'))
        v = add(v, product(), 1);
      else if (eat('-'))
        v = add(v, product(), -1);
      else
        return v;
    }
  }

  Value product() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        const Value w = unary();
        if (is_scalar(v) && is_scalar(w))
          v = std::get<Rational>(v) * std::get<Rational>(w);
        else if (is_scalar(v))
          v = std::get<Rational>(v) * std::get<AlbertElem>(w);
        else if (is_scalar(w))
          v = std::get<Rational>(w) * std::get<AlbertElem>(v);
        else
          v = jmul(std::get<AlbertElem>(v), std::get<AlbertElem>(w));
      } else if (eat('/')) {
        const Rational d = as_scalar(unary(), "division");
        if (d == 0) fail(Errc::DivisionByZero, "division by zero in expression");
        if (is_scalar(v))
          v = std::get<Rational>(v) / d;
        else
          v = (1 / d) * std::get<AlbertElem>(v);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) {
      const Value v = unary();
      if (is_scalar(v)) return -std::get<Rational>(v);
      return -std::get<AlbertElem>(v);
    }
    Value v = primary();
    while (eat('#')) v = adjoint(as_elem(v));
    return v;
  }

  std::vector<Value> args() {
    std::vector<Value> out;
    expect('(');
    if (eat(')')) return out;
    do out.push_back(sum());
    while (eat(','));
    expect(')');
    return out;
  }

  Value call(const std::string& name) {
    const std::vector<Value> a = args();
    auto arity = [&](std::size_t n) {
      if (a.size() != n) error(name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "N") return arity(1), Value(norm(as_elem(a[0])));
    if (name == "T") {
      if (a.size() == 1) return trace(as_elem(a[0]));
      arity(2);
      return trace_form(as_elem(a[0]), as_elem(a[1]));
    }
    if (name == "adj") return arity(1), Value(adjoint(as_elem(a[0])));
    if (name == "inv") return arity(1), Value(inverse(as_elem(a[0])));
    if (name == "cross") return arity(2), Value(cross(as_elem(a[0]), as_elem(a[1])));
    if (name == "U") return arity(2), Value(u_apply(as_elem(a[0]), as_elem(a[1])));
    if (name == "jmul") return arity(2), Value(jmul(as_elem(a[0]), as_elem(a[1])));
    if (name == "e") {
      arity(1);
      const Rational& i = as_scalar(a[0], "e(i)");
      if (i.get_den() != 1 || i < 0 || i >= 27) error("e(i) needs an integer 0..26");
      return AlbertElem::unit(env_.algebra, i.get_num().get_ui());
    }
    error("unknown function " + name);
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = sum();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return parse_rational(s_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') return call(name);
      if (auto it = env_.vars.find(name); it != env_.vars.end()) return it->second;
      if (name == "one") return AlbertElem::one(env_.algebra);
      error("unknown name " + name);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const Env& env_;
  std::size_t pos_ = 0;
};

}  // namespace

Value evaluate(const std::string& text, const Env& env) { return Parser(text, env).parse(); }

std::pair<std::string, Value> parse_binding(const AlbertPtr& A, const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) fail(Errc::ParseError, "--let expects name=JSON, got '" + text + "'");
  const std::string name = text.substr(0, eq);
  const std::string rhs = text.substr(eq + 1);
  // Bare rationals such as 5/3 need no JSON quoting.
  if (!rhs.empty() && rhs.front() != '[' && rhs.front() != '{' && rhs.front() != '"')
    return {name, rational_from_json(json(rhs))};
  const json j = parse_json(rhs, "--let " + name);
  if (j.is_array() || j.is_object()) return {name, albert_from_json(A, j)};
  return {name, rational_from_json(j)};
}

json to_json(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return json{{"kind", "scalar"}, {"value", to_string(*r)}};
  const auto& x = std::get<AlbertElem>(v);
  return json{{"kind", "element"}, {"value", cli::to_json(x.coords())}};
}

}  // namespace albert::cli
