#pragma once

#include "albert/error.hpp"
#include "workspace.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace albert::cli {

struct Options {
  std::string algebra;  // empty: workspace default
  std::uint64_t seed = 1;
  int count = 0;        // 0: per-command default
  std::string suite;    // verify
  std::string kind;     // factor
  std::string family;   // fixpoint
  std::string expr;     // eval
  std::vector<std::string> lets;
  // Named JSON arguments: i, j, a, b, c, p, q, s, word, g, h.
  std::map<std::string, std::string> args;
};

struct Result {
  json report;
  int exit_code = 0;  // 0 pass, 1 verification failure
};

Result cmd_define(const Workspace& ws, const Options& o);
Result cmd_verify(const Workspace& ws, const Options& o);
Result cmd_factor(const Workspace& ws, const Options& o);
Result cmd_fixpoint(const Workspace& ws, const Options& o);
Result cmd_hexagon(const Workspace& ws, const Options& o);
Result cmd_eval(const Workspace& ws, const Options& o);

// 1 for failed verifications and invariants, 2 for input and usage errors.
int exit_code_for(Errc code);

}  // namespace albert::cli
