#include "commands.hpp"

#include "albert/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using namespace albert;
using namespace albert::cli;

void add_arg(CLI::App* sub, Options& o, const std::string& name, const std::string& help) {
  sub->add_option_function<std::string>(
      "--" + name, [&o, name](const std::string& v) { o.args[name] = v; }, help);
}

void print_error(std::string_view code, const std::string& message) {
  json err = {{"error", code}, {"message", message}};
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"albertkit: exact structure-group computations in Albert algebras over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string config, out;
  app.add_option("--config", config, "workspace JSON (default: built-in split, cyclic and second algebras)");
  app.add_option("--algebra", o.algebra, "Albert algebra label (default: the workspace default)");
  app.add_option("--seed", o.seed, "seed for all sampled inputs");
  app.add_option("--count", o.count, "sample count (0: command default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out, "also write the JSON report to this file");

  using Command = std::function<Result(const Workspace&, const Options&)>;
  Command command;

  auto* define = app.add_subcommand("define", "load the workspace, summarize every object and spot-check it");
  define->callback([&] { command = cmd_define; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite,
                     "albert-identities, uop-closed-forms, factorization, hexagon, fixedpoint or composition")
      ->required();
  verify->callback([&] { command = cmd_verify; });

  auto* factor = app.add_subcommand("factor", "write a structure-group element as a word in U-operators");
  factor->add_option("--kind", o.kind, "jp, ia, psi, phi, chi or reduce")->required();
  for (const char* n : {"i", "j", "a", "b", "c"}) add_arg(factor, o, n, "associative element (JSON coordinates)");
  add_arg(factor, o, "s", "symmetric factors for phi (JSON array of 9-coordinate arrays)");
  add_arg(factor, o, "word", "word to reduce (JSON generator list)");
  factor->callback([&] { command = cmd_factor; });

  auto* fixpoint = app.add_subcommand("fixpoint", "fixed vectors in the trace-zero space and the fixed subalgebra");
  fixpoint->add_option("--family", o.family, "jp, ia, psi, phi, identity or word");
  for (const char* n : {"a", "b", "p", "q"}) add_arg(fixpoint, o, n, "associative element (JSON coordinates)");
  add_arg(fixpoint, o, "word", "automorphism as a JSON generator list");
  fixpoint->callback([&] { command = cmd_fixpoint; });

  auto* hexagon = app.add_subcommand("hexagon", "audit the hexagon relations, or multiply --g and --h");
  hexagon->set_help_flag("--help", "print this help message and exit");
  add_arg(hexagon, o, "g", "group element in normal form (JSON)");
  add_arg(hexagon, o, "h", "group element in normal form (JSON)");
  hexagon->callback([&] { command = cmd_hexagon; });

  auto* eval = app.add_subcommand("eval", "evaluate an expression in the Albert algebra");
  eval->add_option("expr", o.expr, "expression, e.g. \"N(x) - T(x#, x)/3\"")->required();
  eval->add_option("--let", o.lets, "binding name=JSON (rational or 27 coordinates)");
  eval->callback([&] { command = cmd_eval; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Workspace ws = config.empty() ? load_workspace(default_config()) : load_workspace_file(config);
    const Result r = command(ws, o);
    const std::string text = r.report.dump(2);
    std::cout << text << '\n';
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) {
        print_error(to_string(Errc::ParseError), "cannot write " + out);
        return 2;
      }
      f << text << '\n';
    }
    return r.exit_code;
  } catch (const Error& e) {
    print_error(to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    print_error(to_string(Errc::ParseError), e.what());
    return 2;
  }
}
