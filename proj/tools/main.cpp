#include "cli.hpp"

#include "fixpoint/stack.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using fixpoint::cli::Command;
using fixpoint::cli::RunConfig;

void budget_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--quantifier-bound", c.quantifier_bound, "Search range for unbounded quantifiers");
  sub->add_option("--node-budget", c.node_budget, "Formula nodes visited before giving up");
}

void formula_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--phi", c.phi, "Formula text");
  sub->add_option("--phi-file", c.phi_file, "File holding the formula");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goedel numbering, primitive recursion and the diagonal lemma"};
  app.require_subcommand(1);
  RunConfig c;
  bool machine = false;
  app.add_flag("--machine", machine, "Sorted key=value lines");
  app.add_flag("--full", c.full, "Print big naturals in full");

  auto* encode = app.add_subcommand("encode", "Goedel number of a formula");
  formula_flags(encode, c);

  auto* decode = app.add_subcommand("decode", "Formula with a given code");
  decode->add_option("code", c.code, "Decimal code")->required();

  auto* eval = app.add_subcommand("eval", "Three-valued truth in the standard model");
  formula_flags(eval, c);
  eval->add_option("--bind", c.bindings, "Value of a free variable, as x3=17");
  eval->add_option("--certificate", c.certificate_in, "Witness certificate (JSON)");
  budget_flags(eval, c);

  auto* prf_run = app.add_subcommand("prf-run", "Run a primitive recursive program");
  prf_run->add_option("--program", c.program, "Library name or s-expression")->required();
  prf_run->add_option("args", c.args, "Decimal arguments");
  prf_run->add_option("--max-iterations", c.max_iterations, "Recursion step limit, 0 for none");

  auto* compile = app.add_subcommand("compile", "Arithmetical graph of a program");
  compile->add_option("--program", c.program, "Library name or s-expression")->required();
  compile->add_option("args", c.args, "Arguments for a certified check");
  compile->add_option("--certificate-out", c.certificate_out, "Write the witness certificate here");
  compile->add_option("--max-iterations", c.max_iterations, "Recursion step limit, 0 for none");
  budget_flags(compile, c);

  auto* diagonalize = app.add_subcommand("diagonalize", "Build the fixed point of a formula");
  formula_flags(diagonalize, c);

  auto* verify = app.add_subcommand("verify", "Build and check the fixed point of a formula");
  formula_flags(verify, c);
  verify->add_option("--spot", c.spot_codes, "Codes n for the checks eta(n) <-> phi(f(n))");
  budget_flags(verify, c);

  auto* grelling = app.add_subcommand("grelling", "The ordinary-language fixed point");
  grelling->add_option("--property", c.property, "Property phrase p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : fixpoint::cli::kExitUsage;
  }
  c.command = fixpoint::cli::parse_command(app.get_subcommands().front()->get_name());
  c.format = machine ? fixpoint::cli::Format::Machine : fixpoint::cli::Format::Human;
  return fixpoint::run_with_large_stack([&] { return fixpoint::cli::run(c, std::cout, std::cerr); });
}
