#include <doctest.h>

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

using namespace fixpoint::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_machine(RunConfig c) {
  c.format = Format::Machine;
  std::ostringstream out, err;
  int status = run(c, out, err);
  return {status, out.str(), err.str()};
}

RunConfig make(Command command, std::function<void(RunConfig&)> fill = {}) {
  RunConfig c;
  c.command = command;
  if (fill) fill(c);
  return c;
}

// Compares against tests/golden/<name>.txt; FIXPOINT_UPDATE_GOLDEN=1 rewrites it.
void golden(const std::string& name, const RunConfig& c, int status = kExitOk) {
  Result r = run_machine(c);
  CHECK(r.status == status);
  CHECK(r.err.empty());
  CHECK(run_machine(c).out == r.out);
  const std::string path = std::string(FIXPOINT_GOLDEN_DIR) + "/" + name + ".txt";
  if (const char* u = std::getenv("FIXPOINT_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path) << r.out;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in, "missing golden file " << path);
  std::stringstream want;
  want << in.rdbuf();
  CHECK(r.out == want.str());
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("golden machine output") {
  golden("encode", make(Command::Encode, [](RunConfig& c) { c.phi = "0 = 0"; }));
  golden("decode_zero", make(Command::Decode, [](RunConfig& c) { c.code = "0"; }));
  golden("decode_formula", make(Command::Decode, [](RunConfig& c) { c.code = "1453"; }));
  golden("eval_even", make(Command::Eval, [](RunConfig& c) {
           c.phi = "E x1 (x1 + x1 = x0)";
           c.bindings = {"x0=1000000000000"};
         }));
  golden("prf_run_factorial", make(Command::PrfRun, [](RunConfig& c) {
           c.program = "factorial";
           c.args = {"20"};
         }));
  golden("compile_mul", make(Command::Compile, [](RunConfig& c) {
           c.program = "mul_via_primrec";
           c.args = {"6", "7"};
         }));
  golden("grelling_p", make(Command::Grelling, [](RunConfig& c) { c.property = "p"; }));
  golden("diagonalize_identity", make(Command::Diagonalize, [](RunConfig& c) { c.phi = "x0 = x0"; }));
  golden("verify_contradiction", make(Command::Verify, [](RunConfig& c) { c.phi = "~(x0 = x0)"; }));
}

TEST_CASE("required report lines") {
  Result d = run_machine(make(Command::Diagonalize, [](RunConfig& c) { c.phi = "x0 = x0"; }));
  CHECK(d.status == kExitOk);
  CHECK(has_line(d.out, "fixedpoint.syntactic=pass"));
  Result z = run_machine(make(Command::Decode, [](RunConfig& c) { c.code = "0"; }));
  CHECK(z.status == kExitOk);
  CHECK(has_line(z.out, "result=not-a-code"));
}

TEST_CASE("machine lines are sorted") {
  Result r = run_machine(make(Command::Encode, [](RunConfig& c) { c.phi = "E x1 (x1 = x0)"; }));
  std::istringstream in(r.out);
  std::string prev, line;
  while (std::getline(in, line)) {
    CHECK(prev <= line.substr(0, line.find('=')));
    prev = line.substr(0, line.find('='));
  }
}

TEST_CASE("big values are summarised unless full") {
  RunConfig c = make(Command::PrfRun, [](RunConfig& c) {
    c.program = "pow32";
    c.args = {"100"};
  });
  Result brief = run_machine(c);
  CHECK(has_line(brief.out, "result.digits=151"));
  CHECK(brief.out.find("...") != std::string::npos);
  c.full = true;
  Result full = run_machine(c);
  CHECK(full.out.find("...") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_machine(make(Command::Encode)).status == kExitUsage);
  CHECK(run_machine(make(Command::Encode, [](RunConfig& c) { c.phi = "x0 ="; })).status == kExitUsage);
  CHECK(run_machine(make(Command::Decode, [](RunConfig& c) { c.code = "12a"; })).status == kExitUsage);
  CHECK(run_machine(make(Command::PrfRun, [](RunConfig& c) {
          c.program = "factorial";
          c.args = {"1", "2"};
        })).status == kExitUsage);
  CHECK(run_machine(make(Command::Diagonalize, [](RunConfig& c) { c.phi = "x1 = 0"; })).status == kExitUsage);
  CHECK(run_machine(make(Command::Eval, [](RunConfig& c) { c.phi = "x0 = 0"; })).status == kExitUsage);
  CHECK(run_machine(make(Command::Grelling)).status == kExitUsage);
  CHECK(run_machine(make(Command::Eval, [](RunConfig& c) {
          c.phi = "0 = 0";
          c.node_budget = 0;
        })).status == kExitUsage);
  CHECK_THROWS_AS(parse_command("frobnicate"), std::invalid_argument);
  for (Command c : {Command::Encode, Command::Verify, Command::PrfRun}) CHECK(parse_command(command_name(c)) == c);
}

TEST_CASE("human format keeps report order") {
  RunConfig c = make(Command::Decode, [](RunConfig& c) { c.code = "1321"; });
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitOk);
  CHECK(out.str().rfind("code.digits", 0) == 0);
}
