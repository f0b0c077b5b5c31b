#pragma once

// The fixpoint command line, callable in-process.
//
// Exit status: 0 success or a passed verification, 1 a failed verification,
// 2 a usage or parse error. Machine format prints key=value lines sorted by
// key; human format prints the same records in report order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fixpoint::cli {

enum class Command { Encode, Decode, Eval, PrfRun, Compile, Diagonalize, Verify, Grelling };
enum class Format { Human, Machine };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Encode;
  Format format = Format::Human;
  /// Print big naturals in full instead of a digit count and an excerpt.
  bool full = false;

  std::string phi;       // formula text
  std::string phi_file;  // or a file holding it
  std::string code;      // decimal code for decode
  std::string program;   // library name or s-expression
  std::vector<std::string> args;
  std::vector<std::string> bindings;  // "x3=17" for eval
  std::string certificate_in;
  std::string certificate_out;
  std::string property;  // grelling

  std::uint64_t quantifier_bound = 64;
  std::uint64_t node_budget = 10'000'000;
  std::uint64_t max_iterations = 0;
  std::vector<std::string> spot_codes;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fixpoint::cli
