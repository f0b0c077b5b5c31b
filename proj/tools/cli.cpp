#include "cli.hpp"

#include "fixpoint/certificate.hpp"
#include "fixpoint/compile.hpp"
#include "fixpoint/diag.hpp"
#include "fixpoint/encode.hpp"
#include "fixpoint/grelling.hpp"
#include "fixpoint/model.hpp"
#include "fixpoint/parse.hpp"
#include "fixpoint/prf.hpp"
#include "fixpoint/stdlib.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fixpoint::cli {

namespace {

constexpr std::size_t kExcerpt = 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(bool full) : full_(full) {}

  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }
  void flag(std::string key, bool ok) { add(std::move(key), ok ? "pass" : "fail"); }
  void truth(std::string key, Truth t) { add(std::move(key), to_string(t)); }

  void big(const std::string& key, const Nat& n) {
    std::string s = to_decimal(n);
    add(key + ".digits", s.size());
    if (!full_ && s.size() > 2 * kExcerpt + 3) s = s.substr(0, kExcerpt) + "..." + s.substr(s.size() - kExcerpt);
    add(key, std::move(s));
  }

  void code(const std::string& key, const GodelCode& c) {
    big(key, c.value());
    add(key + ".base32-digits", digits_of(c.value()).size());
  }

  void print(Format format, std::ostream& out) const {
    std::vector<std::pair<std::string, std::string>> rows = rows_;
    if (format == Format::Machine) {
      std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [k, v] : rows) out << k << '=' << v << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }

 private:
  bool full_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

Formula input_formula(const RunConfig& c) {
  if (!c.phi.empty() && !c.phi_file.empty()) throw UsageError("give --phi or --phi-file, not both");
  if (!c.phi_file.empty()) return parse_formula(read_file(c.phi_file));
  if (c.phi.empty()) throw UsageError("a formula is required (--phi or --phi-file)");
  return parse_formula(c.phi);
}

Nat parse_nat(const std::string& s, const std::string& what) {
  auto n = parse_decimal(s);
  if (!n) throw UsageError(what + " is not a decimal natural: " + s);
  return *n;
}

std::vector<Nat> parse_args(const RunConfig& c) {
  std::vector<Nat> out;
  for (const std::string& a : c.args) out.push_back(parse_nat(a, "argument"));
  return out;
}

Prf input_program(const RunConfig& c) {
  if (c.program.empty()) throw UsageError("a program is required (--program)");
  if (c.program.front() != '(') {
    try {
      return stdlib_program(c.program);
    } catch (const std::out_of_range&) {
    }
  }
  return parse_sexpr(c.program);
}

SearchBudget budget_of(const RunConfig& c) {
  if (c.quantifier_bound == 0 || c.node_budget == 0) throw UsageError("budgets must be positive");
  return SearchBudget{c.quantifier_bound, c.node_budget};
}

Env parse_bindings(const RunConfig& c) {
  Env env;
  for (const std::string& b : c.bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq < 2 || b[0] != 'x') throw UsageError("binding must look like x3=17: " + b);
    auto index = parse_decimal(b.substr(1, eq - 1));
    if (!index || !fits_u64(*index)) throw UsageError("bad variable in binding: " + b);
    env.set(to_u64(*index), parse_nat(b.substr(eq + 1), "binding value"));
  }
  return env;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_encode(const RunConfig& c, Report& r) {
  Formula f = input_formula(c);
  r.add("formula", print(f, Notation::Ascii));
  r.add("formula.nodes", node_count(f));
  r.add("formula.in-fm1", yes_no(in_fm(f, 1)));
  r.code("code", encode(f));
  return kExitOk;
}

int cmd_decode(const RunConfig& c, Report& r) {
  if (c.code.empty()) throw UsageError("a code is required");
  Nat n = parse_nat(c.code, "code");
  r.big("code", n);
  std::optional<Formula> f = decode(n);
  if (!f) {
    r.add("result", "not-a-code");
    return kExitOk;
  }
  r.add("result", "formula");
  r.add("formula", print(*f, Notation::Ascii));
  r.add("formula.in-fm1", yes_no(in_fm(*f, 1)));
  return kExitOk;
}

int cmd_eval(const RunConfig& c, Report& r) {
  Formula f = input_formula(c);
  Env env = parse_bindings(c);
  for (VarIndex v : free_vars(f))
    if (!env.contains(v)) throw UsageError("free variable x" + std::to_string(v) + " has no binding");
  const std::vector<GraphHint> hints{diag_hint()};
  Verdict v;
  if (!c.certificate_in.empty()) {
    Certificate cert = certificate_from_json(read_file(c.certificate_in));
    r.add("certificate.entries", cert.size());
    v = eval_certified(f, env, cert, budget_of(c), hints);
  } else {
    v = eval_bounded(f, env, budget_of(c), hints);
  }
  r.add("formula.nodes", node_count(f));
  r.truth("verdict", v.truth);
  r.add("nodes", v.nodes);
  r.add("budget-exhausted", yes_no(v.budget_exhausted));
  if (!v.note.empty()) r.add("note", v.note);
  return kExitOk;
}

int cmd_prf_run(const RunConfig& c, Report& r) {
  Prf p = input_program(c);
  std::vector<Nat> args = parse_args(c);
  EvalStats stats;
  Nat value = eval(p, args, EvalOptions{c.max_iterations}, &stats);
  r.add("program.arity", p.arity());
  r.big("result", value);
  r.add("iterations", stats.iterations);
  r.add("fixed-point-exits", stats.fixed_point_exits);
  return kExitOk;
}

int cmd_compile(const RunConfig& c, Report& r) {
  Prf p = input_program(c);
  CompiledGraph g = compile(p);
  r.add("program.arity", p.arity());
  r.add("graph.nodes", node_count(g.formula));
  r.add("graph.existentials", g.quantifier_index.size());
  r.code("graph.code", encode(g.formula));
  if (c.full) r.add("graph.formula", print(g.formula, Notation::Ascii));
  if (c.args.empty()) return kExitOk;

  std::vector<Nat> args = parse_args(c);
  if (args.size() != p.arity()) throw UsageError("program takes " + std::to_string(p.arity()) + " arguments");
  EvalOptions options{c.max_iterations};
  Nat value = eval(p, args, options);
  Certificate cert = witnesses(g, args, options);
  Env env;
  for (std::size_t i = 0; i < args.size(); ++i) env.set(i, args[i]);
  env.set(g.output_var(), value);
  Verdict v = eval_certified(g.formula, env, cert, budget_of(c));
  r.big("value", value);
  r.add("certificate.entries", cert.size());
  r.truth("certified.verdict", v.truth);
  if (!c.certificate_out.empty()) write_file(c.certificate_out, to_json(cert));
  return v.truth == Truth::True ? kExitOk : kExitFailed;
}

void report_diagonal(const DiagonalResult& d, Report& r) {
  r.add("phi", print(d.phi, Notation::Ascii));
  r.add("mu.nodes", node_count(diag_graph().formula));
  r.add("eta.nodes", node_count(d.eta));
  r.code("eta.code", d.code_eta);
  r.code("lambda.code", d.code_lambda);
}

int cmd_diagonalize(const RunConfig& c, Report& r) {
  DiagonalResult d = diagonalize(input_formula(c));
  report_diagonal(d, r);
  bool syntactic = d.lambda == subst_closed(d.eta, 0, numeral(d.code_eta.value()).term);
  bool identity = d.code_lambda.value() == f_native(d.code_eta.value());
  r.flag("fixedpoint.syntactic", syntactic);
  r.flag("fixedpoint.code-identity", identity);
  return syntactic && identity ? kExitOk : kExitFailed;
}

int cmd_verify(const RunConfig& c, Report& r) {
  DiagonalResult d = diagonalize(input_formula(c));
  report_diagonal(d, r);
  VerifyOptions options;
  options.budget = budget_of(c);
  for (const std::string& s : c.spot_codes) options.spot_codes.push_back(parse_nat(s, "spot code"));
  FixedPointReport rep = verify_fixed_point(d, options);

  r.flag("fixedpoint.syntactic", rep.syntactic);
  r.flag("fixedpoint.code-identity", rep.code_identity);
  r.truth("mu.certified", rep.mu_certified);
  if (!rep.mu_note.empty()) r.add("mu.note", rep.mu_note);
  r.truth("lambda.verdict", rep.lambda_verdict);
  r.truth("phi-at-lambda.verdict", rep.phi_at_lambda_verdict);
  r.flag("verdicts.agree", rep.verdicts_agree);

  std::size_t agree = 0;
  const std::size_t width = std::to_string(rep.spot_checks.size()).size();
  for (std::size_t i = 0; i < rep.spot_checks.size(); ++i) {
    const SpotCheck& s = rep.spot_checks[i];
    std::string idx = std::to_string(i);
    std::string key = "spot." + std::string(width - idx.size(), '0') + idx;
    r.big(key + ".n", s.n);
    r.truth(key + ".mu", s.mu_at_n);
    r.truth(key + ".eta", s.eta_at_n);
    r.truth(key + ".phi", s.phi_at_fn);
    r.flag(key + ".agree", s.agree);
    agree += s.agree ? 1 : 0;
  }
  r.add("spot.count", rep.spot_checks.size());
  r.add("spot.agreeing", agree);
  r.flag("fixedpoint", rep.passed());
  return rep.passed() ? kExitOk : kExitFailed;
}

int cmd_grelling(const RunConfig& c, Report& r) {
  if (c.property.empty()) throw UsageError("a property phrase is required (--property)");
  grelling::OpenSentence s = grelling::build_s(c.property);
  grelling::Sentence self = grelling::apply(s, grelling::name(s.text()));
  std::optional<grelling::Sentence> described = grelling::described_substitution(self.text);
  r.add("property", c.property);
  r.add("s", s.text());
  r.add("sentence", self.text);
  r.add("described", described ? described->text : "not-of-the-form");
  bool ok = described && *described == self;
  r.flag("fixedpoint", ok);
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

Command parse_command(const std::string& name) {
  static const std::pair<const char*, Command> kNames[] = {
      {"encode", Command::Encode},       {"decode", Command::Decode},
      {"eval", Command::Eval},           {"prf-run", Command::PrfRun},
      {"compile", Command::Compile},     {"diagonalize", Command::Diagonalize},
      {"verify", Command::Verify},       {"grelling", Command::Grelling},
  };
  for (const auto& [n, c] : kNames)
    if (name == n) return c;
  throw std::invalid_argument("unknown command: " + name);
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Encode: return "encode";
    case Command::Decode: return "decode";
    case Command::Eval: return "eval";
    case Command::PrfRun: return "prf-run";
    case Command::Compile: return "compile";
    case Command::Diagonalize: return "diagonalize";
    case Command::Verify: return "verify";
    case Command::Grelling: return "grelling";
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report(config.full);
  int status = kExitUsage;
  try {
    switch (config.command) {
      case Command::Encode: status = cmd_encode(config, report); break;
      case Command::Decode: status = cmd_decode(config, report); break;
      case Command::Eval: status = cmd_eval(config, report); break;
      case Command::PrfRun: status = cmd_prf_run(config, report); break;
      case Command::Compile: status = cmd_compile(config, report); break;
      case Command::Diagonalize: status = cmd_diagonalize(config, report); break;
      case Command::Verify: status = cmd_verify(config, report); break;
      case Command::Grelling: status = cmd_grelling(config, report); break;
    }
  } catch (const EvalBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.print(config.format, out);
  return status;
}

}  // namespace fixpoint::cli
