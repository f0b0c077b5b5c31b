// Prints one PASS/FAIL line per acceptance criterion. With arguments, runs
// only the listed criteria.

#include "fuzz.hpp"

#include "fixpoint/compile.hpp"
#include "fixpoint/diag.hpp"
#include "fixpoint/encode.hpp"
#include "fixpoint/grelling.hpp"
#include "fixpoint/model.hpp"
#include "fixpoint/parse.hpp"
#include "fixpoint/stack.hpp"
#include "fixpoint/stdlib.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fixpoint;
using testing::Rng;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << "s";
  return o.str();
}

const char* const kFamily[] = {"x0 = x0", "~(x0 = x0)", "E x1 (x1 + x1 = x0)", "x0 = S(S(S(0)))"};

Outcome round_trip() {
  Timer t;
  Rng rng(1);
  std::map<std::string, Formula> seen;
  int mismatches = 0, collisions = 0;
  for (int i = 0; i < 10'000; ++i) {
    Formula f = testing::random_formula(rng, {5, 4});
    Nat code = encode(f).value();
    std::optional<Formula> back = decode(code);
    if (!back || !(*back == f)) ++mismatches;
    auto [it, fresh] = seen.emplace(code.get_str(16), f);
    if (!fresh && !(it->second == f)) ++collisions;
  }
  double s = t.seconds();
  return {mismatches == 0 && collisions == 0 && s < 30,
          "10000 formulas, " + std::to_string(seen.size()) + " distinct, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(collisions) + " collisions, " + secs(s)};
}

Outcome diagonal_oracle() {
  Timer t;
  const Prf& diag = stdlib_program("diag");
  int bad = 0, fm1_hits = 0;
  for (unsigned long n = 0; n <= 5000; ++n) {
    Nat want = f_native(Nat(n));
    if (want != 0) ++fm1_hits;
    if (eval(diag, {Nat(n)}) != want) ++bad;
  }
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    Nat code = encode(testing::random_fm1(rng, {3, 3})).value();
    Nat want = f_native(code);
    if (want == 0 || eval(diag, {code}) != want) ++bad;
  }
  double s = t.seconds();
  return {bad == 0 && s < 600,
          "n <= 5000 (" + std::to_string(fm1_hits) + " in N) and 200 corpus codes, " + std::to_string(bad) +
              " disagreements, " + secs(s)};
}

Outcome compiler_soundness() {
  Timer t;
  Rng rng(3);
  int programs = 0, failures = 0, spurious = 0, probes = 0;
  for (const StdlibEntry& e : stdlib()) {
    CompiledGraph g = compile(e.program);
    ++programs;
    for (int s = 0; s < 100; ++s) {
      std::vector<Nat> args = testing::sample_inputs(e.name, rng);
      Nat y = eval(e.program, args);
      Certificate cert = witnesses(g, args);
      Env env;
      for (std::size_t i = 0; i < args.size(); ++i) env.set(i, args[i]);
      env.set(g.output_var(), y);
      Verdict good = eval_certified(g.formula, env, cert, SearchBudget{64, 100'000'000});
      if (good.truth != Truth::True) ++failures;
      if (s >= 20) continue;
      // A second output must not check, even with witness search.
      for (unsigned long d : {1, 2, 3, 7, 10, 50, 100, 500, 999, 1000}) {
        env.set(g.output_var(), y + d);
        ++probes;
        if (eval_certified(g.formula, env, cert, SearchBudget{1, 4 * good.nodes + 1000}).truth == Truth::True)
          ++spurious;
      }
    }
  }
  double s = t.seconds();
  return {failures == 0 && spurious == 0 && s < 600,
          std::to_string(programs) + " programs x 100 inputs, " + std::to_string(failures) + " uncertified, " +
              std::to_string(spurious) + "/" + std::to_string(probes) + " spurious outputs, " + secs(s)};
}

Outcome construction() {
  bool ok = true;
  std::string detail;
  for (const char* text : kFamily) {
    Timer t;
    DiagonalResult d = diagonalize(parse_formula(text));
    bool syntactic = d.lambda == subst_closed(d.eta, 0, numeral(d.code_eta.value()).term);
    bool identity = f_native(d.code_eta.value()) == d.code_lambda.value();
    double s = t.seconds();
    ok = ok && syntactic && identity && s < 300;
    detail += std::string(detail.empty() ? "" : "; ") + text + ": " + (syntactic && identity ? "ok" : "broken") +
              " " + secs(s);
  }
  return {ok, detail};
}

Outcome semantic_fixed_point(bool spot_checks) {
  bool ok = true;
  std::string detail;
  int spots = 0, spots_agree = 0;
  for (const char* text : kFamily) {
    DiagonalResult d = diagonalize(parse_formula(text));
    FixedPointReport r = verify_fixed_point(d);
    if (spot_checks) {
      for (const SpotCheck& s : r.spot_checks) {
        ++spots;
        bool decided = s.eta_at_n != Truth::Undecided && s.phi_at_fn != Truth::Undecided;
        if (decided && s.eta_at_n == s.phi_at_fn && s.mu_at_n == Truth::True) ++spots_agree;
      }
      continue;
    }
    bool decided = r.lambda_verdict != Truth::Undecided && r.phi_at_lambda_verdict != Truth::Undecided;
    ok = ok && decided && r.lambda_verdict == r.phi_at_lambda_verdict;
    detail += std::string(detail.empty() ? "" : "; ") + text + ": " + to_string(r.lambda_verdict) + "/" +
              to_string(r.phi_at_lambda_verdict);
    if (std::string(text) == "x0 = x0") ok = ok && r.lambda_verdict == Truth::True;
    if (std::string(text) == "~(x0 = x0)") ok = ok && r.lambda_verdict == Truth::False;
  }
  if (spot_checks)
    return {spots_agree == spots && spots / 4 >= 20,
            std::to_string(spots_agree) + "/" + std::to_string(spots) + " certified spot checks agree"};
  return {ok, detail};
}

Outcome grelling_fixed_point() {
  const char* const kPhrases[] = {
      "p",           "is false",          "is true",           "is provable",
      "is long",     "being short",       "is heterological",  "has 'quotes' inside",
      "is not a sentence", "is written in English", "is ''doubly'' quoted", "ends with a period.",
  };
  const std::string kSentence4 =
      "the sentence obtained by substituting the name of 'the sentence obtained by substituting the name of x for "
      "the variable in it has property p' for the variable in it has property p";
  int fixed = 0, total = 0;
  for (const char* p : kPhrases) {
    ++total;
    grelling::Sentence self = grelling::self_sentence(p);
    std::optional<grelling::Sentence> described = grelling::described_substitution(self.text);
    if (described && *described == self) ++fixed;
  }
  bool verbatim = grelling::self_sentence("p").text == kSentence4;
  return {fixed == total && total >= 10 && verbatim,
          std::to_string(fixed) + "/" + std::to_string(total) + " phrases reach the fixed point, canonical sentence " +
              (verbatim ? "verbatim" : "differs")};
}

Outcome evaluator_soundness() {
  std::ifstream in(FIXPOINT_ACCEPTANCE_DIR "/soundness_truths.txt");
  if (!in) return {false, "soundness_truths.txt missing"};
  const SearchBudget kBudgets[] = {{0, 10}, {1, 1000}, {4, 100'000}, {64, 10'000'000}, {200, 10'000'000}};
  int sentences = 0, wrong = 0, decided = 0, runs = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    Truth truth = line.substr(0, tab) == "TRUE" ? Truth::True : Truth::False;
    Formula f = parse_formula(line.substr(tab + 1));
    ++sentences;
    for (const SearchBudget& b : kBudgets) {
      Truth v = eval_bounded(f, Env{}, b).truth;
      ++runs;
      if (v != Truth::Undecided) ++decided;
      if (v != Truth::Undecided && v != truth) ++wrong;
    }
  }
  return {sentences >= 50 && wrong == 0, std::to_string(sentences) + " sentences, " + std::to_string(decided) + "/" +
                                             std::to_string(runs) + " runs decided, " + std::to_string(wrong) +
                                             " wrong"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"goedel numbering round trip", round_trip},
      {"diagonal function oracle", diagonal_oracle},
      {"compiler soundness", compiler_soundness},
      {"fixed point construction", construction},
      {"semantic fixed point", [] { return semantic_fixed_point(false); }},
      {"diagonal spot checks", [] { return semantic_fixed_point(true); }},
      {"grelling fixed point", grelling_fixed_point},
      {"evaluator soundness", evaluator_soundness},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  return run_with_large_stack([&] {
    int failed = 0;
    for (int k : selected) {
      if (k < 1 || k > static_cast<int>(criteria.size())) {
        std::cout << "criterion " << k << ": unknown\n";
        ++failed;
        continue;
      }
      Outcome o = criteria[k - 1].second();
      std::cout << "criterion " << k << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k - 1].first << ": "
                << o.detail << std::endl;
      failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
  });
}
