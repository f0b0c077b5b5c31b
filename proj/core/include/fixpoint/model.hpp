#pragma once

// Three-valued evaluation of formulas in the standard model.
//
// TRUE and FALSE are returned only when justified by a finished evaluation;
// anything cut short by the search budget is UNDECIDED. At an existential the
// evaluator tries, in order:
//   1. a certificate witness at this position (TRUE when it checks);
//   2. a functional-graph hint registered by the caller;
//   3. a defining equation: a conjunct t = s of the body that is linear in
//      the bound variable once the other variables are fixed; no solution
//      makes the existential FALSE, a unique one decides it;
//   4. a monotone bound: a conjunct t(v) = c with t(v) >= v bounds v by c;
//   5. exhaustive search over 0..quantifier_bound, which can only give TRUE.
// Universals of the bounded form  forall i ((exists d (i + S(d) = t)) -> A)
// are enumerated over i < t; other universals can only be refuted.

#include "fixpoint/certificate.hpp"
#include "fixpoint/env.hpp"
#include "fixpoint/kernel.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fixpoint {

enum class Truth { True, False, Undecided };
std::string to_string(Truth t);

struct SearchBudget {
  /// Exhaustive range 0..quantifier_bound for unbounded quantifiers.
  std::uint64_t quantifier_bound = 64;
  /// Total formula nodes visited before giving up.
  std::uint64_t node_budget = 10'000'000;
};

struct Verdict {
  Truth truth = Truth::Undecided;
  std::string note;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;

  bool decided() const { return truth != Truth::Undecided; }
};

/// A formula known to be the graph of a function, out = fn(in). Where the
/// body of an existential over `output` is a conjunction whose left part is
/// `graph` with a term in place of `input`, the evaluator takes the output
/// value from fn instead of searching. The graph must be functional; the
/// rule trusts it.
struct GraphHint {
  std::string name;
  Formula graph;
  VarIndex input = 0;
  VarIndex output = 1;
  std::function<Nat(const Nat&)> fn;
};

Verdict eval_bounded(const Formula& f, const Env& env, const SearchBudget& budget,
                     const std::vector<GraphHint>& hints = {});
Verdict eval_certified(const Formula& f, const Env& env, const Certificate& cert, const SearchBudget& budget,
                       const std::vector<GraphHint>& hints = {});

}  // namespace fixpoint
