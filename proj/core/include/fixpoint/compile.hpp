#pragma once

// Compilation of primitive recursive programs to arithmetic formulas.
//
// compile(p) for p of arity k yields a formula with free variables among
// x0..x(k-1) (inputs) and xk (output) that is true in the naturals exactly
// when xk = p(x0, ..., x(k-1)). Only existentials and bounded universals of
// the form  forall i ((exists d (i + S(d) = t)) -> body)  are introduced, so
// a certificate of existential witnesses makes the formula checkable.
//
// Atomic graphs (y the output term):
//   Add, Mul, Succ, Zero, Proj, Const   y = term
//   TruncSub(x, z)   (z + y = x)  |  (y = 0 & E d (x + d = z))
//   IfZero(c, a, b)  (y = a & c = 0)  |  (y = b & E d (c = S(d)))
//   Div(x, z)        (z = 0 & y = 0)  |  E r (x = y * z + r & E d (r + S(d) = z))
//   Mod(x, z)        (z = 0 & y = x)  |  E q (x = q * z + y & E d (y + S(d) = z))
// Compose introduces one existential per inner result that is not a small
// term. PrimRec introduces existentials a, b for a beta-coded history
// beta(a, b, i) = a mod (1 + (i + 1) * b).

#include "fixpoint/certificate.hpp"
#include "fixpoint/env.hpp"
#include "fixpoint/kernel.hpp"
#include "fixpoint/prf.hpp"

#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>

namespace fixpoint {

class WitnessContext;
/// Computes the witness of one existential from the values bound so far.
using WitnessRule = std::function<Nat(const Env&, WitnessContext&)>;

struct CompiledGraph {
  Prf program;
  Formula formula;
  /// Positions of the existentials outside every universal quantifier.
  std::vector<CertPath> quantifier_index;
  /// Witness rules keyed by the variable each existential binds; every
  /// existential in the formula binds a distinct variable.
  std::shared_ptr<const std::unordered_map<VarIndex, WitnessRule>> rules;

  std::size_t arity() const { return program.arity(); }
  VarIndex output_var() const { return program.arity(); }
};

CompiledGraph compile(const Prf& p);

/// Certificate under which the formula holds at (args, p(args)).
Certificate witnesses(const CompiledGraph& g, std::span<const Nat> args, const EvalOptions& options = {});

/// Walks a formula and fills in witnesses using the rules of g for every
/// existential whose bound variable has a rule. `env` must bind the free
/// variables the rules read; `root` is the position of f in a larger formula.
void add_witnesses(const CompiledGraph& g, const Formula& f, Env& env, const CertPath& root, Certificate& cert,
                   const EvalOptions& options = {});

Nat beta_value(const Nat& a, const Nat& b, const Nat& i);
/// (a, b) with beta_value(a, b, i) = seq[i] for every i.
std::pair<Nat, Nat> beta_encode(std::span<const Nat> seq);

/// Matches  forall i ((exists d (i + S(d) = t)) -> body) ; returns t and body.
struct BoundedForall {
  VarIndex var;
  VarIndex guard_var;
  const Term* bound;
  const Formula* body;
};
std::optional<BoundedForall> match_bounded_forall(const Formula& f);

}  // namespace fixpoint
