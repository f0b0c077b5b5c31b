#pragma once

// The diagonal construction.
//
// f(n) is the code of decode(n) with numeral(n) for x0 when n codes a formula
// with at most x0 free, and 0 otherwise. mu is the compiled graph of the
// library program computing f. For phi with at most x0 free:
//   eta    = E x1 (mu(x0, x1) & phi'(x1))
//   lambda = eta with numeral(code(eta)) for x0
// where phi' is phi with x0 renamed to x1 and its bound variables moved above
// every variable of mu. Then code(lambda) = f(code(eta)).

#include "fixpoint/compile.hpp"
#include "fixpoint/encode.hpp"
#include "fixpoint/model.hpp"

#include <vector>

namespace fixpoint {

Nat f_native(const Nat& n);

/// Graph of the diagonal function, compiled once.
const CompiledGraph& diag_graph();
/// Lets the evaluator step over mu by computing f natively.
GraphHint diag_hint();

/// Throws std::invalid_argument unless phi has at most x0 free.
Formula build_eta(const Formula& phi, const CompiledGraph& mu);

struct DiagonalResult {
  Formula phi;
  Formula eta;
  Formula lambda;
  GodelCode code_eta;
  GodelCode code_lambda;
};

DiagonalResult diagonalize(const Formula& phi);

struct SpotCheck {
  Nat n;
  Truth mu_at_n;  // mu(n, f(n)) under the compiler certificate
  Truth eta_at_n;
  Truth phi_at_fn;
  bool agree;
};

struct FixedPointReport {
  bool syntactic = false;           // lambda is literally eta(numeral(code(eta)))
  bool code_identity = false;       // code(lambda) = f(code(eta))
  Truth mu_certified = Truth::Undecided;  // mu(code(eta), code(lambda)) under the compiler certificate
  std::string mu_note;
  Truth lambda_verdict = Truth::Undecided;
  Truth phi_at_lambda_verdict = Truth::Undecided;
  bool verdicts_agree = false;      // equal, or at least one undecided
  std::vector<SpotCheck> spot_checks;

  bool passed() const;
};

struct VerifyOptions {
  SearchBudget budget;
  /// Codes n used for the spot checks eta(n) <-> phi(f(n)); empty selects a
  /// built-in sample of small formulas.
  std::vector<Nat> spot_codes;
  /// Check (b) is attempted only when code(eta) has at most this many
  /// base-32 digits; beyond that the certificate is out of reach.
  std::size_t certificate_digit_limit = 64;
};

FixedPointReport verify_fixed_point(const DiagonalResult& r, const VerifyOptions& options = {});

/// Small formulas with at most x0 free, used for spot checks.
std::vector<Formula> spot_check_formulas();

}  // namespace fixpoint
