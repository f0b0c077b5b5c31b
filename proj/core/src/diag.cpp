#include "fixpoint/diag.hpp"

#include "fixpoint/parse.hpp"
#include "fixpoint/stdlib.hpp"

#include <stdexcept>

namespace fixpoint {

Nat f_native(const Nat& n) { return native::diag(n); }

const CompiledGraph& diag_graph() {
  static const CompiledGraph g = compile(stdlib_program("diag"));
  return g;
}

GraphHint diag_hint() { return GraphHint{"diag", diag_graph().formula, 0, 1, f_native}; }

namespace {

// Free x0 becomes x1; a variable bound in phi moves up by `shift`.
class Shifter {
 public:
  explicit Shifter(VarIndex shift) : shift_(shift) {}

  Term term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Zero: return t;
      case Term::Kind::Var: return Term::var(bound_[t.var_index()] > 0 ? t.var_index() + shift_ : 1);
      case Term::Kind::Succ: return Term::succ(term(t.lhs()));
      case Term::Kind::Add: return Term::add(term(t.lhs()), term(t.rhs()));
      case Term::Kind::Mul: return Term::mul(term(t.lhs()), term(t.rhs()));
    }
    return t;
  }

  Formula formula(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Eq: return Formula::eq(term(f.lhs_term()), term(f.rhs_term()));
      case K::Not: return Formula::negation(formula(f.left()));
      case K::Forall:
      case K::Exists: {
        ++bound_[f.var_index()];
        Formula body = formula(f.left());
        --bound_[f.var_index()];
        VarIndex v = f.var_index() + shift_;
        return f.kind() == K::Forall ? Formula::forall(v, body) : Formula::exists(v, body);
      }
      default: return Formula::binary(f.kind(), formula(f.left()), formula(f.right()));
    }
  }

 private:
  VarIndex shift_;
  std::unordered_map<VarIndex, int> bound_;
};

}  // namespace

Formula build_eta(const Formula& phi, const CompiledGraph& mu) {
  if (!in_fm(phi, 1)) throw std::invalid_argument("build_eta: phi has a free variable other than x0");
  if (mu.arity() != 1) throw std::invalid_argument("build_eta: mu must be the graph of a unary function");
  Shifter shifter(max_var_index(mu.formula) + 1);
  return Formula::exists(1, Formula::conj(mu.formula, shifter.formula(phi)));
}

DiagonalResult diagonalize(const Formula& phi) {
  Formula eta = build_eta(phi, diag_graph());
  GodelCode code_eta = encode(eta);
  Formula lambda = subst_closed(eta, 0, numeral(code_eta.value()).term);
  GodelCode code_lambda = encode(lambda);
  return DiagonalResult{phi, eta, lambda, code_eta, code_lambda};
}

bool FixedPointReport::passed() const {
  if (!syntactic || !code_identity || mu_certified == Truth::False || !verdicts_agree) return false;
  for (const SpotCheck& s : spot_checks)
    if (!s.agree || s.mu_at_n == Truth::False) return false;
  return true;
}

std::vector<Formula> spot_check_formulas() {
  static const char* const kSample[] = {
      "x0 = x0",
      "x0 = 0",
      "~(x0 = 0)",
      "S(x0) = x0",
      "x0 + x0 = x0",
      "x0 * 0 = 0",
      "x0 = S(0)",
      "0 = 0",
      "~(0 = 0)",
      "x0 = x0 + 0",
      "(x0 = x0 & 0 = 0)",
      "(x0 = 0 | ~(x0 = 0))",
      "(x0 = 0 -> 0 = 0)",
      "(x0 = x0 <-> 0 = 0)",
      "E x1 (x1 + x1 = x0)",
      "E x2 (x0 = S(x2))",
      "A x1 (x1 = x1)",
      "A x0 (x0 = x0)",
      "E x1 (x1 = x0)",
      "~E x1 (x1 = x0)",
      "S(0) * x0 = x0",
      "E x3 (x3 * 0 = x0)",
  };
  std::vector<Formula> out;
  for (const char* s : kSample) out.push_back(parse_formula(s));
  return out;
}

namespace {

// eta(n) under the certificate x1 = f(n) plus the compiler's witnesses for
// mu(n, f(n)); mu(n, f(n)) itself is checked from the same certificate.
void certified_eta_at(const DiagonalResult& r, SpotCheck& s, const Nat& fn, const SearchBudget& budget) {
  Formula eta_n = subst_closed(r.eta, 0, numeral(s.n).term);
  const Formula& mu_n = eta_n.left().left();
  Certificate cert;
  cert.set({}, fn);
  Env env{{0, s.n}, {1, fn}};
  add_witnesses(diag_graph(), mu_n, env, {0, 0}, cert);
  Certificate mu_cert;
  for (const auto& [path, value] : cert.entries())
    if (path.size() >= 2) mu_cert.set(CertPath(path.begin() + 2, path.end()), value);
  s.mu_at_n = eval_certified(mu_n, Env{{1, fn}}, mu_cert, budget).truth;
  s.eta_at_n = eval_certified(eta_n, Env{}, cert, budget, {diag_hint()}).truth;
}

}  // namespace

FixedPointReport verify_fixed_point(const DiagonalResult& r, const VerifyOptions& options) {
  FixedPointReport rep;
  const Nat& ge = r.code_eta.value();
  const Nat& gl = r.code_lambda.value();

  // (a) syntactic identity and the code identity
  rep.syntactic = r.lambda == subst_closed(r.eta, 0, numeral(ge).term);
  rep.code_identity = gl == f_native(ge);

  // (b) mu(code(eta), code(lambda)) with compiler witnesses
  const std::size_t digits = digits_of(ge).size();
  if (digits <= options.certificate_digit_limit) {
    const Nat args[] = {ge};
    Certificate cert = witnesses(diag_graph(), args);
    rep.mu_certified = eval_certified(diag_graph().formula, Env{{0, ge}, {1, gl}}, cert, options.budget).truth;
  } else {
    rep.mu_note = "code(eta) has " + std::to_string(digits) + " digits; the diagonal scan history is beyond the limit of " +
                  std::to_string(options.certificate_digit_limit);
  }

  // (c) lambda against phi(numeral(code(lambda)))
  const std::vector<GraphHint> hints{diag_hint()};
  rep.lambda_verdict = eval_bounded(r.lambda, Env{}, options.budget, hints).truth;
  Formula phi_at = subst_closed(r.phi, 0, numeral(gl).term);
  rep.phi_at_lambda_verdict = eval_bounded(phi_at, Env{}, options.budget).truth;
  rep.verdicts_agree = rep.lambda_verdict == Truth::Undecided || rep.phi_at_lambda_verdict == Truth::Undecided ||
                       rep.lambda_verdict == rep.phi_at_lambda_verdict;

  // (d) eta(n) <-> phi(f(n)) at sampled n
  std::vector<Nat> codes = options.spot_codes;
  if (codes.empty())
    for (const Formula& s : spot_check_formulas()) codes.push_back(encode(s).value());
  for (const Nat& n : codes) {
    Nat fn = f_native(n);
    SpotCheck s{n, Truth::Undecided, Truth::Undecided, Truth::Undecided, false};
    certified_eta_at(r, s, fn, options.budget);
    s.phi_at_fn = eval_bounded(subst_closed(r.phi, 0, numeral(fn).term), Env{}, options.budget).truth;
    s.agree = s.eta_at_n == Truth::Undecided || s.phi_at_fn == Truth::Undecided || s.eta_at_n == s.phi_at_fn;
    rep.spot_checks.push_back(std::move(s));
  }
  return rep;
}

}  // namespace fixpoint
