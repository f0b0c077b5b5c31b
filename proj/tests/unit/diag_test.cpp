#include <doctest.h>

#include "fuzz.hpp"

#include "fixpoint/diag.hpp"
#include "fixpoint/parse.hpp"

using namespace fixpoint;

TEST_CASE("f on small codes") {
  Nat c = encode(parse_formula("x0 = x0")).value();
  CHECK(f_native(c) == encode(subst_closed(parse_formula("x0 = x0"), 0, numeral(c).term)).value());
  CHECK(f_native(encode(parse_formula("0 = 0")).value()) == 1321);
  CHECK(f_native(encode(parse_formula("x1 = 0")).value()) == 0);
  CHECK(f_native(0) == 0);
  CHECK(f_native(1322) == 0);
}

TEST_CASE("eta has the documented shape") {
  Formula phi = parse_formula("E x1 (x1 + x1 = x0)");
  Formula eta = build_eta(phi, diag_graph());
  REQUIRE(eta.kind() == Formula::Kind::Exists);
  CHECK(eta.var_index() == 1);
  REQUIRE(eta.left().kind() == Formula::Kind::And);
  CHECK(eta.left().left() == diag_graph().formula);
  CHECK(free_vars(eta) == std::set<VarIndex>{0});
  // phi' renames free x0 to x1 and moves its bound variable above mu's.
  const Formula& shifted = eta.left().right();
  CHECK(free_vars(shifted) == std::set<VarIndex>{1});
  CHECK(shifted.var_index() > max_var_index(diag_graph().formula));
}

TEST_CASE("eta rejects formulas outside Fm_1") {
  CHECK_THROWS_AS(build_eta(parse_formula("x1 = 0"), diag_graph()), std::invalid_argument);
  CHECK_NOTHROW(build_eta(parse_formula("0 = 0"), diag_graph()));
}

TEST_CASE("lambda is eta at its own code") {
  testing::Rng rng(60);
  std::vector<Formula> phis{parse_formula("x0 = x0"), parse_formula("0 = 0")};
  for (int i = 0; i < 3; ++i) phis.push_back(testing::random_fm1(rng, {2, 2}));
  for (const Formula& phi : phis) {
    DiagonalResult d = diagonalize(phi);
    CHECK(d.code_eta == encode(d.eta));
    CHECK(d.code_lambda == encode(d.lambda));
    CHECK(d.lambda == subst_closed(d.eta, 0, numeral(d.code_eta.value()).term));
    CHECK(d.code_lambda.value() == f_native(d.code_eta.value()));
    CHECK(in_fm(d.lambda, 0));
  }
}

TEST_CASE("spot check sample lies in Fm_1") {
  std::vector<Formula> sample = spot_check_formulas();
  CHECK(sample.size() >= 20);
  for (const Formula& f : sample) CHECK(in_fm(f, 1));
}

TEST_CASE("fixed point verification for x0 = x0") {
  FixedPointReport r = verify_fixed_point(diagonalize(parse_formula("x0 = x0")));
  CHECK(r.syntactic);
  CHECK(r.code_identity);
  CHECK(r.mu_certified == Truth::Undecided);
  CHECK_FALSE(r.mu_note.empty());
  CHECK(r.lambda_verdict == Truth::True);
  CHECK(r.phi_at_lambda_verdict == Truth::True);
  CHECK(r.verdicts_agree);
  CHECK(r.spot_checks.size() == spot_check_formulas().size());
  for (const SpotCheck& s : r.spot_checks) {
    CHECK(s.mu_at_n == Truth::True);
    CHECK(s.agree);
  }
  CHECK(r.passed());
}

TEST_CASE("fixed point verification with explicit spot codes") {
  VerifyOptions options;
  options.spot_codes = {0, 1322, encode(parse_formula("x0 = 0")).value()};
  FixedPointReport r = verify_fixed_point(diagonalize(parse_formula("~(x0 = x0)")), options);
  REQUIRE(r.spot_checks.size() == 3);
  CHECK(r.lambda_verdict == Truth::False);
  CHECK(r.phi_at_lambda_verdict == Truth::False);
  // eta(n) is false for every n here since phi never holds.
  for (const SpotCheck& s : r.spot_checks) CHECK(s.eta_at_n != Truth::True);
  CHECK(r.passed());
}
