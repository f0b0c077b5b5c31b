#include <doctest.h>

#include "fuzz.hpp"

#include "fixpoint/compile.hpp"
#include "fixpoint/model.hpp"
#include "fixpoint/parse.hpp"
#include "fixpoint/stdlib.hpp"

#include <json.hpp>

#include <set>

using namespace fixpoint;

namespace {

Verdict check_at(const CompiledGraph& g, const std::vector<Nat>& args, const Nat& y, const Certificate& cert,
                 const SearchBudget& budget = {64, 100'000'000}) {
  Env env;
  for (std::size_t i = 0; i < args.size(); ++i) env.set(i, args[i]);
  env.set(g.output_var(), y);
  return eval_certified(g.formula, env, cert, budget);
}

const Formula* follow(const Formula& root, const CertPath& path) {
  const Formula* f = &root;
  for (std::uint64_t step : path) {
    if (f->kind() == Formula::Kind::Eq) return nullptr;
    f = step == 0 || f->kind() == Formula::Kind::Not || f->is_quantifier() ? &f->left() : &f->right();
  }
  return f;
}

void bound_vars(const Formula& f, std::multiset<VarIndex>& out) {
  if (f.kind() == Formula::Kind::Eq) return;
  if (f.is_quantifier()) out.insert(f.var_index());
  bound_vars(f.left(), out);
  if (f.kind() != Formula::Kind::Not && !f.is_quantifier()) bound_vars(f.right(), out);
}

Prf plus() { return Prf::primrec(Prf::proj(0, 1), Prf::compose(Prf::succ(), {Prf::proj(2, 3)})); }

}  // namespace

TEST_CASE("beta function values computed by hand") {
  // a mod (1 + (i + 1) b)
  CHECK(beta_value(100, 3, 0) == 0);
  CHECK(beta_value(100, 3, 1) == 2);
  CHECK(beta_value(100, 3, 2) == 0);
  CHECK(beta_value(7, 0, 5) == 0);
}

TEST_CASE("beta encoding recovers sequences") {
  auto check = [](const std::vector<Nat>& seq) {
    auto [a, b] = beta_encode(seq);
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(beta_value(a, b, i) == seq[i]);
  };
  check({5, 7, 9});
  check({0});
  check({});
  check({1, 1, 1, 1, 1});
  check({120, 0, 3628800, 2});
  testing::Rng rng(40);
  for (int t = 0; t < 100; ++t) {
    std::vector<Nat> seq;
    for (std::size_t i = rng() % 12; i > 0; --i) seq.emplace_back(static_cast<unsigned long>(rng() % 100000));
    check(seq);
  }
}

TEST_CASE("graph shape") {
  CompiledGraph g = compile(stdlib_program("factorial"));
  CHECK(g.arity() == 1);
  CHECK(g.output_var() == 1);
  CHECK(free_vars(g.formula) == std::set<VarIndex>{0, 1});
  for (const CertPath& p : g.quantifier_index) {
    const Formula* f = follow(g.formula, p);
    REQUIRE(f != nullptr);
    CHECK(f->kind() == Formula::Kind::Exists);
  }
  std::multiset<VarIndex> vars;
  bound_vars(compile(stdlib_program("diag")).formula, vars);
  CHECK(std::set<VarIndex>(vars.begin(), vars.end()).size() == vars.size());
}

TEST_CASE("atomic graphs decide both ways") {
  for (const Prf& p : {Prf::add(), Prf::mul(), Prf::truncsub(), Prf::div(), Prf::mod()}) {
    CompiledGraph g = compile(p);
    for (unsigned long x = 0; x < 6; ++x)
      for (unsigned long y = 0; y < 6; ++y) {
        std::vector<Nat> args{x, y};
        Nat out = eval(p, args);
        Certificate cert = witnesses(g, args);
        CHECK(check_at(g, args, out, cert).truth == Truth::True);
        CHECK(check_at(g, args, out + 1, cert).truth != Truth::True);
      }
  }
}

TEST_CASE("hand-written programs compile soundly") {
  const Prf twice = Prf::compose(Prf::add(), {Prf::proj(0, 1), Prf::proj(0, 1)});
  const Prf square_plus = Prf::compose(plus(), {Prf::compose(Prf::mul(), {Prf::proj(0, 2), Prf::proj(0, 2)}),
                                                Prf::proj(1, 2)});
  testing::Rng rng(41);
  for (const Prf& p : {twice, plus(), square_plus, stdlib_program("factorial")}) {
    CompiledGraph g = compile(p);
    for (int i = 0; i < 30; ++i) {
      std::vector<Nat> args;
      for (std::size_t j = 0; j < p.arity(); ++j) args.emplace_back(static_cast<unsigned long>(rng() % 12));
      Nat out = eval(p, args);
      Certificate cert = witnesses(g, args);
      CHECK(check_at(g, args, out, cert).truth == Truth::True);
      for (unsigned long d : {1ul, 2ul, 1000ul})
        CHECK(check_at(g, args, out + d, cert, {1, 200'000}).truth != Truth::True);
    }
  }
}

TEST_CASE("library graphs are certified on samples") {
  testing::Rng rng(42);
  for (const StdlibEntry& e : stdlib()) {
    if (e.name == "diag" || e.name == "subst_code" || e.name == "in_n_code") continue;
    CAPTURE(e.name);
    CompiledGraph g = compile(e.program);
    for (int i = 0; i < 20; ++i) {
      std::vector<Nat> args = testing::sample_inputs(e.name, rng);
      Certificate cert = witnesses(g, args);
      CHECK(check_at(g, args, eval(e.program, args), cert).truth == Truth::True);
    }
  }
}

TEST_CASE("the diagonal graph is certified at a small code") {
  const CompiledGraph& g = compile(stdlib_program("diag"));
  std::vector<Nat> args{1453};
  Certificate cert = witnesses(g, args);
  CHECK(check_at(g, args, native::diag(1453), cert).truth == Truth::True);
  CHECK(check_at(g, args, native::diag(1453) + 1, cert, {1, 2'000'000}).truth != Truth::True);
}

TEST_CASE("certificates survive JSON") {
  const CompiledGraph g = compile(stdlib_program("mul_via_primrec"));
  std::vector<Nat> args{6, 7};
  Certificate cert = witnesses(g, args);
  Certificate back = certificate_from_json(to_json(cert));
  CHECK(back.entries() == cert.entries());
  CHECK(check_at(g, args, 42, back).truth == Truth::True);

  using nlohmann::json;
  CHECK(json::parse(to_json(Certificate{})) == json::parse(R"({"certificate":[]})"));
  Certificate one;
  one.set({0, 1}, 42);
  CHECK(json::parse(to_json(one)) == json::parse(R"({"certificate":[{"path":[0,1],"value":"42"}]})"));
  CHECK_THROWS_AS(certificate_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(R"({"certificate":[{"path":[0],"value":"x"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(R"({"nope":[]})"), std::invalid_argument);
}

TEST_CASE("bounded universal pattern") {
  Formula f = parse_formula("A x1 ((E x2 (x1 + S(x2) = x0)) -> x1 = x1)");
  auto m = match_bounded_forall(f);
  REQUIRE(m.has_value());
  CHECK(m->var == 1);
  CHECK(m->guard_var == 2);
  CHECK(*m->bound == Term::var(0));
  CHECK_FALSE(match_bounded_forall(parse_formula("A x1 (x1 = x1)")).has_value());
  CHECK_FALSE(match_bounded_forall(parse_formula("A x1 ((E x2 (x2 + S(x1) = x0)) -> x1 = x1)")).has_value());
}
