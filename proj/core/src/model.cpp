#include "fixpoint/model.hpp"

#include "fixpoint/compile.hpp"

#include <optional>

namespace fixpoint {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "TRUE";
    case Truth::False: return "FALSE";
    case Truth::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

namespace {

constexpr Truth T = Truth::True;
constexpr Truth F = Truth::False;
constexpr Truth U = Truth::Undecided;

Truth negate(Truth t) { return t == T ? F : t == F ? T : U; }

void conjuncts(const Formula& f, std::vector<const Formula*>& out) {
  if (f.kind() == Formula::Kind::And) {
    conjuncts(f.left(), out);
    conjuncts(f.right(), out);
  } else {
    out.push_back(&f);
  }
}

bool mentions(const Term& t, VarIndex v) {
  switch (t.kind()) {
    case Term::Kind::Zero: return false;
    case Term::Kind::Var: return t.var_index() == v;
    case Term::Kind::Succ: return mentions(t.lhs(), v);
    default: return mentions(t.lhs(), v) || mentions(t.rhs(), v);
  }
}

// t as coef * v + rest, or nothing when t is not linear in v.
struct Linear {
  Nat coef;
  Nat rest;
};

std::optional<Linear> linear(const Term& t, VarIndex v, const Env& env) {
  if (!mentions(t, v)) return Linear{0, eval_term(t, env)};
  switch (t.kind()) {
    case Term::Kind::Var: return Linear{1, 0};
    case Term::Kind::Succ: {
      auto a = linear(t.lhs(), v, env);
      if (a) a->rest += 1;
      return a;
    }
    case Term::Kind::Add: {
      auto a = linear(t.lhs(), v, env), b = linear(t.rhs(), v, env);
      if (!a || !b) return std::nullopt;
      return Linear{a->coef + b->coef, a->rest + b->rest};
    }
    case Term::Kind::Mul: {
      auto a = linear(t.lhs(), v, env), b = linear(t.rhs(), v, env);
      if (!a || !b || (a->coef != 0 && b->coef != 0)) return std::nullopt;
      return Linear{a->coef * b->rest + b->coef * a->rest, a->rest * b->rest};
    }
    default: return std::nullopt;
  }
}

// Whether t(v) >= v for every value of v.
bool dominates(const Term& t, VarIndex v) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.var_index() == v;
    case Term::Kind::Succ: return dominates(t.lhs(), v);
    case Term::Kind::Add: return dominates(t.lhs(), v) || dominates(t.rhs(), v);
    default: return false;
  }
}

enum class Solved { None, Unique, Unknown };
struct Solution {
  Solved kind = Solved::Unknown;
  Nat value;
};

// Looks for a conjunct of the body that pins v down.
Solution solve(const Formula& body, VarIndex v, const Env& env) {
  std::vector<const Formula*> cs;
  conjuncts(body, cs);
  for (const Formula* c : cs) {
    if (c->kind() != Formula::Kind::Eq) continue;
    if (!mentions(c->lhs_term(), v) && !mentions(c->rhs_term(), v)) continue;
    try {
      auto l = linear(c->lhs_term(), v, env), r = linear(c->rhs_term(), v, env);
      if (!l || !r) continue;
      Nat a = l->coef - r->coef, b = r->rest - l->rest;
      if (a == 0) {
        if (b != 0) return {Solved::None, 0};
        continue;
      }
      if (a < 0) {
        a = -a;
        b = -b;
      }
      if (b < 0 || b % a != 0) return {Solved::None, 0};
      return {Solved::Unique, b / a};
    } catch (const UnboundVariable&) {
      continue;
    }
  }
  return {};
}

std::optional<Nat> monotone_bound(const Formula& body, VarIndex v, const Env& env) {
  std::vector<const Formula*> cs;
  conjuncts(body, cs);
  for (const Formula* c : cs) {
    if (c->kind() != Formula::Kind::Eq) continue;
    for (int side = 0; side < 2; ++side) {
      const Term& t = side ? c->rhs_term() : c->lhs_term();
      const Term& other = side ? c->lhs_term() : c->rhs_term();
      if (!dominates(t, v) || mentions(other, v)) continue;
      try {
        return eval_term(other, env);
      } catch (const UnboundVariable&) {
      }
    }
  }
  return std::nullopt;
}

bool match_term(const Term& g, const Term& m, VarIndex in, std::optional<Term>& captured) {
  if (g.kind() == Term::Kind::Var && g.var_index() == in) {
    if (captured) return *captured == m;
    captured = m;
    return true;
  }
  if (g.identity() == m.identity()) return true;
  if (g.kind() != m.kind()) return false;
  switch (g.kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return g.var_index() == m.var_index();
    case Term::Kind::Succ: return match_term(g.lhs(), m.lhs(), in, captured);
    default: return match_term(g.lhs(), m.lhs(), in, captured) && match_term(g.rhs(), m.rhs(), in, captured);
  }
}

// m is g with some term in place of the free variable `in`.
bool match_formula(const Formula& g, const Formula& m, VarIndex in, std::optional<Term>& captured) {
  if (g.identity() == m.identity()) return true;
  if (g.kind() != m.kind()) return false;
  switch (g.kind()) {
    case Formula::Kind::Eq:
      return match_term(g.lhs_term(), m.lhs_term(), in, captured) &&
             match_term(g.rhs_term(), m.rhs_term(), in, captured);
    case Formula::Kind::Not: return match_formula(g.left(), m.left(), in, captured);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return g.var_index() == m.var_index() && g.var_index() != in &&
             match_formula(g.left(), m.left(), in, captured);
    default:
      return match_formula(g.left(), m.left(), in, captured) && match_formula(g.right(), m.right(), in, captured);
  }
}

class Evaluator {
 public:
  Evaluator(const SearchBudget& budget, const Certificate* cert, const std::vector<GraphHint>& hints)
      : budget_(budget), cert_(cert), hints_(hints) {}

  Verdict run(const Formula& f, const Env& env) {
    Env local = env;
    CertPath path;
    Verdict v;
    v.truth = eval(f, local, path);
    v.nodes = nodes_;
    v.budget_exhausted = exhausted_;
    v.note = note_;
    if (exhausted_ && !v.decided() && note_.empty()) v.note = "node budget exhausted";
    return v;
  }

 private:
  bool tick() {
    if (nodes_ >= budget_.node_budget) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  void remark(std::string s) {
    if (note_.empty()) note_ = std::move(s);
  }

  Truth child(const Formula& f, Env& env, CertPath& path, std::uint64_t step) {
    path.push_back(step);
    Truth t = eval(f, env, path);
    path.pop_back();
    return t;
  }

  Truth eval(const Formula& f, Env& env, CertPath& path) {
    if (!tick()) return U;
    switch (f.kind()) {
      case Formula::Kind::Eq: return eval_term(f.lhs_term(), env) == eval_term(f.rhs_term(), env) ? T : F;
      case Formula::Kind::Not: return negate(child(f.left(), env, path, 0));
      case Formula::Kind::And: {
        Truth a = child(f.left(), env, path, 0);
        if (a == F) return F;
        Truth b = child(f.right(), env, path, 1);
        if (b == F) return F;
        return a == T && b == T ? T : U;
      }
      case Formula::Kind::Or: {
        Truth a = child(f.left(), env, path, 0);
        if (a == T) return T;
        Truth b = child(f.right(), env, path, 1);
        if (b == T) return T;
        return a == F && b == F ? F : U;
      }
      case Formula::Kind::Imp: {
        Truth a = child(f.left(), env, path, 0);
        if (a == F) return T;
        Truth b = child(f.right(), env, path, 1);
        if (b == T) return T;
        return a == T && b == F ? F : U;
      }
      case Formula::Kind::Iff: {
        Truth a = child(f.left(), env, path, 0);
        if (a == U) return U;
        Truth b = child(f.right(), env, path, 1);
        if (b == U) return U;
        return a == b ? T : F;
      }
      case Formula::Kind::Exists: return exists(f, env, path);
      case Formula::Kind::Forall: return forall(f, env, path);
    }
    return U;
  }

  Truth with_value(const Formula& body, Env& env, CertPath& path, VarIndex v, const Nat& w) {
    Env::Binding bind(env, v, w);
    return child(body, env, path, 0);
  }

  Truth exists(const Formula& f, Env& env, CertPath& path) {
    const VarIndex v = f.var_index();
    const Formula& body = f.left();

    if (cert_) {
      if (const Nat* w = cert_->find(path)) {
        Truth t = with_value(body, env, path, v, *w);
        if (t == T) return T;
        if (t == F) remark("certificate witness refuted at " + path_to_string(path));
      }
    }

    if (body.kind() == Formula::Kind::And) {
      for (const GraphHint& h : hints_) {
        if (h.output != v) continue;
        std::optional<Term> captured;
        if (!match_formula(h.graph, body.left(), h.input, captured)) continue;
        Nat in = captured ? eval_term(*captured, env) : env.at(h.input);
        Env::Binding bind(env, v, h.fn(in));
        path.push_back(0);
        Truth t = child(body.right(), env, path, 1);
        path.pop_back();
        if (t != U || exhausted_) return t;
        break;
      }
    }

    Solution s = solve(body, v, env);
    if (s.kind == Solved::None) return F;
    if (s.kind == Solved::Unique) {
      Truth t = with_value(body, env, path, v, s.value);
      if (t != U || exhausted_) return t;
    }

    if (auto bound = monotone_bound(body, v, env); bound && *bound <= budget_.quantifier_bound) {
      bool undecided = false;
      for (std::uint64_t w = 0; w <= to_u64(*bound); ++w) {
        Truth t = with_value(body, env, path, v, Nat(static_cast<unsigned long>(w)));
        if (t == T) return T;
        if (t == U) undecided = true;
        if (exhausted_) return U;
      }
      return undecided ? U : F;
    }

    for (std::uint64_t w = 0; w <= budget_.quantifier_bound; ++w) {
      if (with_value(body, env, path, v, Nat(static_cast<unsigned long>(w))) == T) return T;
      if (exhausted_) return U;
    }
    return U;  // an unbounded existential is never refuted by search
  }

  Truth forall(const Formula& f, Env& env, CertPath& path) {
    if (auto bf = match_bounded_forall(f)) {
      Nat bound = eval_term(*bf->bound, env);
      bool undecided = false;
      for (Nat i = 0; i < bound; ++i) {
        Env::Binding bind(env, bf->var, i);
        path.push_back(fits_u64(i) ? to_u64(i) : UINT64_MAX);
        Truth t = child(*bf->body, env, path, 1);
        path.pop_back();
        if (t == F) return F;
        if (t == U) undecided = true;
        if (exhausted_) return U;
      }
      return undecided ? U : T;
    }
    for (std::uint64_t w = 0; w <= budget_.quantifier_bound; ++w) {
      Env::Binding bind(env, f.var_index(), Nat(static_cast<unsigned long>(w)));
      Truth t = child(f.left(), env, path, w);
      if (t == F) return F;
      if (exhausted_) return U;
    }
    return U;
  }

  SearchBudget budget_;
  const Certificate* cert_;
  const std::vector<GraphHint>& hints_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::string note_;
};

}  // namespace

Verdict eval_bounded(const Formula& f, const Env& env, const SearchBudget& budget,
                     const std::vector<GraphHint>& hints) {
  return Evaluator(budget, nullptr, hints).run(f, env);
}

Verdict eval_certified(const Formula& f, const Env& env, const Certificate& cert, const SearchBudget& budget,
                       const std::vector<GraphHint>& hints) {
  return Evaluator(budget, &cert, hints).run(f, env);
}

}  // namespace fixpoint
