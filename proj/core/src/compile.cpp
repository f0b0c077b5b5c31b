#include "fixpoint/compile.hpp"

#include <map>

namespace fixpoint {

class WitnessContext {
 public:
  explicit WitnessContext(EvalOptions options) : options_(options) {}

  const Nat& eval(const Prf& p, std::vector<Nat> args) {
    Key key{p.identity(), std::move(args)};
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    Nat v = fixpoint::eval(p, key.second, options_);
    return values_.emplace(std::move(key), std::move(v)).first->second;
  }

  struct History {
    RecursionTrace trace;
    Nat a, b;
  };

  const History& history(const Prf& p, std::vector<Nat> xs, const Nat& count) {
    xs.push_back(count);
    Key key{p.identity(), std::move(xs)};
    auto it = histories_.find(key);
    if (it != histories_.end()) return it->second;
    std::span<const Nat> params(key.second.data(), key.second.size() - 1);
    History h{trace_recursion(p, params, key.second.back(), options_), 0, 0};
    std::tie(h.a, h.b) = beta_encode(h.trace.values);
    return histories_.emplace(std::move(key), std::move(h)).first->second;
  }

 private:
  using Key = std::pair<const void*, std::vector<Nat>>;
  EvalOptions options_;
  std::map<Key, Nat> values_;
  std::map<Key, History> histories_;
};

namespace {

constexpr std::size_t kInlineLimit = 64;

std::vector<Nat> values_of(const std::vector<Term>& ts, const Env& env) {
  std::vector<Nat> out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(eval_term(t, env));
  return out;
}

std::size_t count_var(const Term& t, VarIndex v) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return t.var_index() == v ? 1 : 0;
    case Term::Kind::Succ: return count_var(t.lhs(), v);
    default: return count_var(t.lhs(), v) + count_var(t.rhs(), v);
  }
}

std::size_t count_var(const Formula& f, VarIndex v) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return count_var(f.lhs_term(), v) + count_var(f.rhs_term(), v);
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return count_var(f.left(), v);
    default: return count_var(f.left(), v) + count_var(f.right(), v);
  }
}

Term var(VarIndex i) { return Term::var(i); }

class Compiler {
 public:
  explicit Compiler(VarIndex first_fresh) : next_(first_fresh) {}

  VarIndex fresh() { return next_++; }

  std::unordered_map<VarIndex, WitnessRule> rules;

  // Graph of out = p(ins).
  Formula graph(const Prf& p, const std::vector<Term>& ins, const Term& out) {
    if (auto t = as_term(p, ins)) return Formula::eq(out, *t);
    switch (p.kind()) {
      case Prf::Kind::TruncSub: return truncsub(ins[0], ins[1], out);
      case Prf::Kind::IfZero: return ifzero(ins[0], ins[1], ins[2], out);
      case Prf::Kind::Div: return div(ins[0], ins[1], out);
      case Prf::Kind::Mod: return mod(ins[0], ins[1], out);
      case Prf::Kind::Compose: return compose(p, ins, out);
      case Prf::Kind::PrimRec: return primrec(p, ins, out);
      default: throw std::logic_error("compile: unexpected program kind");
    }
  }

 private:
  std::optional<Term> as_term(const Prf& p, const std::vector<Term>& ins) const {
    switch (p.kind()) {
      case Prf::Kind::Zero: return Term::zero();
      case Prf::Kind::Succ: return Term::succ(ins[0]);
      case Prf::Kind::Proj: return ins[p.proj_index()];
      case Prf::Kind::Const: return numeral(p.const_value()).term;
      case Prf::Kind::Add: return Term::add(ins[0], ins[1]);
      case Prf::Kind::Mul: return Term::mul(ins[0], ins[1]);
      case Prf::Kind::Compose: {
        std::vector<Term> ts;
        for (const Prf& g : p.inners()) {
          auto t = as_term(g, ins);
          if (!t) return std::nullopt;
          ts.push_back(std::move(*t));
        }
        auto t = as_term(p.outer(), ts);
        if (!t || (node_count(*t) > kInlineLimit && !is_closed(*t))) return std::nullopt;
        return t;
      }
      default: return std::nullopt;
    }
  }

  static Formula eq(const Term& a, const Term& b) { return Formula::eq(a, b); }
  static Formula conj(const Formula& a, const Formula& b) { return Formula::conj(a, b); }
  static Formula disj(const Formula& a, const Formula& b) { return Formula::disj(a, b); }

  // E d (lhs + d = rhs) or, with strict, E d (lhs + S(d) = rhs).
  Formula gap(const Term& lhs, const Term& rhs, bool strict) {
    VarIndex d = fresh();
    rules[d] = [lhs, rhs, strict](const Env& e, WitnessContext&) {
      return monus(eval_term(rhs, e), eval_term(lhs, e) + (strict ? 1 : 0));
    };
    return Formula::exists(d, eq(Term::add(lhs, strict ? Term::succ(var(d)) : var(d)), rhs));
  }

  Formula truncsub(const Term& x, const Term& z, const Term& y) {
    return disj(eq(Term::add(z, y), x), conj(eq(y, Term::zero()), gap(x, z, false)));
  }

  Formula ifzero(const Term& c, const Term& a, const Term& b, const Term& y) {
    VarIndex d = fresh();
    rules[d] = [c](const Env& e, WitnessContext&) { return monus(eval_term(c, e), 1); };
    return disj(conj(eq(y, a), eq(c, Term::zero())),
                conj(eq(y, b), Formula::exists(d, eq(c, Term::succ(var(d))))));
  }

  Formula div(const Term& x, const Term& z, const Term& y) {
    VarIndex r = fresh();
    rules[r] = [x, z](const Env& e, WitnessContext&) { return mod_total(eval_term(x, e), eval_term(z, e)); };
    Formula body = conj(eq(x, Term::add(Term::mul(y, z), var(r))), gap(var(r), z, true));
    return disj(conj(eq(z, Term::zero()), eq(y, Term::zero())), Formula::exists(r, body));
  }

  Formula mod(const Term& x, const Term& z, const Term& y) {
    VarIndex q = fresh();
    rules[q] = [x, z](const Env& e, WitnessContext&) { return div_total(eval_term(x, e), eval_term(z, e)); };
    Formula body = conj(eq(x, Term::add(Term::mul(var(q), z), y)), gap(y, z, true));
    return disj(conj(eq(z, Term::zero()), eq(y, x)), Formula::exists(q, body));
  }

  Formula compose(const Prf& p, const std::vector<Term>& ins, const Term& out) {
    std::vector<Term> ts;
    std::vector<std::pair<VarIndex, Prf>> hidden;
    for (const Prf& g : p.inners()) {
      if (auto t = as_term(g, ins)) {
        ts.push_back(std::move(*t));
        continue;
      }
      VarIndex z = fresh();
      ts.push_back(var(z));
      hidden.emplace_back(z, g);
      rules[z] = [g, ins](const Env& e, WitnessContext& ctx) { return ctx.eval(g, values_of(ins, e)); };
    }
    // the outer graph comes first so that a wrong output fails early
    Formula body = graph(p.outer(), ts, out);
    for (const auto& [z, g] : hidden) body = conj(body, graph(g, ins, var(z)));
    for (auto it = hidden.rbegin(); it != hidden.rend(); ++it) body = Formula::exists(it->first, body);
    return body;
  }

  // beta(a, b, i) = u
  Formula beta(VarIndex a, VarIndex b, const Term& i, const Term& u) {
    Term modulus = Term::succ(Term::mul(Term::succ(i), var(b)));
    VarIndex q = fresh();
    rules[q] = [a, modulus](const Env& e, WitnessContext&) { return div_total(e.at(a), eval_term(modulus, e)); };
    return Formula::exists(q, conj(eq(var(a), Term::add(Term::mul(var(q), modulus), u)), gap(u, modulus, true)));
  }

  Formula primrec(const Prf& p, const std::vector<Term>& ins, const Term& out) {
    const std::size_t n = p.arity() - 1;
    const std::vector<Term> xs(ins.begin(), ins.begin() + static_cast<std::ptrdiff_t>(n));
    const Term m = ins[n];
    const bool fixed = p.is_iteration();
    auto hist = [p, xs, m](const Env& e, WitnessContext& ctx) -> const WitnessContext::History& {
      return ctx.history(p, values_of(xs, e), eval_term(m, e));
    };
    auto at = [](const WitnessContext::History& h, const Nat& i) {
      const auto& vs = h.trace.values;
      return fits_u64(i) && to_u64(i) < vs.size() ? vs[to_u64(i)] : Nat(0);
    };

    VarIndex k = fixed ? fresh() : 0;
    VarIndex a = fresh(), b = fresh();
    rules[a] = [hist](const Env& e, WitnessContext& ctx) { return hist(e, ctx).a; };
    rules[b] = [hist](const Env& e, WitnessContext& ctx) { return hist(e, ctx).b; };
    const Term length = fixed ? var(k) : m;

    Formula spine = beta(a, b, length, out);
    if (fixed) {
      rules[k] = [hist](const Env& e, WitnessContext& ctx) { return Nat(static_cast<unsigned long>(hist(e, ctx).trace.last)); };
      spine = conj(spine, gap(var(k), m, false));
    }

    VarIndex u0 = fresh();
    rules[u0] = [hist, at](const Env& e, WitnessContext& ctx) { return at(hist(e, ctx), 0); };
    spine = conj(spine, Formula::exists(u0, conj(beta(a, b, Term::zero(), var(u0)), graph(p.base(), xs, var(u0)))));

    VarIndex i = fresh();
    Formula guard = gap(var(i), length, true);
    VarIndex u = fresh(), v = fresh();
    rules[u] = [hist, at, i](const Env& e, WitnessContext& ctx) { return at(hist(e, ctx), e.at(i)); };
    rules[v] = [hist, at, i](const Env& e, WitnessContext& ctx) { return at(hist(e, ctx), e.at(i) + 1); };
    std::vector<Term> step_ins = xs;
    step_ins.push_back(var(i));
    step_ins.push_back(var(u));
    Formula step = conj(conj(beta(a, b, var(i), var(u)), beta(a, b, Term::succ(var(i)), var(v))),
                        graph(p.step(), step_ins, var(v)));
    spine = conj(spine, Formula::forall(i, Formula::imp(guard, Formula::exists(u, Formula::exists(v, step)))));

    if (fixed) {
      // either the full count was used or the last value is a fixed point
      std::vector<Term> last_ins = xs;
      last_ins.push_back(var(k));
      last_ins.push_back(out);
      spine = conj(spine, disj(eq(var(k), m), graph(p.step(), last_ins, out)));
    }
    Formula f = Formula::exists(a, Formula::exists(b, spine));
    return fixed ? Formula::exists(k, f) : f;
  }

  VarIndex next_;
};

void collect_index(const Formula& f, CertPath& path, std::vector<CertPath>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Forall: return;
    case Formula::Kind::Exists: out.push_back(path); [[fallthrough]];
    case Formula::Kind::Not:
      path.push_back(0);
      collect_index(f.left(), path, out);
      path.pop_back();
      return;
    default:
      for (std::uint64_t side : {0, 1}) {
        path.push_back(side);
        collect_index(side ? f.right() : f.left(), path, out);
        path.pop_back();
      }
  }
}

class WitnessWalker {
 public:
  WitnessWalker(const CompiledGraph& g, Certificate& cert, const EvalOptions& options)
      : rules_(*g.rules), cert_(cert), ctx_(options) {}

  void walk(const Formula& f, Env& env, CertPath& path) {
    switch (f.kind()) {
      case Formula::Kind::Eq: return;
      case Formula::Kind::Exists: {
        auto it = rules_.find(f.var_index());
        if (it == rules_.end()) return;
        Nat w = it->second(env, ctx_);
        cert_.set(path, w);
        Env::Binding bind(env, f.var_index(), std::move(w));
        descend(f.left(), env, path, 0);
        return;
      }
      case Formula::Kind::Forall: {
        auto bf = match_bounded_forall(f);
        if (!bf) return;
        Nat bound = eval_term(*bf->bound, env);
        if (!fits_u64(bound)) throw EvalBudgetExceeded("witnesses: bounded universal too large to enumerate");
        for (std::uint64_t i = 0; i < to_u64(bound); ++i) {
          Env::Binding bind(env, bf->var, Nat(static_cast<unsigned long>(i)));
          descend(f.left(), env, path, i);
        }
        return;
      }
      case Formula::Kind::Not: descend(f.left(), env, path, 0); return;
      default:
        descend(f.left(), env, path, 0);
        descend(f.right(), env, path, 1);
    }
  }

 private:
  void descend(const Formula& f, Env& env, CertPath& path, std::uint64_t step) {
    path.push_back(step);
    walk(f, env, path);
    path.pop_back();
  }

  const std::unordered_map<VarIndex, WitnessRule>& rules_;
  Certificate& cert_;
  WitnessContext ctx_;
};

}  // namespace

CompiledGraph compile(const Prf& p) {
  const std::size_t k = p.arity();
  auto build = [&](const std::vector<bool>& direct, Compiler& c) {
    std::vector<Term> ins;
    std::vector<VarIndex> aliases(k);
    for (std::size_t j = 0; j < k; ++j) {
      aliases[j] = c.fresh();
      ins.push_back(var(direct[j] ? j : aliases[j]));
    }
    Formula body = c.graph(p, ins, var(k));
    // an input read in several places is bound once, so substituting a
    // numeral for it copies the numeral once
    for (std::size_t j = k; j-- > 0;) {
      if (direct[j]) continue;
      const VarIndex z = aliases[j];
      c.rules[z] = [j](const Env& e, WitnessContext&) { return e.at(j); };
      body = Formula::exists(z, Formula::conj(Formula::eq(var(z), var(j)), body));
    }
    return body;
  };

  std::vector<bool> direct(k, false);
  {
    Compiler probe(k + 1);
    std::vector<Term> ins;
    for (std::size_t j = 0; j < k; ++j) ins.push_back(var(probe.fresh()));
    Formula body = probe.graph(p, ins, var(k));
    for (std::size_t j = 0; j < k; ++j) direct[j] = count_var(body, ins[j].var_index()) <= 1;
  }
  Compiler c(k + 1);
  Formula f = build(direct, c);

  CompiledGraph g{p, f, {}, std::make_shared<const std::unordered_map<VarIndex, WitnessRule>>(std::move(c.rules))};
  CertPath path;
  collect_index(f, path, g.quantifier_index);
  return g;
}

void add_witnesses(const CompiledGraph& g, const Formula& f, Env& env, const CertPath& root, Certificate& cert,
                   const EvalOptions& options) {
  WitnessWalker walker(g, cert, options);
  CertPath path = root;
  walker.walk(f, env, path);
}

Certificate witnesses(const CompiledGraph& g, std::span<const Nat> args, const EvalOptions& options) {
  if (args.size() != g.arity()) throw ArityError("witnesses: wrong number of arguments");
  Env env;
  for (std::size_t j = 0; j < args.size(); ++j) env.set(j, args[j]);
  env.set(g.output_var(), eval(g.program, args, options));
  Certificate cert;
  add_witnesses(g, g.formula, env, {}, cert, options);
  return cert;
}

Nat beta_value(const Nat& a, const Nat& b, const Nat& i) { return mod_total(a, Nat((i + 1) * b + 1)); }

std::pair<Nat, Nat> beta_encode(std::span<const Nat> seq) {
  if (seq.empty()) return {0, 0};
  Nat lcm = 1, top = 0;
  for (std::size_t i = 1; i <= seq.size(); ++i) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), i);
  for (const Nat& s : seq) top = std::max(top, s);
  Nat b = lcm * ((top + lcm) / lcm);  // a multiple of lcm exceeding every entry
  Nat a = 0, modulus = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Nat m = (i + 1) * b + 1;
    Nat inv;
    mpz_invert(inv.get_mpz_t(), Nat(modulus % m).get_mpz_t(), m.get_mpz_t());
    Nat delta = ((seq[i] - a) % m + m) % m;
    a += modulus * ((delta * inv) % m);
    modulus *= m;
  }
  return {a, b};
}

std::optional<BoundedForall> match_bounded_forall(const Formula& f) {
  if (f.kind() != Formula::Kind::Forall) return std::nullopt;
  const Formula& imp = f.left();
  if (imp.kind() != Formula::Kind::Imp || imp.left().kind() != Formula::Kind::Exists) return std::nullopt;
  const Formula& ex = imp.left();
  const Formula& eq = ex.left();
  if (eq.kind() != Formula::Kind::Eq) return std::nullopt;
  const Term& sum = eq.lhs_term();
  if (sum.kind() != Term::Kind::Add || sum.lhs().kind() != Term::Kind::Var || sum.lhs().var_index() != f.var_index())
    return std::nullopt;
  const Term& sd = sum.rhs();
  if (sd.kind() != Term::Kind::Succ || sd.lhs().kind() != Term::Kind::Var || sd.lhs().var_index() != ex.var_index())
    return std::nullopt;
  const Term& bound = eq.rhs_term();
  if (count_var(bound, f.var_index()) || count_var(bound, ex.var_index())) return std::nullopt;
  return BoundedForall{f.var_index(), ex.var_index(), &bound, &imp.right()};
}

}  // namespace fixpoint
