#include "fixpoint/prf.hpp"

#include <limits>

namespace fixpoint {

namespace {
std::string kind_name(Prf::Kind k) {
  switch (k) {
    case Prf::Kind::Zero: return "zero";
    case Prf::Kind::Succ: return "succ";
    case Prf::Kind::Proj: return "proj";
    case Prf::Kind::Const: return "const";
    case Prf::Kind::Compose: return "compose";
    case Prf::Kind::PrimRec: return "primrec";
    case Prf::Kind::Add: return "add";
    case Prf::Kind::Mul: return "mul";
    case Prf::Kind::TruncSub: return "tsub";
    case Prf::Kind::IfZero: return "ifzero";
    case Prf::Kind::Div: return "div";
    case Prf::Kind::Mod: return "mod";
  }
  return "?";
}
}  // namespace

Prf Prf::zero() {
  static const Prf p{std::make_shared<const Node>(Node{Kind::Zero, 1, 0, 0, {}, false})};
  return p;
}
Prf Prf::succ() {
  static const Prf p{std::make_shared<const Node>(Node{Kind::Succ, 1, 0, 0, {}, false})};
  return p;
}
Prf Prf::proj(std::size_t i, std::size_t arity) {
  if (i >= arity) throw ArityError("proj: index " + std::to_string(i) + " out of range for arity " + std::to_string(arity));
  return Prf{std::make_shared<const Node>(Node{Kind::Proj, arity, i, 0, {}, false})};
}
Prf Prf::constant(Nat value, std::size_t arity) {
  if (value < 0) throw std::invalid_argument("const: negative value");
  return Prf{std::make_shared<const Node>(Node{Kind::Const, arity, 0, std::move(value), {}, false})};
}

#define FIXPOINT_PRIMITIVE(fn, kind, ar)                                                 \
  Prf Prf::fn() {                                                                        \
    static const Prf p{std::make_shared<const Node>(Node{Kind::kind, ar, 0, 0, {}, false})}; \
    return p;                                                                            \
  }
FIXPOINT_PRIMITIVE(add, Add, 2)
FIXPOINT_PRIMITIVE(mul, Mul, 2)
FIXPOINT_PRIMITIVE(truncsub, TruncSub, 2)
FIXPOINT_PRIMITIVE(ifzero, IfZero, 3)
FIXPOINT_PRIMITIVE(div, Div, 2)
FIXPOINT_PRIMITIVE(mod, Mod, 2)
#undef FIXPOINT_PRIMITIVE

Prf Prf::compose(Prf outer, std::vector<Prf> inners) {
  if (inners.empty()) throw ArityError("compose: needs at least one inner program");
  if (outer.arity() != inners.size())
    throw ArityError("compose: outer arity " + std::to_string(outer.arity()) + " but " +
                     std::to_string(inners.size()) + " inner programs");
  const std::size_t n = inners.front().arity();
  for (const Prf& g : inners)
    if (g.arity() != n) throw ArityError("compose: inner programs disagree on arity");
  std::vector<Prf> children;
  children.reserve(inners.size() + 1);
  children.push_back(std::move(outer));
  for (Prf& g : inners) children.push_back(std::move(g));
  return Prf{std::make_shared<const Node>(Node{Kind::Compose, n, 0, 0, std::move(children), false})};
}

Prf Prf::primrec(Prf base, Prf step) {
  const std::size_t n = base.arity();
  if (step.arity() != n + 2)
    throw ArityError("primrec: base arity " + std::to_string(n) + " requires step arity " + std::to_string(n + 2) +
                     ", got " + std::to_string(step.arity()));
  const bool iteration = step.ignores_arg(n);
  return Prf{std::make_shared<const Node>(Node{Kind::PrimRec, n + 1, 0, 0, {std::move(base), std::move(step)}, iteration})};
}

bool Prf::ignores_arg(std::size_t j) const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::Const: return true;
    case Kind::Proj: return proj_index() != j;
    case Kind::Compose: {
      auto gs = inners();
      for (std::size_t i = 0; i < gs.size(); ++i)
        if (!gs[i].ignores_arg(j) && !outer().ignores_arg(i)) return false;
      return true;
    }
    case Kind::PrimRec: {
      const std::size_t n = arity() - 1;
      if (j >= n) return false;
      return base().ignores_arg(j) && step().ignores_arg(j);
    }
    default: return false;
  }
}

std::size_t Prf::node_count() const {
  std::size_t n = 1;
  for (const Prf& c : node_->children) n += c.node_count();
  return n;
}

bool operator==(const Prf& a, const Prf& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity() || a.node_->index != b.node_->index ||
      a.node_->value != b.node_->value || a.node_->children.size() != b.node_->children.size())
    return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  return true;
}

namespace {

using Val = std::shared_ptr<const Nat>;

Val make(Nat v) { return std::make_shared<const Nat>(std::move(v)); }

const Val& zero_val() {
  static const Val z = make(0);
  return z;
}

class Evaluator {
 public:
  Evaluator(const EvalOptions& o, EvalStats* s) : options_(o), stats_(s) {}

  Val run(const Prf& p, std::span<const Val> a) {
    using K = Prf::Kind;
    switch (p.kind()) {
      case K::Zero: return zero_val();
      case K::Succ: return make(*a[0] + 1);
      case K::Proj: return a[p.proj_index()];
      case K::Const: return p.const_value() == 0 ? zero_val() : make(p.const_value());
      case K::Add: return make(*a[0] + *a[1]);
      case K::Mul: return make(*a[0] * *a[1]);
      case K::TruncSub: return make(monus(*a[0], *a[1]));
      case K::IfZero: return *a[0] == 0 ? a[1] : a[2];
      case K::Div: return make(div_total(*a[0], *a[1]));
      case K::Mod: return make(mod_total(*a[0], *a[1]));
      case K::Compose: return compose(p, a);
      case K::PrimRec: return recurse(p, a, nullptr);
    }
    return zero_val();
  }

  Val recurse(const Prf& p, std::span<const Val> a, RecursionTrace* trace) {
    const std::size_t n = p.arity() - 1;
    const Nat& count = *a[n];
    std::vector<Val> args(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
    Val r = run(p.base(), args);
    if (trace) trace->values.push_back(*r);
    args.push_back(zero_val());
    args.push_back(r);
    const bool iteration = p.is_iteration();
    const std::uint64_t limit =
        fits_u64(count) ? to_u64(count) : std::numeric_limits<std::uint64_t>::max();
    std::uint64_t k = 0;
    bool fixed = false;
    for (; k < limit; ++k) {
      tick();
      args[n] = iteration ? zero_val() : make(Nat(static_cast<unsigned long>(k)));
      args[n + 1] = r;
      Val next = run(p.step(), args);
      if (iteration && (next == r || *next == *r)) {
        fixed = true;
        if (stats_) ++stats_->fixed_point_exits;
        break;
      }
      r = std::move(next);
      if (trace) trace->values.push_back(*r);
    }
    if (stats_) stats_->longest_loop = std::max(stats_->longest_loop, k);
    if (trace) {
      trace->last = k;
      trace->fixed_point = fixed;
    }
    return r;
  }

 private:
  Val compose(const Prf& p, std::span<const Val> a) {
    const Prf& outer = p.outer();
    auto gs = p.inners();
    // if-zero only needs the branch it selects
    if (outer.kind() == Prf::Kind::IfZero) {
      Val c = run(gs[0], a);
      return run(*c == 0 ? gs[1] : gs[2], a);
    }
    std::vector<Val> vals;
    vals.reserve(gs.size());
    for (const Prf& g : gs) vals.push_back(run(g, a));
    return run(outer, vals);
  }

  void tick() {
    ++iterations_;
    if (stats_) ++stats_->iterations;
    if (options_.max_iterations && iterations_ > options_.max_iterations)
      throw EvalBudgetExceeded("evaluation exceeded " + std::to_string(options_.max_iterations) + " recursion steps");
  }

  EvalOptions options_;
  EvalStats* stats_;
  std::uint64_t iterations_ = 0;
};

}  // namespace

Nat eval(const Prf& p, std::span<const Nat> args, const EvalOptions& options, EvalStats* stats) {
  if (args.size() != p.arity())
    throw ArityError("eval: program of arity " + std::to_string(p.arity()) + " applied to " +
                     std::to_string(args.size()) + " arguments");
  std::vector<Val> vals;
  vals.reserve(args.size());
  for (const Nat& x : args) {
    if (x < 0) throw std::invalid_argument("eval: negative argument");
    vals.push_back(make(x));
  }
  Evaluator ev(options, stats);
  return *ev.run(p, vals);
}

Nat eval(const Prf& p, std::initializer_list<Nat> args) {
  return eval(p, std::span<const Nat>(args.begin(), args.size()));
}

RecursionTrace trace_recursion(const Prf& primrec, std::span<const Nat> xs, const Nat& count,
                               const EvalOptions& options) {
  if (primrec.kind() != Prf::Kind::PrimRec) throw std::invalid_argument("trace_recursion: not a primrec program");
  if (xs.size() + 1 != primrec.arity()) throw ArityError("trace_recursion: wrong number of parameters");
  std::vector<Val> vals;
  for (const Nat& x : xs) vals.push_back(make(x));
  vals.push_back(make(count));
  RecursionTrace trace;
  Evaluator ev(options, nullptr);
  ev.recurse(primrec, vals, &trace);
  return trace;
}

std::string to_sexpr(const Prf& p) {
  switch (p.kind()) {
    case Prf::Kind::Proj: return "(proj " + std::to_string(p.proj_index()) + " " + std::to_string(p.arity()) + ")";
    case Prf::Kind::Const: return "(const " + to_decimal(p.const_value()) + " " + std::to_string(p.arity()) + ")";
    case Prf::Kind::Compose: {
      std::string s = "(compose " + to_sexpr(p.outer());
      for (const Prf& g : p.inners()) s += " " + to_sexpr(g);
      return s + ")";
    }
    case Prf::Kind::PrimRec: return "(primrec " + to_sexpr(p.base()) + " " + to_sexpr(p.step()) + ")";
    default: return kind_name(p.kind());
  }
}

}  // namespace fixpoint
