#pragma once

// A small language of primitive recursive functions.
//
// Programs are immutable trees. Besides the Kleene basis (zero, successor,
// projections, composition, primitive recursion) there are constants and the
// arithmetic primitives add, mul, truncated subtraction, if-zero, div and
// mod, all total: x / 0 = 0 and x mod 0 = x.
//
// PrimRec(base, step) has arity n + 1 for base of arity n and step of arity
// n + 2, with the recursion counter as the last argument:
//   h(xs, 0)     = base(xs)
//   h(xs, k + 1) = step(xs, k, h(xs, k))
// When the step never reads its counter argument, h iterates a fixed map and
// evaluation stops as soon as the value stops changing.

#include "fixpoint/nat.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixpoint {

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EvalBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Prf {
 public:
  enum class Kind : std::uint8_t { Zero, Succ, Proj, Const, Compose, PrimRec, Add, Mul, TruncSub, IfZero, Div, Mod };

  static Prf zero();
  static Prf succ();
  static Prf proj(std::size_t i, std::size_t arity);
  static Prf constant(Nat value, std::size_t arity);
  static Prf compose(Prf outer, std::vector<Prf> inners);
  static Prf primrec(Prf base, Prf step);
  static Prf add();
  static Prf mul();
  static Prf truncsub();
  static Prf ifzero();
  static Prf div();
  static Prf mod();

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->arity; }
  std::size_t proj_index() const { return node_->index; }
  const Nat& const_value() const { return node_->value; }
  const Prf& outer() const { return node_->children.front(); }
  std::span<const Prf> inners() const { return {node_->children.data() + 1, node_->children.size() - 1}; }
  const Prf& base() const { return node_->children[0]; }
  const Prf& step() const { return node_->children[1]; }

  /// True when the program provably never reads argument j.
  bool ignores_arg(std::size_t j) const;
  /// PrimRec whose step ignores the recursion counter.
  bool is_iteration() const { return kind() == Kind::PrimRec && node_->iteration; }

  const void* identity() const { return node_.get(); }
  std::size_t node_count() const;

  friend bool operator==(const Prf& a, const Prf& b);

 private:
  struct Node {
    Kind kind;
    std::size_t arity = 0;
    std::size_t index = 0;
    Nat value;
    std::vector<Prf> children;
    bool iteration = false;
  };
  explicit Prf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct EvalStats {
  std::uint64_t iterations = 0;      // primitive recursion steps taken
  std::uint64_t longest_loop = 0;    // most steps in one recursion
  std::uint64_t fixed_point_exits = 0;
};

struct EvalOptions {
  /// Upper bound on the total number of recursion steps; 0 means unlimited.
  std::uint64_t max_iterations = 0;
};

Nat eval(const Prf& p, std::span<const Nat> args, const EvalOptions& options = {}, EvalStats* stats = nullptr);
Nat eval(const Prf& p, std::initializer_list<Nat> args);

/// The values h(xs, 0), h(xs, 1), ... of a PrimRec program, stopping at
/// `count` or, for iterations, at the first fixed point.
struct RecursionTrace {
  std::vector<Nat> values;
  /// Index of the last value; equals count unless a fixed point was reached.
  std::uint64_t last = 0;
  bool fixed_point = false;
};
RecursionTrace trace_recursion(const Prf& primrec, std::span<const Nat> xs, const Nat& count,
                               const EvalOptions& options = {});

/// S-expression form: zero succ add mul tsub ifzero div mod (proj i n)
/// (const c n) (compose outer inner...) (primrec base step).
std::string to_sexpr(const Prf& p);
Prf parse_sexpr(const std::string& text);

}  // namespace fixpoint
