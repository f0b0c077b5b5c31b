#pragma once

// Abstract syntax of first-order arithmetic over the signature {0, S, +, *, =}.
//
// Terms and formulas are immutable trees held by shared pointers, so copies are
// cheap and unchanged subtrees are shared between a formula and the results of
// substituting into it. Variables are x0, x1, ... identified by their index.

#include "fixpoint/nat.hpp"

#include <cstdint>
#include <memory>
#include <set>

namespace fixpoint {

using VarIndex = std::uint64_t;

class Term {
 public:
  enum class Kind : std::uint8_t { Zero, Succ, Add, Mul, Var };

  static Term zero();
  static Term succ(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term var(VarIndex i);

  Kind kind() const;
  VarIndex var_index() const;
  /// Operand of Succ, left operand of Add/Mul.
  const Term& lhs() const;
  const Term& rhs() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend class Formula;
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  VarIndex index = 0;
  Term lhs, rhs;
};
inline Term::Kind Term::kind() const { return node_->kind; }
inline VarIndex Term::var_index() const { return node_->index; }
inline const Term& Term::lhs() const { return node_->lhs; }
inline const Term& Term::rhs() const { return node_->rhs; }

class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, Not, And, Or, Imp, Iff, Forall, Exists };

  static Formula eq(Term a, Term b);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula forall(VarIndex i, Formula body);
  static Formula exists(VarIndex i, Formula body);
  static Formula binary(Kind k, Formula a, Formula b);

  Kind kind() const;
  bool is_binary() const;
  bool is_quantifier() const;
  /// Bound variable of a quantifier.
  VarIndex var_index() const;
  const Term& lhs_term() const;
  const Term& rhs_term() const;
  /// Operand of Not / body of a quantifier / left operand of a binary connective.
  const Formula& left() const;
  const Formula& right() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  VarIndex index = 0;
  Term lt, rt;
  Formula left, right;
};
inline Formula::Kind Formula::kind() const { return node_->kind; }
inline VarIndex Formula::var_index() const { return node_->index; }
inline bool Formula::is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
inline const Term& Formula::lhs_term() const { return node_->lt; }
inline const Term& Formula::rhs_term() const { return node_->rt; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }

/// A closed term together with the natural number it denotes.
struct Numeral {
  Nat value;
  Term term;
};

bool is_closed(const Term& t);
std::set<VarIndex> free_vars(const Term& t);
std::set<VarIndex> free_vars(const Formula& f);
bool occurs_free(const Formula& f, VarIndex i);

/// f is in Fm_n iff every free variable of f is among x0..x(n-1).
bool in_fm(const Formula& f, std::uint64_t n);

/// Dyadic numeral: 0, S(0), 2*num(k) for 2k > 0, S(num(2k)) for odd values.
Numeral numeral(const Nat& n);

/// Replace every free occurrence of x_i by the closed term t. Throws
/// std::invalid_argument when t is not closed. Subtrees without a free
/// occurrence are shared with the input.
Formula subst_closed(const Formula& f, VarIndex i, const Term& t);

/// Rename free and bound variables through `map`. Used for hygiene when
/// formulas are combined; the map must be injective on the indices present.
template <class Map>
Term rename_vars(const Term& t, const Map& map);

std::size_t node_count(const Term& t);
std::size_t node_count(const Formula& f);
VarIndex max_var_index(const Formula& f);

/// Standard value of a closed term.
Nat value_of_closed(const Term& t);

template <class Map>
Term rename_vars(const Term& t, const Map& map) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return Term::var(map(t.var_index()));
    case Term::Kind::Succ: return Term::succ(rename_vars(t.lhs(), map));
    case Term::Kind::Add: return Term::add(rename_vars(t.lhs(), map), rename_vars(t.rhs(), map));
    case Term::Kind::Mul: return Term::mul(rename_vars(t.lhs(), map), rename_vars(t.rhs(), map));
  }
  return t;
}

}  // namespace fixpoint
