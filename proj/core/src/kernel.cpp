#include "fixpoint/kernel.hpp"

#include <stdexcept>

namespace fixpoint {

Term Term::zero() {
  static const Term z{std::make_shared<const Node>(Node{Kind::Zero, 0, {}, {}})};
  return z;
}
Term Term::succ(Term t) { return Term{std::make_shared<const Node>(Node{Kind::Succ, 0, std::move(t), {}})}; }
Term Term::add(Term a, Term b) {
  return Term{std::make_shared<const Node>(Node{Kind::Add, 0, std::move(a), std::move(b)})};
}
Term Term::mul(Term a, Term b) {
  return Term{std::make_shared<const Node>(Node{Kind::Mul, 0, std::move(a), std::move(b)})};
}
Term Term::var(VarIndex i) { return Term{std::make_shared<const Node>(Node{Kind::Var, i, {}, {}})}; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a.var_index() == b.var_index();
    case Term::Kind::Succ: return a.lhs() == b.lhs();
    case Term::Kind::Add:
    case Term::Kind::Mul: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

Formula Formula::eq(Term a, Term b) {
  return Formula{std::make_shared<const Node>(Node{Kind::Eq, 0, std::move(a), std::move(b), {}, {}})};
}
Formula Formula::negation(Formula f) {
  return Formula{std::make_shared<const Node>(Node{Kind::Not, 0, {}, {}, std::move(f), {}})};
}
Formula Formula::binary(Kind k, Formula a, Formula b) {
  if (k != Kind::And && k != Kind::Or && k != Kind::Imp && k != Kind::Iff)
    throw std::invalid_argument("Formula::binary: not a binary connective");
  return Formula{std::make_shared<const Node>(Node{k, 0, {}, {}, std::move(a), std::move(b)})};
}
Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
Formula Formula::iff(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }
Formula Formula::forall(VarIndex i, Formula body) {
  return Formula{std::make_shared<const Node>(Node{Kind::Forall, i, {}, {}, std::move(body), {}})};
}
Formula Formula::exists(VarIndex i, Formula body) {
  return Formula{std::make_shared<const Node>(Node{Kind::Exists, i, {}, {}, std::move(body), {}})};
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Iff: return true;
    default: return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Eq: return a.lhs_term() == b.lhs_term() && a.rhs_term() == b.rhs_term();
    case Formula::Kind::Not: return a.left() == b.left();
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return a.var_index() == b.var_index() && a.left() == b.left();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

void collect(const Term& t, std::set<VarIndex>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var: out.insert(t.var_index()); return;
    case Term::Kind::Succ: collect(t.lhs(), out); return;
    default: collect(t.lhs(), out); collect(t.rhs(), out); return;
  }
}

void collect(const Formula& f, std::multiset<VarIndex>& bound, std::set<VarIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      std::set<VarIndex> vs;
      collect(f.lhs_term(), vs);
      collect(f.rhs_term(), vs);
      for (VarIndex v : vs)
        if (!bound.contains(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not: collect(f.left(), bound, out); return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto it = bound.insert(f.var_index());
      collect(f.left(), bound, out);
      bound.erase(it);
      return;
    }
    default:
      collect(f.left(), bound, out);
      collect(f.right(), bound, out);
      return;
  }
}

bool term_has_var(const Term& t, VarIndex i) {
  switch (t.kind()) {
    case Term::Kind::Zero: return false;
    case Term::Kind::Var: return t.var_index() == i;
    case Term::Kind::Succ: return term_has_var(t.lhs(), i);
    default: return term_has_var(t.lhs(), i) || term_has_var(t.rhs(), i);
  }
}

Term subst_term(const Term& t, VarIndex i, const Term& r) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return t.var_index() == i ? r : t;
    case Term::Kind::Succ: {
      Term a = subst_term(t.lhs(), i, r);
      return a.identity() == t.lhs().identity() ? t : Term::succ(std::move(a));
    }
    default: {
      Term a = subst_term(t.lhs(), i, r);
      Term b = subst_term(t.rhs(), i, r);
      if (a.identity() == t.lhs().identity() && b.identity() == t.rhs().identity()) return t;
      return t.kind() == Term::Kind::Add ? Term::add(std::move(a), std::move(b)) : Term::mul(std::move(a), std::move(b));
    }
  }
}

Formula subst_formula(const Formula& f, VarIndex i, const Term& t) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      Term a = subst_term(f.lhs_term(), i, t);
      Term b = subst_term(f.rhs_term(), i, t);
      if (a.identity() == f.lhs_term().identity() && b.identity() == f.rhs_term().identity()) return f;
      return Formula::eq(std::move(a), std::move(b));
    }
    case Formula::Kind::Not: {
      Formula a = subst_formula(f.left(), i, t);
      return a.identity() == f.left().identity() ? f : Formula::negation(std::move(a));
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f.var_index() == i) return f;
      Formula a = subst_formula(f.left(), i, t);
      if (a.identity() == f.left().identity()) return f;
      return f.kind() == Formula::Kind::Forall ? Formula::forall(f.var_index(), std::move(a))
                                               : Formula::exists(f.var_index(), std::move(a));
    }
    default: {
      Formula a = subst_formula(f.left(), i, t);
      Formula b = subst_formula(f.right(), i, t);
      if (a.identity() == f.left().identity() && b.identity() == f.right().identity()) return f;
      return Formula::binary(f.kind(), std::move(a), std::move(b));
    }
  }
}

}  // namespace

bool is_closed(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return false;
    case Term::Kind::Succ: return is_closed(t.lhs());
    default: return is_closed(t.lhs()) && is_closed(t.rhs());
  }
}

std::set<VarIndex> free_vars(const Term& t) {
  std::set<VarIndex> out;
  collect(t, out);
  return out;
}

std::set<VarIndex> free_vars(const Formula& f) {
  std::multiset<VarIndex> bound;
  std::set<VarIndex> out;
  collect(f, bound, out);
  return out;
}

bool occurs_free(const Formula& f, VarIndex i) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return term_has_var(f.lhs_term(), i) || term_has_var(f.rhs_term(), i);
    case Formula::Kind::Not: return occurs_free(f.left(), i);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return f.var_index() != i && occurs_free(f.left(), i);
    default: return occurs_free(f.left(), i) || occurs_free(f.right(), i);
  }
}

bool in_fm(const Formula& f, std::uint64_t n) {
  for (VarIndex v : free_vars(f))
    if (v >= n) return false;
  return true;
}

Numeral numeral(const Nat& n) {
  if (n < 0) throw std::invalid_argument("numeral: negative value");
  // Bits from most significant to least; build inside-out.
  const Term two = Term::succ(Term::succ(Term::zero()));
  Term t = Term::zero();
  const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  bool first = true;
  for (std::size_t k = bits; k-- > 0;) {
    if (!first) t = Term::mul(two, t);
    first = false;
    if (mpz_tstbit(n.get_mpz_t(), k)) t = Term::succ(t);
  }
  return Numeral{n, t};
}

Formula subst_closed(const Formula& f, VarIndex i, const Term& t) {
  if (!is_closed(t)) throw std::invalid_argument("subst_closed: substituted term is not closed");
  return subst_formula(f, i, t);
}

std::size_t node_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::Var: return 1;
    case Term::Kind::Succ: return 1 + node_count(t.lhs());
    default: return 1 + node_count(t.lhs()) + node_count(t.rhs());
  }
}

std::size_t node_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return 1 + node_count(f.lhs_term()) + node_count(f.rhs_term());
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 1 + node_count(f.left());
    default: return 1 + node_count(f.left()) + node_count(f.right());
  }
}

namespace {
VarIndex max_in(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return t.var_index();
    case Term::Kind::Succ: return max_in(t.lhs());
    default: return std::max(max_in(t.lhs()), max_in(t.rhs()));
  }
}
}  // namespace

VarIndex max_var_index(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return std::max(max_in(f.lhs_term()), max_in(f.rhs_term()));
    case Formula::Kind::Not: return max_var_index(f.left());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return std::max(f.var_index(), max_var_index(f.left()));
    default: return std::max(max_var_index(f.left()), max_var_index(f.right()));
  }
}

Nat value_of_closed(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: throw std::invalid_argument("value_of_closed: term has a variable");
    case Term::Kind::Succ: return value_of_closed(t.lhs()) + 1;
    case Term::Kind::Add: return value_of_closed(t.lhs()) + value_of_closed(t.rhs());
    case Term::Kind::Mul: return value_of_closed(t.lhs()) * value_of_closed(t.rhs());
  }
  return 0;
}

}  // namespace fixpoint
