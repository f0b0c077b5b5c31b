#include "fixpoint/env.hpp"

#include <string>
#include <vector>

namespace fixpoint {

UnboundVariable::UnboundVariable(VarIndex i)
    : std::out_of_range("unbound variable x" + std::to_string(i)), index(i) {}

const Nat& Env::at(VarIndex i) const {
  auto it = map_.find(i);
  if (it == map_.end()) throw UnboundVariable(i);
  return it->second;
}

Env::Binding::Binding(Env& env, VarIndex i, Nat v) : env_(env), index_(i) {
  auto it = env.map_.find(i);
  if (it != env.map_.end()) {
    saved_ = std::move(it->second);
    it->second = std::move(v);
  } else {
    env.map_.emplace(i, std::move(v));
  }
}

Env::Binding::~Binding() {
  if (saved_)
    env_.map_[index_] = std::move(*saved_);
  else
    env_.map_.erase(index_);
}

namespace {

bool is_two(const Term& t) {
  return t.kind() == Term::Kind::Succ && t.lhs().kind() == Term::Kind::Succ &&
         t.lhs().lhs().kind() == Term::Kind::Zero;
}

// Value of a chain of successors and doublings Mul(S(S(0)), .) over a base,
// in time linear in the chain length: each successor contributes 2^e where e
// counts the doublings above it.
Nat eval_spine(const Term& t, const Env& env) {
  std::vector<std::uint64_t> count;
  std::uint64_t doublings = 0;
  std::vector<std::uint64_t> succ_at;  // doubling depth of each successor, outermost first
  const Term* cur = &t;
  for (;;) {
    if (cur->kind() == Term::Kind::Succ) {
      succ_at.push_back(doublings);
      cur = &cur->lhs();
    } else if (cur->kind() == Term::Kind::Mul && is_two(cur->lhs())) {
      ++doublings;
      cur = &cur->rhs();
    } else {
      break;
    }
  }
  Nat base = eval_term(*cur, env);
  // a successor with d doublings above it adds 2^d
  count.assign(doublings + 1, 0);
  for (std::uint64_t d : succ_at) ++count[d];
  std::vector<std::uint64_t> words((doublings + 64) / 64 + 2, 0);
  std::uint64_t carry = 0;
  for (std::uint64_t e = 0; e < count.size() || carry; ++e) {
    std::uint64_t v = carry + (e < count.size() ? count[e] : 0);
    if (v & 1) {
      if (e / 64 >= words.size()) words.resize(e / 64 + 1, 0);
      words[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    carry = v >> 1;
  }
  Nat sum;
  mpz_import(sum.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  if (base != 0) {
    mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), doublings);
    sum += base;
  }
  return sum;
}

}  // namespace

Nat eval_term(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return env.at(t.var_index());
    case Term::Kind::Succ: return eval_spine(t, env);
    case Term::Kind::Add: return eval_term(t.lhs(), env) + eval_term(t.rhs(), env);
    case Term::Kind::Mul:
      if (is_two(t.lhs())) return eval_spine(t, env);
      return eval_term(t.lhs(), env) * eval_term(t.rhs(), env);
  }
  return 0;
}

}  // namespace fixpoint
