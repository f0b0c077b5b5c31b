#pragma once

// Variable assignments and term evaluation in the standard model.

#include "fixpoint/kernel.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace fixpoint {

class UnboundVariable : public std::out_of_range {
 public:
  explicit UnboundVariable(VarIndex i);
  VarIndex index;
};

class Env {
 public:
  Env() = default;
  Env(std::initializer_list<std::pair<const VarIndex, Nat>> init) : map_(init) {}

  const Nat& at(VarIndex i) const;
  bool contains(VarIndex i) const { return map_.count(i) != 0; }
  void set(VarIndex i, Nat v) { map_[i] = std::move(v); }
  std::size_t size() const { return map_.size(); }

  /// Binds i for the lifetime of the guard, restoring any previous value.
  class Binding {
   public:
    Binding(Env& env, VarIndex i, Nat v);
    ~Binding();
    Binding(const Binding&) = delete;
    Binding& operator=(const Binding&) = delete;

   private:
    Env& env_;
    VarIndex index_;
    std::optional<Nat> saved_;
  };

 private:
  std::unordered_map<VarIndex, Nat> map_;
};

/// Standard value of t; throws UnboundVariable.
Nat eval_term(const Term& t, const Env& env);

}  // namespace fixpoint
