#pragma once

// Library of primitive recursive programs that operate on Goedel codes.
//
// The centrepiece is `diag`, the diagonal function: for the code n of a
// formula with at most x0 free it returns the code of that formula with
// numeral(n) put in place of the free occurrences of x0, and 0 for every
// other n. It is built from a single left-to-right scan of the code that
// checks well-formedness, tracks quantifier scopes and writes the substituted
// token stream.
//
// Every program has an independent native counterpart in `native::`.

#include "fixpoint/prf.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fixpoint {

struct StdlibEntry {
  std::string name;
  Prf program;
  std::string summary;
};

/// All library programs, in dependency order.
const std::vector<StdlibEntry>& stdlib();
/// Throws std::out_of_range for unknown names.
const Prf& stdlib_program(std::string_view name);

namespace native {
Nat pow32_above(const Nat& x);
Nat digit_length(const Nat& x);
Nat digit_at(const Nat& x, const Nat& i);
Nat concat(const Nat& a, const Nat& b);
Nat numeral_code(const Nat& m);
Nat pop_markers(const Nat& stack);
Nat find_group(const Nat& stack, const Nat& pattern, const Nat& window);
Nat subst_code(const Nat& c, const Nat& m);
Nat in_n_code(const Nat& c);
Nat diag(const Nat& n);
Nat mul_via_primrec(const Nat& x, const Nat& k);
Nat factorial(const Nat& k);

/// Dispatch by library name; args must match the program's arity.
Nat call(std::string_view name, std::span<const Nat> args);
}  // namespace native

}  // namespace fixpoint
