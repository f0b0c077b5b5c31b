#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fixpoint {

/// Arbitrary-precision natural number. Negative values never escape the
/// public API; callers treat every Nat as an element of the naturals.
using Nat = mpz_class;

std::string to_decimal(const Nat& n);
std::string to_hex(const Nat& n);
std::optional<Nat> parse_decimal(std::string_view text);
std::size_t decimal_digits(const Nat& n);

/// Truncated subtraction max(a - b, 0).
inline Nat monus(const Nat& a, const Nat& b) { return a > b ? Nat(a - b) : Nat(0); }

/// Floor division and remainder with the total conventions x/0 = 0 and x mod 0 = x.
Nat div_total(const Nat& x, const Nat& y);
Nat mod_total(const Nat& x, const Nat& y);

inline std::uint64_t to_u64(const Nat& n) {
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}
inline bool fits_u64(const Nat& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 63 && n >= 0; }

}  // namespace fixpoint
