#pragma once

// Goedel numbering of formulas.
//
// A formula is serialised in prefix order, one token per syntax node. Each
// token is a base-32 digit in 1..31 (0 is never used), and the code is the
// value of the digit string read most significant first. Variable indices are
// written after the variable marker (or after a quantifier token) as digit
// tokens in bijective base ten, so x0 is the bare marker, x1..x10 take one
// digit token, x11 is "1 1", and so on. The table below is frozen in
// data/token_table.v1.txt.

#include "fixpoint/kernel.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace fixpoint {

namespace token {
inline constexpr std::uint8_t kEq = 1;
inline constexpr std::uint8_t kNot = 2;
inline constexpr std::uint8_t kAnd = 3;
inline constexpr std::uint8_t kOr = 4;
inline constexpr std::uint8_t kImp = 5;
inline constexpr std::uint8_t kIff = 6;
inline constexpr std::uint8_t kForall = 7;
inline constexpr std::uint8_t kExists = 8;
inline constexpr std::uint8_t kZero = 9;
inline constexpr std::uint8_t kSucc = 10;
inline constexpr std::uint8_t kAdd = 11;
inline constexpr std::uint8_t kMul = 12;
inline constexpr std::uint8_t kVar = 13;
/// Digit tokens: bijective decimal digit d in 1..10 is token kDigitBase + d.
inline constexpr std::uint8_t kDigitBase = 13;
inline constexpr std::uint8_t kFirstDigit = 14;
inline constexpr std::uint8_t kLastDigit = 23;
inline constexpr unsigned kBase = 32;

constexpr bool is_digit(std::uint8_t t) { return t >= kFirstDigit && t <= kLastDigit; }

/// (digit value, mnemonic) rows of the published table.
struct Entry {
  std::uint8_t digit;
  std::string_view name;
};
extern const std::array<Entry, 23> kTable;
}  // namespace token

class GodelCode {
 public:
  explicit GodelCode(Nat v) : value_(std::move(v)) {}
  const Nat& value() const { return value_; }
  friend bool operator==(const GodelCode&, const GodelCode&) = default;

 private:
  Nat value_;
};

using TokenString = std::vector<std::uint8_t>;

TokenString tokens(const Formula& f);
TokenString tokens(const Term& t);
void append_index_digits(VarIndex i, TokenString& out);

Nat code_of_tokens(const TokenString& ts);
/// Base-32 digits of n, most significant first; empty for 0.
TokenString digits_of(const Nat& n);

GodelCode encode(const Formula& f);

/// Inverse of encode. nullopt means "not a code": the digit string is not the
/// serialisation of any formula (or names a variable index beyond 64 bits).
std::optional<Formula> decode(const Nat& code);

/// Membership in N, the set of codes of formulas with at most x0 free.
bool in_n(const Nat& code);

/// Code of the token string of numeral(n).term, i.e. the fragment that
/// replaces x0 when a formula is instantiated at n.
Nat numeral_fragment_code(const Nat& n);

}  // namespace fixpoint
