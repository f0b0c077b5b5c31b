#include "fixpoint/nat.hpp"

#include <cctype>

namespace fixpoint {

std::string to_decimal(const Nat& n) { return n.get_str(10); }
std::string to_hex(const Nat& n) { return n.get_str(16); }

std::optional<Nat> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return Nat(std::string(text), 10);
}

std::size_t decimal_digits(const Nat& n) {
  if (n == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t d = mpz_sizeinbase(n.get_mpz_t(), 10);
  Nat p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, d - 1);
  return n < p ? d - 1 : d;
}

Nat div_total(const Nat& x, const Nat& y) {
  if (y == 0) return 0;
  Nat q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

Nat mod_total(const Nat& x, const Nat& y) {
  if (y == 0) return x;
  Nat r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

}  // namespace fixpoint
