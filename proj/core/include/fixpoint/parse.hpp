#pragma once

#include "fixpoint/kernel.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace fixpoint {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at byte " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Notation { Unicode, Ascii };

/// Canonical rendering: binary term operators and binary connectives are
/// always parenthesised, so parse(print(f)) == f structurally.
std::string print(const Term& t);
std::string print(const Formula& f, Notation notation = Notation::Unicode);

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

}  // namespace fixpoint
