#pragma once

// Witness values for existential quantifiers, addressed by position.
//
// A position is the list of steps from the root: 0 into the operand of a
// negation, the body of a quantifier or the left operand of a binary
// connective, 1 into the right operand. Below a universal quantifier the step
// is the value the bound variable takes, so one existential inside a bounded
// universal gets one entry per instance.

#include "fixpoint/nat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fixpoint {

using CertPath = std::vector<std::uint64_t>;

class Certificate {
 public:
  const Nat* find(const CertPath& path) const;
  void set(CertPath path, Nat value) { entries_[std::move(path)] = std::move(value); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<CertPath, Nat>& entries() const { return entries_; }

 private:
  std::map<CertPath, Nat> entries_;
};

/// {"certificate":[{"path":[0,1],"value":"42"}, ...]}
std::string to_json(const Certificate& cert);
/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(std::string_view text);

std::string path_to_string(const CertPath& path);

}  // namespace fixpoint
