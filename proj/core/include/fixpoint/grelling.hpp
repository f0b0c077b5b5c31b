#pragma once

// The ordinary-language version of the fixed point.
//
// Quoting wraps a phrase in single quotes and doubles every quote inside it.
// A quoted segment runs from an opening quote to the next quote that is not
// doubled. The variable marker is the word "x" outside every quoted segment.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fixpoint::grelling {

struct MarkerError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Text with exactly one unquoted marker.
class OpenSentence {
 public:
  /// Throws MarkerError unless text has exactly one unquoted marker.
  explicit OpenSentence(std::string text);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

struct Sentence {
  std::string text;
  bool operator==(const Sentence&) const = default;
};

std::string name(std::string_view o);

/// Number of unquoted markers. Throws MarkerError on an unterminated quote.
std::size_t count_markers(std::string_view text);

Sentence apply(const OpenSentence& o, std::string_view q);

inline constexpr std::string_view kPrefix = "the sentence obtained by substituting the name of ";
inline constexpr std::string_view kMiddle = " for the variable in it has property ";

/// "the sentence obtained by substituting the name of x for the variable in
/// it has property p". Throws std::invalid_argument on empty p and
/// MarkerError when p holds an unquoted x or an unterminated quotation.
OpenSentence build_s(std::string_view p);

/// s('s') for s = build_s(p).
Sentence self_sentence(std::string_view p);

/// For a sentence of the form  prefix 'o' middle p, the substitution it
/// describes: o with the name of o for its marker. Nothing when the sentence
/// is not of that form or o is not an open sentence.
std::optional<Sentence> described_substitution(std::string_view sentence);

}  // namespace fixpoint::grelling
