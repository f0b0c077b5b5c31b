#include "fixpoint/grelling.hpp"

#include <cctype>

namespace fixpoint::grelling {

namespace {

constexpr std::size_t npos = std::string_view::npos;

// Index just past the quoted segment opening at i, or npos if it never closes.
std::size_t quoted_end(std::string_view t, std::size_t i) {
  for (std::size_t j = i + 1; j < t.size(); ++j) {
    if (t[j] != '\'') continue;
    if (j + 1 < t.size() && t[j + 1] == '\'') {
      ++j;
      continue;
    }
    return j + 1;
  }
  return npos;
}

std::string unquote(std::string_view segment) {
  std::string out;
  for (std::size_t i = 1; i + 1 < segment.size(); ++i) {
    out += segment[i];
    if (segment[i] == '\'') ++i;
  }
  return out;
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool marker_at(std::string_view t, std::size_t i) {
  return t[i] == 'x' && (i == 0 || !word_char(t[i - 1])) && (i + 1 == t.size() || !word_char(t[i + 1]));
}

// Calls f(i) for each unquoted marker position.
template <typename F>
void for_each_marker(std::string_view t, F f) {
  for (std::size_t i = 0; i < t.size();) {
    if (t[i] == '\'') {
      std::size_t end = quoted_end(t, i);
      if (end == npos) throw MarkerError("unterminated quotation in: " + std::string(t));
      i = end;
      continue;
    }
    if (marker_at(t, i)) f(i);
    ++i;
  }
}

}  // namespace

std::size_t count_markers(std::string_view text) {
  std::size_t n = 0;
  for_each_marker(text, [&](std::size_t) { ++n; });
  return n;
}

OpenSentence::OpenSentence(std::string text) : text_(std::move(text)) {
  std::size_t n = count_markers(text_);
  if (n != 1) throw MarkerError("expected one unquoted x, found " + std::to_string(n) + " in: " + text_);
}

std::string name(std::string_view o) {
  std::string out = "'";
  for (char c : o) {
    out += c;
    if (c == '\'') out += '\'';
  }
  out += '\'';
  return out;
}

Sentence apply(const OpenSentence& o, std::string_view q) {
  const std::string& t = o.text();
  std::size_t at = npos;
  for_each_marker(t, [&](std::size_t i) { at = i; });
  return Sentence{t.substr(0, at) + std::string(q) + t.substr(at + 1)};
}

OpenSentence build_s(std::string_view p) {
  if (p.empty()) throw std::invalid_argument("build_s: empty property phrase");
  return OpenSentence(std::string(kPrefix) + "x" + std::string(kMiddle) + std::string(p));
}

Sentence self_sentence(std::string_view p) {
  OpenSentence s = build_s(p);
  return apply(s, name(s.text()));
}

std::optional<Sentence> described_substitution(std::string_view sentence) {
  if (sentence.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  const std::size_t open = kPrefix.size();
  if (open >= sentence.size() || sentence[open] != '\'') return std::nullopt;
  const std::size_t close = quoted_end(sentence, open);
  if (close == npos) return std::nullopt;
  std::string_view rest = sentence.substr(close);
  if (rest.substr(0, kMiddle.size()) != kMiddle || rest.size() == kMiddle.size()) return std::nullopt;
  std::string inner = unquote(sentence.substr(open, close - open));
  try {
    OpenSentence o(inner);
    return apply(o, name(inner));
  } catch (const MarkerError&) {
    return std::nullopt;
  }
}

}  // namespace fixpoint::grelling
