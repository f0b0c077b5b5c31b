#include "fixpoint/encode.hpp"

#include <algorithm>
#include <string>

namespace fixpoint {

namespace token {
const std::array<Entry, 23> kTable{{
    {kEq, "="},      {kNot, "not"},   {kAnd, "and"},    {kOr, "or"},     {kImp, "imp"},   {kIff, "iff"},
    {kForall, "forall"}, {kExists, "exists"}, {kZero, "0"}, {kSucc, "S"}, {kAdd, "+"},     {kMul, "*"},
    {kVar, "x"},     {14, "d1"},      {15, "d2"},       {16, "d3"},      {17, "d4"},      {18, "d5"},
    {19, "d6"},      {20, "d7"},      {21, "d8"},       {22, "d9"},      {23, "d10"},
}};
}  // namespace token

void append_index_digits(VarIndex i, TokenString& out) {
  std::size_t start = out.size();
  while (i > 0) {
    VarIndex d = (i - 1) % 10 + 1;
    out.push_back(static_cast<std::uint8_t>(token::kDigitBase + d));
    i = (i - d) / 10;
  }
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
}

namespace {

void emit(const Term& t, TokenString& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out.push_back(token::kZero); return;
    case Term::Kind::Var:
      out.push_back(token::kVar);
      append_index_digits(t.var_index(), out);
      return;
    case Term::Kind::Succ:
      out.push_back(token::kSucc);
      emit(t.lhs(), out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out.push_back(t.kind() == Term::Kind::Add ? token::kAdd : token::kMul);
      emit(t.lhs(), out);
      emit(t.rhs(), out);
      return;
  }
}

std::uint8_t connective_token(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return token::kAnd;
    case Formula::Kind::Or: return token::kOr;
    case Formula::Kind::Imp: return token::kImp;
    default: return token::kIff;
  }
}

void emit(const Formula& f, TokenString& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
      out.push_back(token::kEq);
      emit(f.lhs_term(), out);
      emit(f.rhs_term(), out);
      return;
    case K::Not:
      out.push_back(token::kNot);
      emit(f.left(), out);
      return;
    case K::Forall:
    case K::Exists:
      out.push_back(f.kind() == K::Forall ? token::kForall : token::kExists);
      append_index_digits(f.var_index(), out);
      emit(f.left(), out);
      return;
    default:
      out.push_back(connective_token(f.kind()));
      emit(f.left(), out);
      emit(f.right(), out);
      return;
  }
}

struct Decoder {
  const TokenString& ts;
  std::size_t pos = 0;
  bool ok = true;

  std::optional<VarIndex> index() {
    VarIndex v = 0;
    while (pos < ts.size() && token::is_digit(ts[pos])) {
      VarIndex d = ts[pos] - token::kDigitBase;
      if (v > (UINT64_MAX - d) / 10) return std::nullopt;
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  std::optional<Term> term() {
    if (pos >= ts.size()) return std::nullopt;
    switch (ts[pos++]) {
      case token::kZero: return Term::zero();
      case token::kVar: {
        auto v = index();
        if (!v) return std::nullopt;
        return Term::var(*v);
      }
      case token::kSucc: {
        auto a = term();
        if (!a) return std::nullopt;
        return Term::succ(*a);
      }
      case token::kAdd:
      case token::kMul: {
        bool add = ts[pos - 1] == token::kAdd;
        auto a = term();
        if (!a) return std::nullopt;
        auto b = term();
        if (!b) return std::nullopt;
        return add ? Term::add(*a, *b) : Term::mul(*a, *b);
      }
      default: return std::nullopt;
    }
  }

  std::optional<Formula> formula() {
    if (pos >= ts.size()) return std::nullopt;
    const std::uint8_t t = ts[pos++];
    switch (t) {
      case token::kEq: {
        auto a = term();
        if (!a) return std::nullopt;
        auto b = term();
        if (!b) return std::nullopt;
        return Formula::eq(*a, *b);
      }
      case token::kNot: {
        auto a = formula();
        if (!a) return std::nullopt;
        return Formula::negation(*a);
      }
      case token::kAnd:
      case token::kOr:
      case token::kImp:
      case token::kIff: {
        auto a = formula();
        if (!a) return std::nullopt;
        auto b = formula();
        if (!b) return std::nullopt;
        auto k = t == token::kAnd  ? Formula::Kind::And
                 : t == token::kOr ? Formula::Kind::Or
                 : t == token::kImp ? Formula::Kind::Imp
                                    : Formula::Kind::Iff;
        return Formula::binary(k, *a, *b);
      }
      case token::kForall:
      case token::kExists: {
        auto v = index();
        if (!v) return std::nullopt;
        auto body = formula();
        if (!body) return std::nullopt;
        return t == token::kForall ? Formula::forall(*v, *body) : Formula::exists(*v, *body);
      }
      default: return std::nullopt;
    }
  }
};

}  // namespace

TokenString tokens(const Formula& f) {
  TokenString out;
  emit(f, out);
  return out;
}

TokenString tokens(const Term& t) {
  TokenString out;
  emit(t, out);
  return out;
}

Nat code_of_tokens(const TokenString& ts) {
  if (ts.empty()) return 0;
  static constexpr char kChars[] = "0123456789abcdefghijklmnopqrstuv";
  std::string s;
  s.reserve(ts.size());
  for (auto t : ts) s.push_back(kChars[t]);
  return Nat(s, 32);
}

TokenString digits_of(const Nat& n) {
  TokenString out;
  if (n <= 0) return out;
  std::string s = n.get_str(32);
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<std::uint8_t>(c <= '9' ? c - '0' : c - 'a' + 10));
  return out;
}

GodelCode encode(const Formula& f) { return GodelCode(code_of_tokens(tokens(f))); }

std::optional<Formula> decode(const Nat& code) {
  TokenString ts = digits_of(code);
  if (ts.empty()) return std::nullopt;
  Decoder d{ts};
  auto f = d.formula();
  if (!f || d.pos != ts.size()) return std::nullopt;
  return f;
}

bool in_n(const Nat& code) {
  auto f = decode(code);
  return f && in_fm(*f, 1);
}

Nat numeral_fragment_code(const Nat& n) { return code_of_tokens(tokens(numeral(n).term)); }

}  // namespace fixpoint
