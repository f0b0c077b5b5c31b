#include "fixpoint/parse.hpp"

#include <cctype>
#include <vector>

namespace fixpoint {

namespace {

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::Var:
      out += 'x';
      out += std::to_string(t.var_index());
      return;
    case Term::Kind::Succ:
      out += "S(";
      print_term(t.lhs(), out);
      out += ')';
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += '(';
      print_term(t.lhs(), out);
      out += t.kind() == Term::Kind::Add ? " + " : " * ";
      print_term(t.rhs(), out);
      out += ')';
      return;
  }
}

struct Symbols {
  const char* neg;
  const char* conj;
  const char* disj;
  const char* imp;
  const char* iff;
  const char* forall;
  const char* exists;
};

constexpr Symbols kUnicode{"¬", " ∧ ", " ∨ ", " → ", " ↔ ", "∀x", "∃x"};
constexpr Symbols kAscii{"~", " & ", " | ", " -> ", " <-> ", "A x", "E x"};

void print_formula(const Formula& f, const Symbols& sym, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
      print_term(f.lhs_term(), out);
      out += " = ";
      print_term(f.rhs_term(), out);
      return;
    case K::Not:
      out += sym.neg;
      print_formula(f.left(), sym, out);
      return;
    case K::Forall:
    case K::Exists:
      out += f.kind() == K::Forall ? sym.forall : sym.exists;
      out += std::to_string(f.var_index());
      out += ' ';
      print_formula(f.left(), sym, out);
      return;
    default: {
      const char* op = f.kind() == K::And ? sym.conj : f.kind() == K::Or ? sym.disj : f.kind() == K::Imp ? sym.imp : sym.iff;
      out += '(';
      print_formula(f.left(), sym, out);
      out += op;
      print_formula(f.right(), sym, out);
      out += ')';
      return;
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text), match_(text.size(), npos) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (s_[i] == '(') open.push_back(i);
      if (s_[i] == ')') {
        if (open.empty()) throw ParseError(i, "unbalanced ')'");
        match_[open.back()] = i;
        open.pop_back();
      }
    }
    if (!open.empty()) throw ParseError(open.back(), "unbalanced '('");
  }

  Formula formula_to_end() {
    Formula f = iff();
    ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  VarIndex index() {
    std::size_t start = pos_;
    VarIndex v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      VarIndex next = v * 10 + static_cast<VarIndex>(s_[pos_] - '0');
      if (next / 10 != v) fail("variable index overflow");
      v = next;
      ++pos_;
    }
    if (pos_ == start) fail("expected variable index digits");
    return v;
  }

  // Binary connectives, loosest first.
  Formula iff() {
    Formula f = imp();
    while (accept("↔") || accept("<->")) f = Formula::iff(f, imp());
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (accept("→") || accept("->")) return Formula::imp(f, imp());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (accept("∨") || accept("|")) f = Formula::disj(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept("∧") || accept("&")) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    if (accept("¬") || accept("~")) return Formula::negation(unary());
    for (bool universal : {true, false}) {
      if (accept(universal ? "∀" : "∃") || accept(universal ? "A" : "E")) {
        expect("x");
        VarIndex v = index();
        Formula body = unary();
        return universal ? Formula::forall(v, body) : Formula::exists(v, body);
      }
    }
    ws();
    if (pos_ < s_.size() && s_[pos_] == '(' && paren_holds_formula(pos_)) {
      ++pos_;
      Formula f = iff();
      expect(")");
      return f;
    }
    Term a = term();
    expect("=");
    return Formula::eq(a, term());
  }

  // A parenthesised group holds a formula iff some connective, quantifier or
  // '=' appears at its top nesting level.
  bool paren_holds_formula(std::size_t open) const {
    const std::size_t close = match_[open];
    for (std::size_t i = open + 1; i < close; ++i) {
      char c = s_[i];
      if (c == '(') {
        i = match_[i];
        continue;
      }
      if (c == '=' || c == '&' || c == '|' || c == '~' || c == 'A' || c == 'E' || c == '-' || c == '<') return true;
      if (static_cast<unsigned char>(c) >= 0x80) return true;  // UTF-8 connective or quantifier
    }
    return false;
  }

  Term term() {
    Term t = product();
    while (accept("+")) t = Term::add(t, product());
    return t;
  }

  Term product() {
    Term t = atom();
    while (accept("*")) t = Term::mul(t, atom());
    return t;
  }

  Term atom() {
    ws();
    if (accept("0")) return Term::zero();
    if (accept("S")) {
      expect("(");
      Term t = term();
      expect(")");
      return Term::succ(t);
    }
    if (accept("x")) return Term::var(index());
    if (accept("(")) {
      Term t = term();
      expect(")");
      return t;
    }
    fail("expected a term");
  }

  std::string_view s_;
  std::vector<std::size_t> match_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string print(const Formula& f, Notation notation) {
  std::string out;
  print_formula(f, notation == Notation::Unicode ? kUnicode : kAscii, out);
  return out;
}

Formula parse_formula(std::string_view text) { return Parser(text).formula_to_end(); }
Term parse_term(std::string_view text) { return Parser(text).term_to_end(); }

}  // namespace fixpoint
