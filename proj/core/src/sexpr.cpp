#include "fixpoint/prf.hpp"

#include <cctype>

namespace fixpoint {

namespace {

class SexprReader {
 public:
  explicit SexprReader(const std::string& s) : s_(s) {}

  Prf program() {
    ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] != '(') {
      std::string a = atom();
      if (a == "zero") return Prf::zero();
      if (a == "succ") return Prf::succ();
      if (a == "add") return Prf::add();
      if (a == "mul") return Prf::mul();
      if (a == "tsub") return Prf::truncsub();
      if (a == "ifzero") return Prf::ifzero();
      if (a == "div") return Prf::div();
      if (a == "mod") return Prf::mod();
      fail("unknown program '" + a + "'");
    }
    ++pos_;
    std::string head = atom();
    Prf result = Prf::zero();
    if (head == "proj") {
      std::size_t i = number_small();
      std::size_t n = number_small();
      result = Prf::proj(i, n);
    } else if (head == "const") {
      Nat c = number();
      result = Prf::constant(c, number_small());
    } else if (head == "compose") {
      Prf outer = program();
      std::vector<Prf> inners;
      while (ws(), pos_ < s_.size() && s_[pos_] != ')') inners.push_back(program());
      result = Prf::compose(outer, std::move(inners));
    } else if (head == "primrec") {
      Prf base = program();
      Prf step = program();
      result = Prf::primrec(base, step);
    } else {
      fail("unknown form '" + head + "'");
    }
    ws();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return result;
  }

  void finish() {
    ws();
    if (pos_ != s_.size()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("sexpr: " + what + " at byte " + std::to_string(pos_));
  }
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string atom() {
    ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected an atom");
    return s_.substr(start, pos_ - start);
  }
  Nat number() {
    std::string a = atom();
    auto n = parse_decimal(a);
    if (!n) fail("expected a natural number, got '" + a + "'");
    return *n;
  }
  std::size_t number_small() {
    Nat n = number();
    if (!fits_u64(n)) fail("number too large");
    return static_cast<std::size_t>(to_u64(n));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Prf parse_sexpr(const std::string& text) {
  SexprReader r(text);
  Prf p = r.program();
  r.finish();
  return p;
}

}  // namespace fixpoint
