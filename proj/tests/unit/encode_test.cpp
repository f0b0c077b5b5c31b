#include <doctest.h>

#include "fuzz.hpp"

#include "fixpoint/encode.hpp"
#include "fixpoint/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>

using namespace fixpoint;

namespace {
Nat code(const char* s) { return encode(parse_formula(s)).value(); }
}  // namespace

TEST_CASE("token table matches the published file") {
  std::ifstream in(FIXPOINT_DATA_DIR "/token_table.v1.txt");
  REQUIRE(in);
  std::vector<std::pair<int, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int digit;
    std::string name;
    ss >> digit >> name;
    rows.emplace_back(digit, name);
  }
  REQUIRE(rows.size() == token::kTable.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].first == token::kTable[i].digit);
    CHECK(rows[i].second == token::kTable[i].name);
  }
}

TEST_CASE("codes computed by hand") {
  // = 0 0        -> 1*32^2 + 9*32 + 9
  CHECK(code("0 = 0") == 1321);
  // = x x        -> 1*32^2 + 13*32 + 13
  CHECK(code("x0 = x0") == 1453);
  // = x d1 0     -> 32^3 + 13*32^2 + 14*32 + 9
  CHECK(code("x1 = 0") == 46537);
  // not = 0 0    -> 2*32^3 + 1321
  CHECK(code("~0 = 0") == 66857);
  CHECK(tokens(parse_formula("x10 = 0")) == TokenString{1, 13, 23, 9});
  CHECK(tokens(parse_formula("x11 = 0")) == TokenString{1, 13, 14, 14, 9});
  CHECK(tokens(parse_formula("E x0 (x0 = 0)")) == TokenString{8, 1, 13, 9});
  CHECK(tokens(parse_formula("A x2 (x2 = 0)")) == TokenString{7, 15, 1, 13, 15, 9});
  CHECK(numeral_fragment_code(1) == 10 * 32 + 9);
}

TEST_CASE("digit strings") {
  CHECK(digits_of(1024).size() == 3);
  CHECK(digits_of(1023).size() == 2);
  CHECK(digits_of(0).empty());
  CHECK(code_of_tokens({1, 9, 9}) == 1321);
}

TEST_CASE("non-codes decode to nothing") {
  for (unsigned long n : {0ul, 1ul, 9ul, 1322ul, 1320ul, 32ul * 1321, 24ul * 1024 + 288 + 9})
    CHECK_FALSE(decode(n).has_value());
  CHECK(decode(1321).has_value());
}

TEST_CASE("membership in N") {
  CHECK(in_n(code("x0 = x0")));
  CHECK(in_n(code("0 = 0")));
  CHECK(in_n(code("E x1 (x1 = x0)")));
  CHECK_FALSE(in_n(code("x1 = 0")));
  CHECK_FALSE(in_n(0));
  CHECK_FALSE(in_n(1322));
}

TEST_CASE("round trip and injectivity on fuzzed formulas") {
  testing::Rng rng(20);
  std::map<std::string, Formula> seen;
  for (int i = 0; i < 10'000; ++i) {
    Formula f = testing::random_formula(rng, {5, 4});
    Nat c = encode(f).value();
    std::optional<Formula> back = decode(c);
    REQUIRE(back.has_value());
    CHECK(*back == f);
    auto [it, fresh] = seen.emplace(c.get_str(32), f);
    if (!fresh) CHECK(it->second == f);
  }
}

TEST_CASE("every digit string of length 3 decodes consistently") {
  for (unsigned long n = 0; n < 32 * 32 * 32; ++n) {
    std::optional<Formula> f = decode(n);
    if (f) CHECK(encode(*f).value() == n);
  }
}
