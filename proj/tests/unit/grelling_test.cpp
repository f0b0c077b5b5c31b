#include <doctest.h>

#include "fixpoint/grelling.hpp"

using namespace fixpoint::grelling;

TEST_CASE("names") {
  CHECK(name("heterological") == "'heterological'");
  CHECK(name("") == "''");
  CHECK(name(name("a")) == "'''a'''");
  CHECK(name("it's") == "'it''s'");
}

TEST_CASE("markers") {
  CHECK(count_markers("x is long") == 1);
  CHECK(count_markers("'x is long' is x") == 1);
  CHECK(count_markers("x and x") == 2);
  CHECK(count_markers("xylophone is max") == 0);
  CHECK(count_markers("'it''s x' is short") == 0);
  CHECK_THROWS_AS(count_markers("'open"), MarkerError);
  CHECK_THROWS_AS(OpenSentence("no marker"), MarkerError);
  CHECK_THROWS_AS(OpenSentence("x is x"), MarkerError);
}

TEST_CASE("substitution") {
  CHECK(apply(OpenSentence("x is long"), "'long'").text == "'long' is long");
  OpenSentence o("x is A");
  CHECK(apply(o, name(o.text())).text == "'x is A' is A");
  CHECK(apply(OpenSentence("'x' names x"), "y").text == "'x' names y");
}

TEST_CASE("the open sentence s") {
  OpenSentence s = build_s("p");
  CHECK(s.text() == "the sentence obtained by substituting the name of x for the variable in it has property p");
  CHECK(count_markers(s.text()) == 1);
  CHECK_THROWS_AS(build_s(""), std::invalid_argument);
  CHECK_THROWS_AS(build_s("is x"), MarkerError);
  CHECK_THROWS_AS(build_s("is it's"), MarkerError);
}

TEST_CASE("the self-applied sentence, verbatim") {
  CHECK(self_sentence("p").text ==
        "the sentence obtained by substituting the name of 'the sentence obtained by substituting the name of x for "
        "the variable in it has property p' for the variable in it has property p");
  CHECK(self_sentence("being false").text ==
        "the sentence obtained by substituting the name of 'the sentence obtained by substituting the name of x for "
        "the variable in it has property being false' for the variable in it has property being false");
}

TEST_CASE("the described substitution returns the sentence itself") {
  for (const char* p : {"p", "is false", "is true", "is provable", "is short", "is 'quoted'",
                        "is ''twice''", "has property q", "ends with a period.", "is heterological"}) {
    Sentence s = self_sentence(p);
    auto d = described_substitution(s.text);
    REQUIRE(d.has_value());
    CHECK(*d == s);
  }
}

TEST_CASE("s('o') describes o('o')") {
  for (const char* o : {"x is long", "x is A", "'x' is x", "the name x", "x, quoted as 'x', is fine"}) {
    OpenSentence open(o);
    Sentence s = apply(build_s("p"), name(o));
    auto d = described_substitution(s.text);
    REQUIRE(d.has_value());
    CHECK(d->text == apply(open, name(o)).text);
  }
}

TEST_CASE("sentences not of the form") {
  CHECK_FALSE(described_substitution("snow is white").has_value());
  CHECK_FALSE(described_substitution("the sentence obtained by substituting the name of x for the variable in it has "
                                     "property p")
                  .has_value());
  CHECK_FALSE(described_substitution("the sentence obtained by substituting the name of 'no marker' for the "
                                     "variable in it has property p")
                  .has_value());
  CHECK_FALSE(described_substitution("the sentence obtained by substituting the name of 'x' for the variable in it "
                                     "has property ")
                  .has_value());
  CHECK_FALSE(described_substitution("the sentence obtained by substituting the name of 'x").has_value());
}
