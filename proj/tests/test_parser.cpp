#include "doctest.h"

#include <random>

#include "rsv/parser.hpp"

using namespace rsv;

TEST_SUITE_BEGIN("parser");

TEST_CASE("basis identities parse to flat words") {
  Identity id = parse_identity("xyx=(xy)^2x");
  CHECK(id.lhs == Word("xyx"));
  CHECK(id.rhs == Word("xyxyx"));

  id = parse_identity("a^2=a^3");
  CHECK(id.lhs == Word("aa"));
  CHECK(id.rhs == Word("aaa"));
}

TEST_CASE("the almost-equal sign is a synonym for '='") {
  Identity id = parse_identity("ab\xe2\x89\x88" "ba");
  CHECK(id.lhs == Word("ab"));
  CHECK(id.rhs == Word("ba"));
  CHECK(render(id) == "ab=ba");
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_identity("x="), ParseError);
  CHECK_THROWS_AS(parse_identity("=x"), ParseError);
  CHECK_THROWS_AS(parse_identity("x^0=x"), ParseError);
  CHECK_THROWS_AS(parse_identity("x y = (z"), ParseError);
  CHECK_THROWS_AS(parse_identity("xy"), ParseError);
  CHECK_THROWS_AS(parse_identity("xX=x"), ParseError);
  try {
    parse_identity("ab=c^0d");
  } catch (const ParseError& e) {
    CHECK(e.column == 5);
  }
}

TEST_CASE("nested parentheses and whitespace") {
  Identity id = parse_identity("  ( a (bc)^2 )^2 d \xe2\x89\x88 d  ");
  CHECK(id.lhs == Word("abcbcabcbcd"));
  CHECK(id.rhs == Word("d"));
}

TEST_CASE("system parsing with comments, blanks and duplicates") {
  IdentitySystem s = parse_system("x^2=x^3\nxyx=(xy)^2x\nxhzxyz=xyzxhz");
  CHECK(s.identities.size() == 3);

  s = parse_system("# comment\nxy=yx\n\n   \nxy = yx  # same again\n");
  CHECK(s.identities.size() == 1);
  CHECK(s.identities[0].lhs == Word("xy"));
}

TEST_CASE("empty systems and per-line errors are rejected") {
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("# only a comment\n"), ParseError);
  try {
    parse_system("xy=yx\nbroken\nx=\n");
    CHECK(false);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
  }
}

TEST_CASE("render and parse round-trip") {
  std::mt19937 rng(20240801);
  std::uniform_int_distribution<int> len(1, 9), letter(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::string u, v;
    for (int i = len(rng); i > 0; --i) u.push_back(static_cast<char>('a' + letter(rng)));
    for (int i = len(rng); i > 0; --i) v.push_back(static_cast<char>('a' + letter(rng)));
    Identity id{Word(u), Word(v)};
    CHECK(parse_identity(render(id)) == id);
  }
}

TEST_CASE("expansion is multiplicative in the exponent") {
  for (int k = 1; k <= 6; ++k) {
    Identity id = parse_identity("(abc)^" + std::to_string(k) + "=a");
    CHECK(id.lhs.length() == 3 * k);
  }
}

TEST_SUITE_END();
