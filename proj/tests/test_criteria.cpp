#include "doctest.h"

#include <vector>

#include "rsv/catalog.hpp"
#include "rsv/criteria.hpp"
#include "rsv/parser.hpp"
#include "rsv/semigroup.hpp"

using namespace rsv;

namespace {

Identity id(const char* text) { return parse_identity(text); }

std::vector<Word> words_up_to(int k, int max_len) {
  std::vector<Word> out;
  std::vector<std::string> layer;
  for (int i = 0; i < k; ++i) layer.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      out.push_back(Word(w));
      if (len < max_len) {
        for (int i = 0; i < k; ++i) next.push_back(w + static_cast<char>('a' + i));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("criteria");

TEST_CASE("interior gcd") {
  CHECK(interior_gcd(Word("ab")).value == 0);
  CHECK(interior_gcd(Word("ab")).defined);
  CHECK(interior_gcd(Word("abbba")).value == 3);
  CHECK(interior_gcd(Word("ababa")).value == 0);  // head letter inside
  CHECK(interior_gcd(Word("abbccccb")).value == 0);  // tail letter inside
  CHECK(interior_gcd(Word("abbccccd")).value == 2);
  CHECK_FALSE(interior_gcd(Word("a")).defined);
}

TEST_CASE("helper criteria") {
  CHECK(helper_criterion("L2", id("ab=ac")));
  CHECK_FALSE(helper_criterion("L2", id("ab=ba")));
  CHECK(helper_criterion("R2", id("ab=b")));
  CHECK(helper_criterion("L2_1", id("xyx=xy")));
  CHECK(helper_criterion("R2_1", id("xyx=yx")));
  CHECK(helper_criterion("Y2", id("xyx=yx^2")));
  CHECK(helper_criterion("N2_1", id("x^2=x^3")));
  CHECK_FALSE(helper_criterion("N2_1", id("xyx=xy")));  // simple letters differ
  CHECK(helper_criterion("N2", id("xy=z^2")));
  CHECK_FALSE(helper_criterion("N2", id("x=yz")));
  CHECK(helper_criterion("N3", id("xyz=w^3")));
  CHECK(helper_criterion("N3", id("xy=yx")));
  CHECK_FALSE(helper_criterion("N3", id("xy=xz")));
  CHECK(helper_criterion("C", id("x=xy^3"), 3));
  CHECK_FALSE(helper_criterion("C", id("x=xy^3"), 2));
  CHECK(helper_criterion("C2n", id("xy^2x=x^2y^2"), 2));
  CHECK_FALSE(helper_criterion("C2n", id("x=x^3"), 2));
  CHECK_THROWS_AS(helper_criterion("Q7", id("x=x")), std::invalid_argument);
  CHECK_THROWS_AS(helper_criterion("C2n", id("xy=yx"), std::nullopt), std::invalid_argument);
}

TEST_CASE("graph criterion") {
  CHECK(b2_criterion(id("aba=ababa")));
  CHECK(b2_criterion(id("ab^2c^2=ac^2b^2")));
  CHECK_FALSE(b2_criterion(id("ab=ba")));
  CHECK_FALSE(b2_criterion(id("ab=ab^2")));
  CHECK(b2_criterion(id("a^2=a^3")));
}

TEST_CASE("indicator criteria on worked examples") {
  CHECK(indicator_criterion("B", id("abc=cba")));
  CHECK(indicator_criterion("B", id("aba=bab")));
  CHECK(indicator_criterion("B", id("bab=aba")));
  CHECK_FALSE(indicator_criterion("B", id("abc=acb")));
  CHECK(indicator_criterion("B", id("abab=bbbb")));   // neither side (4,2)-trivial
  CHECK_FALSE(indicator_criterion("B", id("ab=ba")));

  CHECK(indicator_criterion("C_lambda", id("a^2b=b^2a")));
  CHECK(indicator_criterion("C_lambda", id("a^2=a^3")));
  CHECK_FALSE(indicator_criterion("C_lambda", id("aab=aba")));
  CHECK_FALSE(indicator_criterion("C_lambda", id("a=a^2")));
  CHECK(indicator_criterion("C_rho", id("ba^2=ab^2")));

  CHECK(indicator_criterion("K", id("abcd=acbd"), 2));
  CHECK(indicator_criterion("K", id("aba=ab^2a"), 1));
  CHECK_FALSE(indicator_criterion("K", id("aba=ab^2a"), 2));
  CHECK(indicator_criterion("K", id("aba=ab^3a"), 2));
  CHECK(indicator_criterion("K", id("ab^2a=a^3b^2a"), 2));
  CHECK(indicator_criterion("D", id("aba=ab^2a")));

  CHECK(indicator_criterion("F_lambda", id("ab=abc")));
  CHECK_FALSE(indicator_criterion("F_lambda", id("ab=acb")));
  CHECK(indicator_criterion("F_rho", id("ba=cba")));

  CHECK(indicator_criterion("W_lambda", id("a^2b^2=ab^2a")));
  CHECK_FALSE(indicator_criterion("W_lambda", id("ab=ba")));
  CHECK(indicator_criterion("W_lambda", id("aba=ababa")));

  CHECK(indicator_criterion("A", id("x^2=x^3")));
  CHECK(indicator_criterion("A", id("xy=yx")));
  CHECK_FALSE(indicator_criterion("A", id("x=x^2")));
}

TEST_CASE("trivial identities always hold") {
  for (const std::string& name : criterion_names()) {
    CHECK(criterion(name, id("abba=abba"), 2));
  }
}

TEST_CASE("criterion matches the oracle on a small exhaustive set") {
  struct Entry {
    std::string name;
    std::optional<int> n;
  };
  const std::vector<Entry> entries = {{"A", {}},        {"B", {}},    {"C_lambda", {}},
                                      {"N3", {}},       {"D", {}},    {"K", 2},
                                      {"F_lambda", {}}, {"W_rho", {}}, {"B2", {}},
                                      {"L2_1", {}},     {"Y2", {}},   {"C2n", 3}};
  const std::vector<Word> words = words_up_to(2, 4);
  for (const Entry& e : entries) {
    FiniteSemigroup s = catalog(e.name, e.n);
    BulkOracle oracle(s, 2, 4);
    for (const Word& u : words) {
      for (const Word& v : words) {
        Identity uv{u, v};
        CHECK_MESSAGE(criterion(e.name, uv, e.n) == oracle.holds(uv),
                      e.name, ": ", render(uv));
      }
    }
  }
}

TEST_CASE("rho criteria are the lambda criteria on reversed words") {
  const std::vector<Word> words = words_up_to(2, 4);
  for (const Word& u : words) {
    for (const Word& v : words) {
      Identity uv{u, v};
      Identity rev = uv.reversed();
      CHECK(indicator_criterion("C_rho", uv) == indicator_criterion("C_lambda", rev));
      CHECK(indicator_criterion("F_rho", uv) == indicator_criterion("F_lambda", rev));
      CHECK(indicator_criterion("W_rho", uv) == indicator_criterion("W_lambda", rev));
      CHECK(helper_criterion("R2_1", uv) == helper_criterion("L2_1", rev));
    }
  }
}

TEST_CASE("each criterion decides an equational theory") {
  // Reflexive, symmetric and transitive on a fixed pool of words.
  const std::vector<Word> pool = words_up_to(2, 3);
  struct Entry {
    std::string name;
    std::optional<int> n;
  };
  for (const Entry& e : std::vector<Entry>{{"B", {}}, {"K", 2}, {"W_lambda", {}}, {"C_rho", {}}}) {
    for (const Word& u : pool) {
      CHECK(criterion(e.name, {u, u}, e.n));
      for (const Word& v : pool) {
        CHECK(criterion(e.name, {u, v}, e.n) == criterion(e.name, {v, u}, e.n));
        for (const Word& w : pool) {
          if (criterion(e.name, {u, v}, e.n) && criterion(e.name, {v, w}, e.n)) {
            CHECK(criterion(e.name, {u, w}, e.n));
          }
        }
      }
    }
  }
}

TEST_CASE("criteria are closed under letter-to-letter substitution") {
  const std::vector<Word> words = words_up_to(2, 4);
  auto rename = [](const Word& w, char a_to, char b_to) {
    std::string s = w.str();
    for (char& c : s) c = c == 'a' ? a_to : b_to;
    return Word(s);
  };
  for (const std::string& name : {"B", "C_lambda", "W_lambda", "D"}) {
    for (const Word& u : words) {
      for (const Word& v : words) {
        if (!criterion(name, {u, v})) continue;
        // identify both letters, and swap them
        CHECK(criterion(name, {rename(u, 'c', 'c'), rename(v, 'c', 'c')}));
        CHECK(criterion(name, {rename(u, 'b', 'a'), rename(v, 'b', 'a')}));
      }
    }
  }
}

TEST_SUITE_END();
