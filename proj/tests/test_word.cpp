#include <doctest.h>

#include "cpmonoid/error.hpp"
#include "cpmonoid/word.hpp"
#include "support.hpp"

using namespace cpmonoid;

TEST_SUITE("monoid-core") {
  TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(""), AlphabetError);
    CHECK_THROWS_AS(Alphabet("aba"), AlphabetError);
    CHECK_THROWS_AS(Alphabet("a b"), AlphabetError);
    CHECK_THROWS_AS(Alphabet("a\""), AlphabetError);
    CHECK_THROWS_AS(Alphabet("a\\"), AlphabetError);
    Alphabet sigma("cab");
    CHECK(sigma.size() == 3);
    CHECK(sigma.index('c') == 0);
    CHECK(sigma.index('b') == 2);
    CHECK_THROWS_AS(sigma.word("abd"), AlphabetError);
  }

  TEST_CASE("concat") {
    CHECK(concat(Word("ab"), Word("c")) == Word("abc"));
    CHECK(concat(Word("ab"), Word()) == Word("ab"));
    CHECK(concat(Word(), Word()) == Word());
  }

  TEST_CASE("count") {
    CHECK(count(Word("abca"), 'a') == 2);
    CHECK(count(Word("abca")) == 4);
    CHECK(count(Word(), 'b') == 0);
  }

  TEST_CASE("power") {
    CHECK(power(Word("ab"), 2) == Word("abab"));
    CHECK(power(Word("a"), 0) == Word());
    CHECK(power(Word(), 5) == Word());
  }

  TEST_CASE("has_prefix") {
    CHECK(has_prefix(Word("bac"), Word("b")));
    CHECK(has_prefix(Word("bac"), Word("ba")));
    CHECK_FALSE(has_prefix(Word("bac"), Word("c")));
    CHECK(has_prefix(Word("bac"), Word()));
    CHECK_FALSE(has_prefix(Word("b"), Word("ba")));
  }

  TEST_CASE("split_on_letter") {
    CHECK(split_on_letter(Word("xayaz"), 'a')
          == std::vector<Word>{Word("x"), Word("y"), Word("z")});
    CHECK(split_on_letter(Word("aa"), 'a')
          == std::vector<Word>{Word(), Word(), Word()});
    CHECK(split_on_letter(Word("bc"), 'a') == std::vector<Word>{Word("bc")});
    CHECK(split_on_letter(Word(), 'a') == std::vector<Word>{Word()});
  }

  TEST_CASE("shortlex enumeration") {
    Alphabet sigma("ba");
    auto     words = sigma.words_up_to(2);
    std::vector<std::string> got;
    for (auto const& w : words) {
      got.push_back(w.str());
    }
    CHECK(got == testing::Strings{"", "b", "a", "bb", "ba", "ab", "aa"});
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      CHECK(sigma.shortlex_less(words[i], words[i + 1]));
    }
  }

  TEST_CASE("concat is associative with unit ε (|u|,|v|,|w| ≤ 4, |Σ| = 3)") {
    auto words = Alphabet("abc").words_up_to(4);
    for (auto const& u : words) {
      CHECK(concat(u, Word()) == u);
      CHECK(concat(Word(), u) == u);
    }
    // All triples would be 121^3 concatenations of short strings; a stride
    // keeps the middle factor exhaustive over lengths ≤ 2.
    auto short_words = Alphabet("abc").words_up_to(2);
    std::size_t checked = 0;
    for (auto const& u : words) {
      for (auto const& v : short_words) {
        for (auto const& w : words) {
          if (concat(concat(u, v), w) != concat(u, concat(v, w))) {
            FAIL("associativity fails");
          }
          ++checked;
        }
      }
    }
    CHECK(checked == 121 * 13 * 121);
  }

  TEST_CASE("count(u) is the sum of the letter counts") {
    Alphabet sigma("abc");
    for (auto const& u : sigma.words_up_to(4)) {
      std::size_t sum = 0;
      for (char a : sigma.letters()) {
        sum += count(u, a);
        CHECK(count(u, a) == testing::ref_count(u.str(), a));
      }
      CHECK(sum == count(u));
    }
  }

  TEST_CASE("split_on_letter has |u|_a + 1 factors and rejoins to u") {
    Alphabet sigma("abc");
    for (auto const& u : sigma.words_up_to(5)) {
      for (char a : sigma.letters()) {
        auto factors = split_on_letter(u, a);
        CHECK(factors.size() == count(u, a) + 1);
        for (auto const& f : factors) {
          CHECK(count(f, a) == 0);
        }
        CHECK(join_on_letter(factors, a) == u);
      }
    }
  }

  TEST_CASE("quoting") {
    CHECK(quoted(Word("ab")) == "\"ab\"");
    CHECK(quoted(WordTuple{Word("a"), Word()}) == "(\"a\", \"\")");
  }
}
