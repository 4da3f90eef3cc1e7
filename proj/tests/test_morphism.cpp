#include <doctest.h>

#include "cpmonoid/error.hpp"
#include "cpmonoid/morphism.hpp"
#include "support.hpp"

using namespace cpmonoid;

TEST_SUITE("monoid-core") {
  TEST_CASE("apply") {
    Alphabet sigma("abc");
    CHECK(identify(sigma, 'b', 'a')(Word("abc")) == Word("aac"));
    CHECK(project(sigma, 'c')(Word("acbca")) == Word("cc"));
    CHECK(erase(sigma, 'c')(Word("acbca")) == Word("aba"));
    CHECK_THROWS_AS(erase(sigma, 'c')(Word("abd")), AlphabetError);
  }

  TEST_CASE("standard morphisms") {
    Alphabet xyz("xyza");
    CHECK(identify(Alphabet("ab"), 'b', 'a')(Word("ba")) == Word("aa"));
    CHECK(collapse_to(xyz, 'a')(Word("xyz")) == Word("aaa"));
    CHECK(erase(Alphabet("ab"), 'a')(Word("aaa")) == Word());
    CHECK_THROWS_AS(project(Alphabet("ab"), 'c'), AlphabetError);
    CHECK_THROWS_AS(custom_morphism(Alphabet("ab"), Alphabet("ab"), {{'a', "b"}}),
                    FormatError);
    auto phi = custom_morphism(Alphabet("ab"), Alphabet("xy"), {{'a', "xy"}, {'b', ""}});
    CHECK_FALSE(phi.is_endomorphism());
    CHECK(phi(Word("aba")) == Word("xyxy"));
  }

  TEST_CASE("standard family order and size") {
    Alphabet sigma("abc");
    auto     family = standard_morphisms(sigma);
    // 3 collapse_to + 3 project + 3 erase + 6 identify
    REQUIRE(family.size() == 15);
    CHECK(family[0].name() == "collapse_to(a)");
    CHECK(family[3].name() == "project(a)");
    CHECK(family[6].name() == "erase(a)");
    CHECK(family[9].name() == "identify(a,b)");
    CHECK(family[14].name() == "identify(c,b)");
  }

  TEST_CASE("compose") {
    Alphabet sigma("abc");
    auto     f = compose(erase(sigma, 'b'), identify(sigma, 'c', 'b'));
    CHECK(f(Word("abc")) == Word("a"));
    auto phi = custom_morphism(sigma, sigma, {{'a', "ab"}, {'b', ""}, {'c', "ca"}});
    auto id  = compose(identity_morphism(sigma), phi);
    for (auto const& u : sigma.words_up_to(3)) {
      CHECK(id(u) == phi(u));
    }
    // Hand fold: erase(a) sends "ab" to "b", collapse_to(a) sends "b" to "a".
    auto g = compose(collapse_to(sigma, 'a'), erase(sigma, 'a'));
    CHECK(g(Word("ab")) == Word("a"));
    CHECK(g(Word("ab")) == collapse_to(sigma, 'a')(erase(sigma, 'a')(Word("ab"))));
    auto other = custom_morphism(sigma, Alphabet("xy"), {{'a', "x"}, {'b', "y"}, {'c', ""}});
    CHECK_THROWS(compose(other, other));
  }

  TEST_CASE("apply is a monoid homomorphism") {
    std::mt19937_64 gen(7);
    Alphabet        sigma("abc");
    auto            words = sigma.words_up_to(3);
    for (int trial = 0; trial < 30; ++trial) {
      auto phi    = testing::random_endomorphism(gen, "abc", 3);
      auto images = testing::images_of(phi);
      CHECK(phi(Word()) == Word());
      for (auto const& u : words) {
        CHECK(phi(u).str() == testing::ref_apply(images, u.str()));
        for (auto const& v : words) {
          if (phi(concat(u, v)) != concat(phi(u), phi(v))) {
            FAIL("homomorphism law fails for " << u.str() << "," << v.str());
          }
        }
      }
    }
  }

  TEST_CASE("|project(c)(u)| = |u|_c") {
    Alphabet sigma("abc");
    for (auto const& u : sigma.words_up_to(4)) {
      for (char c : sigma.letters()) {
        CHECK(project(sigma, c)(u).size() == count(u, c));
      }
    }
  }

  TEST_CASE("all_endomorphisms") {
    // Images of length ≤ 2 over {a,b}: 7 words each, 7^2 maps.
    auto all = all_endomorphisms(Alphabet("ab"), 2);
    CHECK(all.size() == 49);
    CHECK(all.front().images() == std::vector<Word>{Word(), Word()});
    CHECK(all[1].images() == std::vector<Word>{Word(), Word("a")});
  }

  TEST_CASE("text format") {
    auto phi = parse_morphism("alphabet abc\na=ab\nb=\nc=a\n");
    CHECK(phi(Word("abc")) == Word("aba"));
    CHECK(to_string(phi) == "alphabet abc\na=ab\nb=\nc=a\n");
    CHECK(parse_morphism(to_string(phi)) == phi);
    auto psi = parse_morphism("alphabet ab\ntarget xyz\na=xz\nb=y\n");
    CHECK(to_string(psi) == "alphabet ab\ntarget xyz\na=xz\nb=y\n");
    CHECK_THROWS_AS(parse_morphism("alphabet ab\na=a\n"), FormatError);
    CHECK_THROWS_AS(parse_morphism("alphabet ab\na=a\nb=c\n"), Error);
    CHECK_THROWS_AS(parse_morphism("a=a\n"), FormatError);
  }
}
