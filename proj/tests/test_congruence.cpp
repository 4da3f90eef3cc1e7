#include <doctest.h>

#include <set>

#include "cpmonoid/congruence.hpp"
#include "cpmonoid/error.hpp"
#include "support.hpp"

using namespace cpmonoid;

namespace {

  MonoidMorphism z2_occurs(Alphabet const& sigma, char a) {
    auto                       m = cyclic_multiplicative(2);
    std::vector<MonoidElement> assignment;
    for (char c : sigma.letters()) {
      assignment.push_back(m.element(c == a ? "0" : "1"));
    }
    return MonoidMorphism(sigma, m, assignment);
  }

  // Brute-force congruent unordered pairs (u before v in shortlex order).
  std::set<std::pair<std::string, std::string>>
  ref_pairs(CongruenceSpec const& spec, std::size_t bound) {
    auto words = testing::ref_words(spec.alphabet().letters(), bound);
    std::set<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (word_image(spec, Word(words[i])) == word_image(spec, Word(words[j]))) {
          out.emplace(words[i], words[j]);
        }
      }
    }
    return out;
  }

  std::vector<std::pair<std::string, std::string>>
  as_strings(std::vector<WordPair> const& pairs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto const& [u, v] : pairs) {
      out.emplace_back(u.str(), v.str());
    }
    return out;
  }

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("word_image") {
    Alphabet sigma("abc");
    auto     theta_a = CongruenceSpec::restricted(project(sigma, 'a'));
    CHECK(std::get<Word>(word_image(theta_a, Word("abca"))) == Word("aa"));
    auto occurs = CongruenceSpec::finite_kernel(z2_occurs(sigma, 'a'));
    auto const& z2 = occurs.monoid_morphism().monoid();
    CHECK(std::get<MonoidElement>(word_image(occurs, Word("bc"))) == z2.element("1"));
    CHECK(std::get<MonoidElement>(word_image(occurs, Word("bac"))) == z2.element("0"));
    CHECK(std::get<MonoidElement>(word_image(occurs, Word())) == z2.identity());
    CHECK_THROWS_AS(static_cast<void>(word_image(theta_a, Word("ad"))), AlphabetError);
  }

  TEST_CASE("congruent") {
    Alphabet sigma("abc");
    auto     theta_a = CongruenceSpec::restricted(project(sigma, 'a'));
    CHECK(congruent(theta_a, Word("a"), Word("ab")));
    auto length = CongruenceSpec::restricted(collapse_to(sigma, 'a'));
    for (auto const& u : sigma.words_up_to(3)) {
      CHECK(congruent(theta_a, u, u));
      for (auto const& v : sigma.words_up_to(3)) {
        CHECK(congruent(length, u, v) == (u.size() == v.size()));
      }
    }
    CHECK_THROWS_AS(CongruenceSpec::restricted(custom_morphism(
                        Alphabet("ab"), Alphabet("abc"), {{'a', "c"}, {'b', "b"}})),
                    AlphabetError);
  }

  TEST_CASE("congruent_pairs examples") {
    Alphabet ab("ab");
    auto theta_a = CongruenceSpec::restricted(project(ab, 'a'));
    CHECK(as_strings(congruent_pairs(theta_a, 1))
          == std::vector<std::pair<std::string, std::string>>{{"", "b"}});
    auto length = CongruenceSpec::restricted(collapse_to(ab, 'a'));
    CHECK(as_strings(congruent_pairs(length, 1))
          == std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
    auto id = CongruenceSpec::restricted(identity_morphism(Alphabet("abc")));
    CHECK(congruent_pairs(id, 3).empty());
  }

  TEST_CASE("congruent_pairs order is by the later word, then the earlier") {
    Alphabet sigma("abc");
    auto     theta_a = CongruenceSpec::restricted(project(sigma, 'a'));
    auto     pairs   = congruent_pairs(theta_a, 2);
    REQUIRE(pairs.size() >= 3);
    CHECK(as_strings({pairs[0], pairs[1], pairs[2]})
          == std::vector<std::pair<std::string, std::string>>{
              {"", "b"}, {"", "c"}, {"b", "c"}});
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
      auto const& [u1, v1] = pairs[i];
      auto const& [u2, v2] = pairs[i + 1];
      bool ordered = sigma.shortlex_less(v1, v2)
                     || (v1 == v2 && sigma.shortlex_less(u1, u2));
      CHECK(ordered);
    }
  }

  TEST_CASE("congruent_pairs yields every congruent pair exactly once") {
    std::mt19937_64 gen(11);
    Alphabet        sigma("abc");
    std::vector<CongruenceSpec> specs;
    for (int i = 0; i < 10; ++i) {
      specs.push_back(CongruenceSpec::restricted(testing::random_endomorphism(gen, "abc", 2)));
    }
    specs.push_back(CongruenceSpec::finite_kernel(z2_occurs(sigma, 'b')));
    auto family = finite_monoid_family(sigma);
    specs.push_back(family[37]);
    specs.push_back(family.back());
    for (auto const& spec : specs) {
      auto pairs = as_strings(congruent_pairs(spec, 3));
      std::set<std::pair<std::string, std::string>> unique(pairs.begin(), pairs.end());
      CHECK(unique.size() == pairs.size());
      CHECK(unique == ref_pairs(spec, 3));
    }
  }

  TEST_CASE("kernels are congruences (exhaustive, bound 2)") {
    Alphabet sigma("abc");
    std::vector<CongruenceSpec> specs{
        CongruenceSpec::restricted(project(sigma, 'b')),
        CongruenceSpec::restricted(identify(sigma, 'c', 'a')),
        CongruenceSpec::finite_kernel(z2_occurs(sigma, 'a'))};
    auto family = finite_monoid_family(sigma);
    specs.push_back(family[family.size() - 40]);
    auto words = sigma.words_up_to(2);
    for (auto const& spec : specs) {
      for (auto const& u : words) {
        for (auto const& v : words) {
          bool uv = congruent(spec, u, v);
          CHECK(uv == congruent(spec, v, u));
          if (!uv) {
            continue;
          }
          for (auto const& w : words) {
            if (congruent(spec, v, w)) {
              CHECK(congruent(spec, u, w));
            }
            for (auto const& x : words) {
              if (congruent(spec, w, x)) {
                CHECK(congruent(spec, concat(u, w), concat(v, x)));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("word_image is a homomorphism") {
    Alphabet sigma("abc");
    auto     family = finite_monoid_family(sigma);
    auto     words  = sigma.words_up_to(3);
    for (std::size_t i = 0; i < family.size(); i += 97) {
      auto const& mu = family[i].monoid_morphism();
      for (auto const& u : words) {
        for (auto const& v : words) {
          CHECK(mu.apply(concat(u, v)) == mu.monoid().multiply(mu.apply(u), mu.apply(v)));
        }
      }
    }
  }

  TEST_CASE("monoid_validate") {
    CHECK_FALSE(monoid_validate(cyclic_multiplicative(2)));
    CHECK_FALSE(monoid_validate(cyclic_additive(3)));
    FiniteMonoid bad({"e", "x"}, 0, {1, 1, 1, 1}, "bad");
    auto         v = monoid_validate(bad);
    REQUIRE(v);
    CHECK(v->kind == MonoidViolation::Kind::left_identity);
    FiniteMonoid nonassoc({"e", "x", "y"}, 0, {0, 1, 2, 1, 2, 0, 2, 2, 1}, "na");
    auto         w = monoid_validate(nonassoc);
    REQUIRE(w);
    CHECK(w->kind == MonoidViolation::Kind::associativity);
    CHECK(w->elements.size() == 3);
  }

  TEST_CASE("catalog") {
    auto catalog = monoid_catalog();
    CHECK(catalog.size() == 13);
    for (auto const& m : catalog) {
      CHECK_MESSAGE(!monoid_validate(m), m.name());
    }
    auto const& t2 = catalog[10];
    CHECK(t2.name() == "T2");
    auto swap = t2.element("swap");
    auto c0   = t2.element("c0");
    // apply swap then c0 = c0; apply c0 then swap = c1
    CHECK(t2.multiply(swap, c0) == c0);
    CHECK(t2.multiply(c0, swap) == t2.element("c1"));
    // 2 * (2^3 + ... + 6^3) + 4^3 + 3^3 + 3^3
    CHECK(finite_monoid_family(Alphabet("abc")).size() == 998);
  }

  TEST_CASE("finite monoid text format") {
    auto m = parse_finite_monoid("elements 1 0\nidentity 1\n1 0\n0 0\n", "Z2*");
    CHECK(m.multiply(m.element("0"), m.element("1")) == m.element("0"));
    CHECK(to_string(m) == "elements 1 0\nidentity 1\n1 0\n0 0\n");
    CHECK_THROWS_AS(parse_finite_monoid("elements e x\nidentity e\nx x\nx x\n"), FormatError);
    CHECK_THROWS_AS(parse_finite_monoid("elements e x\nidentity e\ne x\n"), FormatError);
    CHECK_THROWS_AS(parse_finite_monoid("elements e x\nidentity q\ne x\nx e\n"), FormatError);
    Alphabet sigma("abc");
    auto     mu = parse_monoid_morphism("a=0\nb=1\nc=1\n", sigma, m);
    CHECK(mu.apply(Word("bac")) == m.element("0"));
    CHECK(to_string(mu) == "a=0\nb=1\nc=1\n");
    CHECK_THROWS_AS(parse_monoid_morphism("a=0\nb=1\n", sigma, m), FormatError);
  }

  TEST_CASE("describe") {
    Alphabet sigma("abc");
    CHECK(CongruenceSpec::restricted(project(sigma, 'a')).describe() == "restricted project(a)");
    CHECK(CongruenceSpec::finite_kernel(z2_occurs(sigma, 'a')).describe()
          == "finite-kernel Z2* [a=0 b=1 c=1]");
  }
}
