#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpmonoid/error.hpp"
#include "cpmonoid/external.hpp"
#include "cpmonoid/oracle.hpp"
#include "support.hpp"

using namespace cpmonoid;

namespace {

  Template tpl(std::string const& text) {
    return parse_template(text);
  }

  std::string identity_oracle() {
    return std::string("python3 ") + CPMONOID_ORACLE_DIR + "/identity_oracle.py";
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream     in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("evaluate examples") {
    Alphabet abc("abc");
    CHECK((*builtin("reverse", abc))({Word("abc")}) == Word("cba"));
    CHECK((*builtin("collapse_b_to_a", abc))({Word("ab")}) == Word("aa"));
    auto f = from_template(tpl("arity 1\nalphabet abc\n\"ab\" x1 \"c\"\n"));
    CHECK((*f)({Word("x")}) == Word("abxc"));
    CHECK_THROWS_AS(static_cast<void>((*f)({})), ArityError);
    CHECK_THROWS_AS(static_cast<void>((*builtin("sort_letters", abc))({Word("x")})),
                    AlphabetError);
  }

  TEST_CASE("builtin catalog") {
    Alphabet abc("abc");
    auto     names = builtin_names();
    for (std::string n : {"reverse", "sort_letters", "square", "collapse_b_to_a", "erase_a",
                          "first_letter_or_epsilon"}) {
      CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
    CHECK((*builtin("square", abc))({Word("ab")}) == Word("abab"));
    CHECK((*builtin("sort_letters", abc))({Word("bca")}) == Word("abc"));
    CHECK((*builtin("first_letter_or_ε", abc))({Word()}) == Word());
    CHECK((*builtin("first_letter_or_epsilon", abc))({Word("cab")}) == Word("c"));
    CHECK((*builtin("erase_a", abc))({Word("abca")}) == Word("bc"));
    CHECK((*builtin("concat", abc))({Word("ab"), Word("c")}) == Word("abc"));
    CHECK((*builtin("swap_concat", abc))({Word("ab"), Word("c")}) == Word("cab"));
    CHECK_THROWS_AS(static_cast<void>(builtin("nope", abc)), FormatError);
    auto catalog = builtin_catalog(abc);
    REQUIRE(catalog.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      CHECK(catalog[i].first == names[i]);
    }
  }

  TEST_CASE("freeze") {
    Alphabet abc("abc");
    auto     concat_f = builtin("concat", abc);
    auto     g        = freeze(concat_f, 1, Word("b"));
    CHECK(g->arity() == 1);
    CHECK((*g)({Word("ca")}) == Word("cab"));
    auto sq = freeze(builtin("square", abc), 0, Word("u"));
    CHECK(sq->arity() == 0);
    CHECK((*sq)({}) == Word("uu"));
    CHECK_THROWS_AS(static_cast<void>(freeze(concat_f, 2, Word())), ArityError);
    CHECK(g->describe() == "builtin concat frozen at x2=\"b\"");
  }

  TEST_CASE("freeze commutes with evaluation") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t k = 1 + testing::draw(gen, 3);
      auto        t = testing::random_template(gen, "abc", k, testing::draw(gen, 7));
      auto        f = from_template(t);
      std::size_t i = testing::draw(gen, k);
      Word        u(testing::random_word(gen, "abc", testing::draw(gen, 3)));
      auto        g    = freeze(f, i, u);
      auto        rest = testing::random_tuple(gen, "abc", k - 1, 3);
      WordTuple   full = rest;
      full.insert(full.begin() + static_cast<std::ptrdiff_t>(i), u);
      CHECK((*g)(rest) == t.eval(full));
    }
  }

  TEST_CASE("template backend agrees with eval") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t k    = testing::draw(gen, 4);
      auto        t    = testing::random_template(gen, "abcd", k, testing::draw(gen, 8));
      auto        f    = from_template(t);
      auto        args = testing::random_tuple(gen, "abcd", k, 4);
      CHECK((*f)(args) == t.eval(args));
    }
  }

  TEST_CASE("caching and determinism") {
    Alphabet abc("abc");
    auto     f = builtin("reverse", abc);
    auto     w = (*f)({Word("abc")});
    CHECK((*f)({Word("abc")}) == w);
    CHECK(f->stats().calls == 2);
    CHECK(f->stats().backend_queries == 1);
    auto g = builtin("reverse", abc);
    std::const_pointer_cast<WordFunction>(g)->set_caching(false);
    for (auto const& x : abc.words_up_to(3)) {
      CHECK((*g)({x}) == (*f)({x}));
      CHECK((*g)({x}) == (*f)({x}));
    }
    CHECK(g->stats().backend_queries == g->stats().calls);
  }

  TEST_CASE("tables") {
    auto t = parse_table("a\tb\tab\n\tc\tc\n", Alphabet("abc"));
    CHECK(t->arity() == 2);
    CHECK((*t)({Word("a"), Word("b")}) == Word("ab"));
    CHECK((*t)({Word(), Word("c")}) == Word("c"));
    CHECK_THROWS_AS(static_cast<void>((*t)({Word("b"), Word("b")})), OracleError);
    auto inferred = parse_table("ba\tab\n");
    CHECK(inferred->alphabet().letters() == "ab");
    CHECK_THROWS_AS(static_cast<void>(parse_table("a\tb\na\tc\n")), FormatError);
    CHECK_THROWS_AS(static_cast<void>(parse_table("a\tb\na\n")), FormatError);
    CHECK_THROWS_AS(static_cast<void>(parse_table("")), FormatError);
    CHECK_THROWS_AS(static_cast<void>(parse_table("d\ta\n", Alphabet("abc"))), AlphabetError);
    std::vector<std::pair<WordTuple, Word>> entries{{{Word("a"), Word()}, Word("a")},
                                                    {{Word(), Word()}, Word()}};
    CHECK(format_table(entries) == "a\t\ta\n\t\t\n");
    auto back = parse_table(format_table(entries), Alphabet("abc"));
    CHECK((*back)({Word(), Word()}) == Word());
  }

  TEST_CASE("external identity oracle") {
    auto dir = std::filesystem::temp_directory_path() / "cpmonoid_oracle_test";
    std::filesystem::create_directories(dir);
    auto log = dir / "transcript.txt";
    std::filesystem::remove(log);
    {
      auto f = external(identity_oracle() + " --log " + log.string(), 1, Alphabet("abc"));
      CHECK(f->supports_extension());
      CHECK((*f)({Word()}) == Word());
      CHECK((*f)({Word("abc")}) == Word("abc"));
      CHECK((*f)({Word("z")}) == Word("z"));
    }
    CHECK(slurp(log)
          == "> HELLO 1 abc\n< OK EXT\n> \n< \n> abc\n< abc\n> z\n< z\n> BYE\n");
  }

  TEST_CASE("external protocol failures") {
    Alphabet abc("abc");
    CHECK_THROWS_AS(static_cast<void>(external(identity_oracle(), 2, abc)), ProtocolError);
    CHECK_THROWS_AS(static_cast<void>(external("true", 1, abc)), ProtocolError);
    CHECK_THROWS_AS(static_cast<void>(external("echo HI", 1, abc)), ProtocolError);
    auto two_fields = external("read h; echo OK; read q; printf 'a\\tb\\n'", 1, abc);
    CHECK_THROWS_AS(static_cast<void>((*two_fields)({Word("a")})), ProtocolError);
    auto outside = external("read h; echo OK; read q; echo z", 1, abc);
    CHECK_THROWS_AS(static_cast<void>((*outside)({Word("a")})), ProtocolError);
    auto dies = external("read h; echo OK", 1, abc);
    CHECK_THROWS_AS(static_cast<void>((*dies)({Word("a")})), ProtocolError);
    auto plain = external("read h; echo OK; while read q; do echo \"$q\"; done", 1, abc);
    CHECK_FALSE(plain->supports_extension());
    CHECK((*plain)({Word("ab")}) == Word("ab"));
    CHECK_THROWS_AS(static_cast<void>((*plain)({Word("z")})), AlphabetError);
  }
}
