#include <stdexcept>

#include "doctest.h"
#include "monvar/words.hpp"

using namespace monvar;

TEST_CASE("letter parsing and ordering") {
  Word w = parse_word("z1 t1 x");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter{'z', 1});
  CHECK(w[1] == Letter{'t', 1});
  CHECK(w[2] == Letter{'x', -1});
  CHECK(format_word(w) == "z1t1x");

  // plain letter sorts before any subscripted one of the same base
  CHECK(Letter{'x', -1} < Letter{'x', 0});
  CHECK(Letter{'x', 0} < Letter{'x', 1});
  CHECK(Letter{'t', 5} < Letter{'x', -1});
}

TEST_CASE("exponents and the empty word") {
  CHECK(parse_word("x^2y^2") == Word{{'x', -1}, {'x', -1}, {'y', -1}, {'y', -1}});
  CHECK(parse_word("1").empty());
  CHECK(format_word({}) == "1");
  // z1 is a subscripted letter, z^1 is a single plain z
  CHECK(parse_word("z1") == Word{{'z', 1}});
  CHECK(parse_word("z^1") == Word{{'z', -1}});
  CHECK(parse_word("1x") == Word{{'x', -1}});

  CHECK_THROWS_AS(parse_word("x^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("X"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("2x"), std::invalid_argument);
}

TEST_CASE("formatting round trip") {
  for (const char* s : {"x", "x^2y^2", "xyx", "z1t1x", "x^3", "xy12x", "xtx^2yxy"}) {
    Word w = parse_word(s);
    CHECK(format_word(w) == s);
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("occurrence counts and letter classes") {
  Word w = parse_word("xzxyty");
  CHECK(occurrences(w, {'x', -1}) == 2);
  CHECK(occurrences(w, {'z', -1}) == 1);
  CHECK(occurrences(w, {'q', -1}) == 0);
  CHECK(simple_letters(w) == std::vector<Letter>{{'t', -1}, {'z', -1}});
  CHECK(multiple_letters(w) == std::vector<Letter>{{'x', -1}, {'y', -1}});
  CHECK(is_simple_in(w, {'z', -1}));
  CHECK(!is_simple_in(w, {'x', -1}));
  CHECK(alphabet(w) == std::vector<Letter>{{'t', -1}, {'x', -1}, {'y', -1}, {'z', -1}});
}

TEST_CASE("projection keeps order") {
  Word w = parse_word("xzxyty");
  CHECK(format_word(project(w, {{'x', -1}, {'y', -1}})) == "x^2y^2");
  CHECK(format_word(project(w, {{'z', -1}, {'t', -1}})) == "zt");
  CHECK(project(w, {}).empty());
}

TEST_CASE("block decomposition along simple letters") {
  Decomposition d = decompose(parse_word("xzxyty"));
  REQUIRE(d.simples.size() == 2);
  CHECK(d.simples[0] == Letter{'z', -1});
  CHECK(d.simples[1] == Letter{'t', -1});
  REQUIRE(d.blocks.size() == 3);
  CHECK(format_word(d.blocks[0]) == "x");
  CHECK(format_word(d.blocks[1]) == "xy");
  CHECK(format_word(d.blocks[2]) == "y");

  Decomposition e = decompose(parse_word("x^2y^2"));
  CHECK(e.simples.empty());
  REQUIRE(e.blocks.size() == 1);
  CHECK(format_word(e.blocks[0]) == "x^2y^2");

  Decomposition f = decompose(parse_word("zt"));
  CHECK(f.simples.size() == 2);
  for (const Word& b : f.blocks) CHECK(b.empty());
}

TEST_CASE("substitution is a homomorphism with identity default") {
  Word w = parse_word("xyx");
  Substitution phi;
  phi[{'x', -1}] = parse_word("ab");
  CHECK(format_word(substitute(w, phi)) == "abyab");

  phi[{'y', -1}] = {};  // erase y entirely
  CHECK(format_word(substitute(w, phi)) == "abab");

  CHECK(substitute({}, phi).empty());
  Word u = parse_word("x^2");
  Word v = parse_word("y");
  Substitution join;
  join[{'x', -1}] = v;
  CHECK(substitute(concat(u, u), join) == concat(substitute(u, join), substitute(u, join)));
}

TEST_CASE("factors") {
  std::set<Word> f = factors(parse_word("xyx"));
  CHECK(f.size() == 6);
  CHECK(f.count(parse_word("1")));
  CHECK(f.count(parse_word("yx")));
  CHECK(f.count(parse_word("xyx")));
  CHECK(!f.count(parse_word("xx")));
  CHECK(is_factor(parse_word("yx"), parse_word("xyx")));
  CHECK(!is_factor(parse_word("xx"), parse_word("xyx")));
  CHECK(is_factor({}, {}));
}

TEST_CASE("words utilities") {
  CHECK(format_word(power(parse_word("xy"), 3)) == "xyxyxy");
  CHECK(power(parse_word("xy"), 0).empty());
  CHECK(format_word(reverse_word(parse_word("x^2y"))) == "yx^2");
  CHECK(format_word(concat(parse_word("x"), parse_word("y"))) == "xy");
}

TEST_CASE("identities") {
  Identity id = parse_identity("xzxyty = xzyxty");
  CHECK(format_identity(id) == "xzxyty = xzyxty");
  CHECK(parse_identity("x ~ x^2").rhs == parse_word("x^2"));
  CHECK_THROWS_AS(parse_identity("xy"), std::invalid_argument);

  Identity d = dual_identity(id);
  CHECK(format_word(d.lhs) == "ytyxzx");
  CHECK(format_word(d.rhs) == "ytxyzx");
  CHECK(dual_identity(d) == id);

  // first-use order interleaves both sides
  std::vector<Letter> order = identity_letters(id);
  REQUIRE(order.size() == 4);
  CHECK(order[0] == Letter{'x', -1});
  CHECK(order[1] == Letter{'z', -1});
  CHECK(order[2] == Letter{'y', -1});
  CHECK(order[3] == Letter{'t', -1});

  std::vector<Letter> mixed = identity_letters(parse_identity("xy = zx"));
  CHECK(mixed == std::vector<Letter>{{'x', -1}, {'z', -1}, {'y', -1}});
}
