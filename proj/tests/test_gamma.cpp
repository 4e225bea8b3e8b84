#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "monvar/gamma.hpp"

using namespace monvar;

namespace {

std::vector<Word> words_up_to(const std::vector<Letter>& letters, int max_len) {
  std::vector<Word> out{Word{}};
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (const Letter& l : letters) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(w);
      }
    begin = end;
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> runs_of(const Word& w) {
  std::vector<std::pair<size_t, size_t>> r;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    r.push_back({i, j});
    i = j;
  }
  return r;
}

// Closure of single-run exponent changes that keep the set of simple letters,
// with run exponents capped. This is an independent reading of the congruence
// used to cross-check canon().
std::set<Word> reachable(const Word& u, int cap) {
  std::set<Word> seen{u};
  std::vector<Word> queue{u};
  while (!queue.empty()) {
    Word w = queue.back();
    queue.pop_back();
    std::vector<Letter> simple = simple_letters(w);
    for (auto [b, e] : runs_of(w)) {
      for (int k = 1; k <= cap; ++k) {
        if (static_cast<size_t>(k) == e - b) continue;
        Word next(w.begin(), w.begin() + b);
        next.insert(next.end(), static_cast<size_t>(k), w[b]);
        next.insert(next.end(), w.begin() + e, w.end());
        if (simple_letters(next) != simple) continue;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("canon matches the move-closure oracle on all short words") {
  std::vector<Letter> letters{{'x', -1}, {'y', -1}, {'z', -1}};
  std::vector<Word> words = words_up_to(letters, 5);
  REQUIRE(words.size() == 364);
  for (const Word& u : words) {
    std::set<Word> r = reachable(u, 5);
    GammaClass cu = canon(u);
    for (const Word& v : words) {
      bool oracle = r.count(v) > 0;
      bool computed = (canon(v) == cu);
      if (oracle != computed) {
        CAPTURE(format_word(u));
        CAPTURE(format_word(v));
        CHECK(oracle == computed);
      }
    }
  }
}

TEST_CASE("canon basics") {
  CHECK(format_class(canon(parse_word("x^2y^2"))) == "xx+yy+");
  CHECK(format_class(canon(parse_word("xyx"))) == "x+yx+");
  CHECK(format_class(canon(parse_word("x"))) == "x");
  CHECK(format_class(canon(parse_word("x^2"))) == "xx+");
  CHECK(format_class(canon(parse_word("1"))) == "1");
  CHECK(format_class(canon(parse_word("x^2tyx^3y"))) == "x+ty+x+y+");
  CHECK(canon(parse_word("x^2y^2")) == canon(parse_word("x^5y^3")));
  CHECK(canon(parse_word("xy")) != canon(parse_word("x^2y")));
}

TEST_CASE("class parsing, formatting and validation") {
  for (const char* s : {"1", "x", "xx+", "xy", "xx+yy+", "x+yx+", "x+yzx+", "x+tyy+x+",
                        "x+y+tx+y1y1+y+", "yxx+", "xx+y"}) {
    GammaClass c = parse_class(s);
    CHECK(format_class(c) == s);
    CHECK(parse_class(format_class(c)) == c);
  }
  CHECK(parse_class("x x+") == parse_class("xx+"));
  CHECK(parse_class("x x+ y y+") == canon(parse_word("x^2y^2")));

  // one-or-more runs need the letter elsewhere; a lone x+ is a union of
  // classes, not a class
  CHECK_THROWS_AS(parse_class("x+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class("x+y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class("xx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class("x+ x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class("x y x"), std::invalid_argument);
}

TEST_CASE("representatives") {
  GammaClass c = parse_class("xx+yy+");
  CHECK(format_word(min_rep(c)) == "x^2y^2");
  CHECK(contains(c, parse_word("x^4y^2")));
  CHECK(!contains(c, parse_word("xy^2")));
  CHECK(canon(min_rep(c)) == c);

  std::vector<Word> span = spanning_reps(c);
  REQUIRE(span.size() == 4);
  std::set<Word> span_set(span.begin(), span.end());
  CHECK(span_set.count(parse_word("x^2y^2")));
  CHECK(span_set.count(parse_word("x^3y^2")));
  CHECK(span_set.count(parse_word("x^2y^3")));
  CHECK(span_set.count(parse_word("x^3y^3")));

  CHECK(spanning_reps(parse_class("xy")).size() == 1);
  CHECK(spanning_reps(parse_class("x+yx+")).size() == 4);
  for (const char* s : {"x", "x+yzx+", "x+tyy+x+", "x+y+tx+y1y1+y+"}) {
    GammaClass cls = parse_class(s);
    for (const Word& w : spanning_reps(cls)) CHECK(contains(cls, w));
    CHECK(canon(min_rep(cls)) == cls);
  }
}

TEST_CASE("class multiplication agrees with word multiplication") {
  CHECK(format_class(class_multiply(canon(parse_word("x")), canon(parse_word("x")))) == "xx+");
  CHECK(format_class(class_multiply(canon(parse_word("xy")), canon(parse_word("x")))) == "x+yx+");

  std::mt19937 rng(12345);
  std::vector<Letter> letters{{'x', -1}, {'y', -1}, {'z', -1}};
  for (int trial = 0; trial < 500; ++trial) {
    auto random_word = [&] {
      Word w;
      int len = static_cast<int>(rng() % 7);
      for (int i = 0; i < len; ++i) w.push_back(letters[rng() % letters.size()]);
      return w;
    };
    Word u = random_word(), v = random_word();
    CHECK(class_multiply(canon(u), canon(v)) == canon(concat(u, v)));
  }
}

namespace {

// Exhaustive factor classes over all members with run exponents up to 4.
std::set<GammaClass> factor_classes_brute(const GammaClass& c) {
  std::set<GammaClass> out;
  std::vector<int> lo, hi;
  for (const ClassRun& r : c.runs) {
    lo.push_back(r.bound == RunBound::at_least_two ? 2 : 1);
    hi.push_back(r.bound == RunBound::exactly_one ? 1 : 4);
  }
  std::vector<int> e = lo;
  while (true) {
    Word w;
    for (size_t i = 0; i < e.size(); ++i)
      w.insert(w.end(), static_cast<size_t>(e[i]), c.runs[i].letter);
    for (const Word& f : factors(w)) out.insert(canon(f));
    size_t i = 0;
    for (; i < e.size(); ++i) {
      if (e[i] < hi[i]) {
        ++e[i];
        break;
      }
      e[i] = lo[i];
    }
    if (i == e.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("class factors match exhaustive enumeration") {
  for (const char* s : {"1", "x", "xy", "xx+", "xx+yy+", "x+yx+", "x+yzx+", "yxx+", "xx+y",
                        "x+tyy+x+", "x+yy+tx+", "zxx+z1"}) {
    GammaClass c = parse_class(s);
    CHECK(class_factors(c) == factor_classes_brute(c));
  }
}

TEST_CASE("factor classes of named patterns") {
  std::set<GammaClass> f = class_factors(parse_class("xx+yy+"));
  CHECK(f.size() == 9);
  std::set<std::string> names;
  for (const GammaClass& c : f) names.insert(format_class(c));
  CHECK(names == std::set<std::string>{"1", "x", "y", "xx+", "yy+", "xy", "xx+y", "xyy+",
                                       "xx+yy+"});

  CHECK(class_factors(parse_class("yxx+")).size() == 6);
  CHECK(class_factors(parse_class("xx+y")).size() == 6);
  CHECK(class_factors(parse_class("x+yzx+")).size() == 15);
  CHECK(class_factors(parse_class("x+tyy+x+")).size() == 21);
  CHECK(class_factors(parse_class("x+yy+tx+")).size() == 21);
}
