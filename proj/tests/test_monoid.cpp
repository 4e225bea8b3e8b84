#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "monvar/monoid.hpp"

using namespace monvar;

namespace {

std::vector<Word> gen_words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(t));
  return out;
}

std::vector<GammaClass> gen_classes(std::initializer_list<const char*> texts) {
  std::vector<GammaClass> out;
  for (const char* t : texts) out.push_back(parse_class(t));
  return out;
}

}  // namespace

TEST_CASE("word monoid over xy") {
  WordMonoid wm = build_word_monoid(gen_words({"xy"}));
  const FiniteMonoid& m = wm.monoid;
  REQUIRE(m.size == 5);
  CHECK(m.identity == 0);
  REQUIRE(m.zero.has_value());
  CHECK(*m.zero == 4);
  CHECK(m.labels == std::vector<std::string>{"1", "x", "y", "xy", "0"});

  int x = *wm.index_of(parse_word("x"));
  int y = *wm.index_of(parse_word("y"));
  int xy = *wm.index_of(parse_word("xy"));
  CHECK(m.mul(x, y) == xy);
  CHECK(m.mul(y, x) == *m.zero);
  CHECK(m.mul(x, x) == *m.zero);
  CHECK(m.mul(xy, xy) == *m.zero);
  CHECK(m.mul(0, x) == x);
  CHECK(m.mul(x, 0) == x);
  CHECK(m.mul(*m.zero, x) == *m.zero);
  CHECK(is_associative(m));
}

TEST_CASE("degenerate word monoids") {
  WordMonoid empty = build_word_monoid({});
  CHECK(empty.monoid.size == 1);
  CHECK(empty.monoid.identity == 0);
  REQUIRE(empty.monoid.zero.has_value());
  CHECK(*empty.monoid.zero == 0);
  CHECK(is_associative(empty.monoid));

  WordMonoid one = build_word_monoid(gen_words({"1"}));
  CHECK(one.monoid.size == 2);
  CHECK(one.monoid.labels == std::vector<std::string>{"1", "0"});
  CHECK(one.monoid.mul(0, 0) == 0);
  CHECK(one.monoid.mul(0, 1) == 1);

  CHECK(build_word_monoid(gen_words({"x"})).monoid.size == 3);
  CHECK(build_word_monoid(gen_words({"xyx"})).monoid.size == 7);
  // generators contribute jointly
  CHECK(build_word_monoid(gen_words({"xy", "yx"})).monoid.size == 6);
}

TEST_CASE("class monoid over xx+yy+") {
  ClassMonoid cm = build_class_monoid(gen_classes({"xx+yy+"}));
  const FiniteMonoid& m = cm.monoid;
  REQUIRE(m.size == 10);
  CHECK(m.labels == std::vector<std::string>{"1", "x", "y", "xx+", "xy", "yy+", "xx+y", "xyy+",
                                             "xx+yy+", "0"});
  auto idx = [&](const char* s) { return *cm.index_of(parse_class(s)); };
  CHECK(m.mul(idx("x"), idx("x")) == idx("xx+"));
  CHECK(m.mul(idx("xx+"), idx("x")) == idx("xx+"));
  CHECK(m.mul(idx("x"), idx("y")) == idx("xy"));
  CHECK(m.mul(idx("y"), idx("x")) == *m.zero);
  CHECK(m.mul(idx("xy"), idx("y")) == idx("xyy+"));
  CHECK(m.mul(idx("xx+"), idx("yy+")) == idx("xx+yy+"));
  CHECK(m.mul(idx("yy+"), idx("xx+")) == *m.zero);
  CHECK(m.mul(idx("xx+yy+"), idx("xx+yy+")) == *m.zero);
  CHECK(is_associative(m));
}

TEST_CASE("class monoid sizes for the standard patterns") {
  CHECK(build_class_monoid(gen_classes({"yxx+"})).monoid.size == 7);
  CHECK(build_class_monoid(gen_classes({"xx+y"})).monoid.size == 7);
  CHECK(build_class_monoid(gen_classes({"x+yzx+"})).monoid.size == 16);
  CHECK(build_class_monoid(gen_classes({"x+tyy+x+"})).monoid.size == 22);
  CHECK(build_class_monoid(gen_classes({"x+yy+tx+"})).monoid.size == 22);
  for (const char* s : {"x+yzx+", "x+tyy+x+"})
    CHECK(is_associative(build_class_monoid(gen_classes({s})).monoid));
}

TEST_CASE("associativity counterexample on a broken table") {
  FiniteMonoid bad;
  bad.size = 2;
  bad.identity = 0;
  bad.table = {0, 1, 1, 0};  // the two-element group, fine so far
  bad.labels = {"1", "a"};
  CHECK(is_associative(bad));
  bad.table = {0, 1, 1, 1};  // a*a = a but 1*a = a: (a*a)*a vs a*(a*a) still ok
  CHECK(is_associative(bad));
  bad.table = {0, 1, 0, 0};  // a*1 = 0 breaks it
  auto ce = associativity_counterexample(bad);
  REQUIRE(ce.has_value());
  const auto& [a, b, c] = *ce;
  CHECK(bad.mul(bad.mul(a, b), c) != bad.mul(a, bad.mul(b, c)));
}

TEST_CASE("direct product") {
  FiniteMonoid a = build_word_monoid(gen_words({"x"})).monoid;
  FiniteMonoid b = build_word_monoid(gen_words({"xy"})).monoid;
  FiniteMonoid p = direct_product(a, b);
  REQUIRE(p.size == 15);
  CHECK(p.identity == 0);
  REQUIRE(p.zero.has_value());
  CHECK(*p.zero == 14);
  CHECK(p.labels[0] == "(1,1)");
  CHECK(is_associative(p));
  for (int i = 0; i < p.size; ++i) {
    CHECK(p.mul(p.identity, i) == i);
    CHECK(p.mul(i, p.identity) == i);
    CHECK(p.mul(*p.zero, i) == *p.zero);
    CHECK(p.mul(i, *p.zero) == *p.zero);
  }

  // no zero in a factor means no zero in the product
  FiniteMonoid z2;
  z2.size = 2;
  z2.identity = 0;
  z2.table = {0, 1, 1, 0};
  z2.labels = {"1", "g"};
  FiniteMonoid q = direct_product(z2, z2);
  CHECK(q.size == 4);
  CHECK(!q.zero.has_value());
  CHECK(is_associative(q));
}

TEST_CASE("monoid spec strings") {
  CHECK(parse_monoid_spec("MW: xy").size == 5);
  CHECK(parse_monoid_spec("MW: xy, yx").size == 6);
  CHECK(parse_monoid_spec("MW:").size == 1);
  CHECK(parse_monoid_spec("MG: xx+yy+").size == 10);
  CHECK(parse_monoid_spec("PROD: MW: x x MW: xy").size == 15);
  CHECK(parse_monoid_spec("PROD: MG: x+tyy+x+ x MG: x+yy+tx+").size == 484);
  CHECK_THROWS_AS(parse_monoid_spec("M: xy"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monoid_spec("PROD: MW: x"), std::invalid_argument);
}

TEST_CASE("table export") {
  FiniteMonoid m = parse_monoid_spec("MW: x");
  nlohmann::json j = nlohmann::json::parse(monoid_to_json(m));
  CHECK(j["size"] == 3);
  CHECK(j["identity"] == 0);
  CHECK(j["zero"] == 2);
  CHECK(j["labels"] == nlohmann::json({"1", "x", "0"}));
  REQUIRE(j["table"].size() == 3);
  CHECK(j["table"][1][1] == 2);
  CHECK(j["table"][0][1] == 1);

  FiniteMonoid z2;
  z2.size = 2;
  z2.identity = 0;
  z2.table = {0, 1, 1, 0};
  z2.labels = {"1", "g"};
  nlohmann::json jz = nlohmann::json::parse(monoid_to_json(z2));
  CHECK(jz["zero"].is_null());
}
