#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "monvar/catalog.hpp"

using namespace monvar;

namespace {

Word wparse(const char* s) { return parse_word(s); }

}  // namespace

TEST_CASE("permutations") {
  CHECK(Perm::identity(3).images == std::vector<int>{1, 2, 3});
  auto perms = all_perms(3);
  CHECK(perms.size() == 6);
  CHECK(perms.front() == Perm::identity(3));
  CHECK(perms.back().images == std::vector<int>{3, 2, 1});
  CHECK(parse_perm("2,1").images == std::vector<int>{2, 1});
  CHECK(format_perm(perms[1]) == "1,3,2");
  CHECK_THROWS_AS(parse_perm("2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm(""), std::invalid_argument);
}

TEST_CASE("fixed identities") {
  CHECK(format_identity(sigma_identity(1)) == "xyzxty = yxzxty");
  CHECK(format_identity(sigma_identity(2)) == "xzytxy = xzytyx");
  CHECK(format_identity(sigma_identity(3)) == "xzxyty = xzyxty");
  CHECK_THROWS_AS(sigma_identity(4), std::invalid_argument);
  auto phi = phi_identities();
  REQUIRE(phi.size() == 2);
  CHECK(format_identity(phi[0]) == "x^2 = x^3");
  CHECK(format_identity(phi[1]) == "x^2y^2 = y^2x^2");
}

TEST_CASE("two-parameter family words") {
  Perm id2 = Perm::identity(2);
  CHECK(format_word(family_word(FamilyKind::a, 1, 1, id2)) == "z1t1xz1y1^2z2xt2z2");
  CHECK(format_word(family_word(FamilyKind::a_bar, 1, 1, id2)) == "z1t1xz1y1^2xz2xt2z2");
  CHECK(format_word(family_word(FamilyKind::a_prime, 1, 1, id2)) == "z1t1z1y1^2z2x^2t2z2");
  CHECK(format_word(family_word(FamilyKind::a, 2, 1, Perm::identity(3))) ==
        "z1t1z2t2xz1y1^2z2y2^2z3xt3z3");
  Perm swapped = parse_perm("2,1");
  CHECK(format_word(family_word(FamilyKind::a, 1, 1, swapped)) == "z1t1xz2y1^2z1xt2z2");
  CHECK_THROWS_AS(family_word(FamilyKind::a, 1, 2, id2), std::invalid_argument);
  CHECK_THROWS_AS(family_word(FamilyKind::c, 1, 1, id2), std::invalid_argument);
}

TEST_CASE("three-parameter family words") {
  Perm id3 = Perm::identity(3);
  Word c = family_word(FamilyKind::c, 1, 1, 1, id3);
  CHECK(format_word(c) == "z1t1xytz2t2xz1y1^2z2y2^2z3yt3z3");
  CHECK(format_word(family_word(FamilyKind::c_prime, 1, 1, 1, id3)) ==
        "z1t1yxtz2t2xz1y1^2z2y2^2z3yt3z3");
  CHECK(family_word(FamilyKind::d, 1, 1, 1, id3) == reverse_word(c));
  CHECK(format_word(family_word(FamilyKind::d, 1, 1, 1, id3)) ==
        "z3t3yz3y2^2z2y1^2z1xt2z2tyxt1z1");
  CHECK(format_word(family_word(FamilyKind::c, 1, 1, 1, parse_perm("2,3,1"))) ==
        "z1t1xytz2t2xz2y1^2z3y2^2z1yt3z3");
  CHECK_THROWS_AS(family_word(FamilyKind::c, 1, 1, 2, id3), std::invalid_argument);
  CHECK_THROWS_AS(family_word(FamilyKind::a, 1, 1, 1, id3), std::invalid_argument);

  // Simple and multiple letters per the construction.
  auto simples = simple_letters(c);
  CHECK(simples == std::vector<Letter>{{'t', -1}, {'t', 1}, {'t', 2}, {'t', 3}});
  auto mult = multiple_letters(c);
  CHECK(mult == std::vector<Letter>{{'x', -1},
                                    {'y', -1},
                                    {'y', 1},
                                    {'y', 2},
                                    {'z', 1},
                                    {'z', 2},
                                    {'z', 3}});
}

TEST_CASE("family identity sets") {
  auto p1 = phi1_identities({1, 1, 1});
  CHECK(p1.size() == 12);
  CHECK(format_identity(p1[0]) ==
        "z1t1xytz2t2xz1y1^2z2y2^2z3yt3z3 = z1t1yxtz2t2xz1y1^2z2y2^2z3yt3z3");
  for (const auto& id : p1) CHECK(alphabet(id.lhs) == alphabet(id.rhs));
  CHECK(phi2_identities({1, 1}).size() == 2);
  CHECK(phi3_identities({1, 1}).size() == 2);
  CHECK(phi2_identities({1, 2}).size() == 2 + 6);
  CHECK(format_identity(phi3_identities({1, 1})[0]) ==
        "z1t1xz1y1^2z2xt2z2 = z1t1z1y1^2z2x^2t2z2");
}

TEST_CASE("two-letter witness words") {
  auto w1 = make_cn(1);
  CHECK(format_word(w1.c) == "xytxy1^2y");
  CHECK(format_word(w1.c_prime) == "yxtxy1^2y");
  CHECK(format_class(w1.cls) == "x+y+tx+y1y1+y+");
  CHECK(format_class(w1.cls_prime) == "y+x+tx+y1y1+y+");
  CHECK(w1.cls == parse_class("x+ y+ t x+ y1 y1+ y+"));
  auto w3 = make_cn(3);
  CHECK(format_word(w3.c) == "xytxy1^2y2^2y3^2y");
  CHECK(format_class(w3.cls) == "x+y+tx+y1y1+y2y2+y3y3+y+");
  CHECK(contains(w3.cls, w3.c));
  CHECK_FALSE(contains(w3.cls, w3.c_prime));
}

TEST_CASE("interlock words and families") {
  Perm e = Perm::identity(2);
  Perm u = parse_perm("2,1");
  auto vee = make_v(3, e, e);
  REQUIRE(vee.cls.has_value());
  CHECK(format_word(vee.v) ==
        "a1b1^2a2b2^2x1x2b^2y1y2b3^2a3b4^2a4tx1c1^2a1c2^2a3c3^2x2c^2y1d1^2a2d2^2a4d3^2y2");
  CHECK(format_class(*vee.cls) ==
        "a1+b1b1+a2+b2b2+x1+x2+bb+y1+y2+b3b3+a3+b4b4+a4+tx1+c1c1+a1+c2c2+a3+c3c3+x2+cc+"
        "y1+d1d1+a2+d2d2+a4+d3d3+y2+");
  CHECK_FALSE(make_v(3, u, e).cls.has_value());
  CHECK_FALSE(make_v(3, e, u).cls.has_value());

  // Each of the four words lies in its own family and no other.
  std::vector<std::pair<Perm, Perm>> cases = {{e, e}, {u, e}, {e, u}, {u, u}};
  for (const auto& [xi, eta] : cases) {
    Word w = make_v(3, xi, eta).v;
    for (const auto& [xi2, eta2] : cases)
      CHECK(in_v_family(w, 3, xi2, eta2) == (xi == xi2 && eta == eta2));
  }

  // Pumping runs keeps a word in both the class and the family.
  Word pumped;
  for (const Letter& l : vee.v) {
    pumped.push_back(l);
    if (l.base == 'c' || l == Letter{'a', 1} || l == Letter{'y', 2}) pumped.push_back(l);
  }
  CHECK(contains(*vee.cls, pumped));
  CHECK(in_v_family(pumped, 3, e, e));

  // A swapped slot accepts any arrangement using both letters except the
  // plain one, here x1 x2 x1.
  Word mixed;
  for (const Letter& l : make_v(3, e, e).v) {
    mixed.push_back(l);
    if (l == Letter{'x', 2} && mixed.size() == 8) mixed.push_back(Letter{'x', 1});
  }
  CHECK(in_v_family(mixed, 3, u, e));
  CHECK_FALSE(in_v_family(mixed, 3, e, e));
  CHECK_FALSE(in_v_family(mixed, 3, u, u));

  // Truncating the tail leaves every family.
  Word cut = make_v(3, e, e).v;
  cut.pop_back();
  CHECK_FALSE(in_v_family(cut, 3, e, e));

  CHECK(in_v_family(make_v(1, e, e).v, 1, e, e));
  CHECK(in_v_family(make_v(2, u, u).v, 2, u, u));
}

TEST_CASE("block square identities") {
  CHECK(format_identity(block_square_identity(0, 0, {})) == "x^2y^2 = xyxy");
  CHECK(format_identity(block_square_identity(1, 0, {wparse("x")})) ==
        "xt1x^2y^2 = xt1xyxy");
  CHECK(format_identity(block_square_identity(0, 1, {wparse("y")})) ==
        "x^2y^2t1y = xyxyt1y");
  CHECK(format_identity(block_square_identity(1, 1, {Word{}, wparse("x")})) ==
        "t1x^2y^2t2x = t1xyxyt2x");
  CHECK_THROWS_AS(block_square_identity(1, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(block_square_identity(1, 0, {wparse("z")}), std::invalid_argument);
  CHECK_THROWS_AS(block_square_identity(1, 0, {wparse("x^2")}), std::invalid_argument);

  FamilyRef ref;
  ref.id = FamilyId::block_square;
  ref.block_total = 1;
  CHECK(expand_family(ref).size() == 7);
}

TEST_CASE("basis construction") {
  CHECK(basis_names().size() == 34);
  CHECK(basis_names().front() == "B");
  auto names = basis_names();
  CHECK(std::count(names.begin(), names.end(), "Qd") == 1);
  CHECK(std::count(names.begin(), names.end(), "D15d") == 0);
  CHECK(std::count(names.begin(), names.end(), "Pd") == 0);

  CHECK(basis_identities(make_basis("B")).size() == 1);
  CHECK(format_identity(make_basis("B").fixed[0]) == "x = x^2");

  auto d15 = basis_identities(make_basis("D15"));
  CHECK(d15.size() == 15);
  CHECK(format_identity(d15[0]) == "xyx = x^2yx");
  CHECK(format_identity(d15[1]) == "x^2yx = xyx^2");
  CHECK(format_identity(d15[2]) == "xyxy = yxyx");

  CHECK(basis_identities(make_basis("D1")).size() == 4);
  CHECK(basis_identities(make_basis("D2")).size() == 17);
  CHECK(basis_identities(make_basis("D12")).size() == 22);
  CHECK(basis_identities(make_basis("D13")).size() == 26);
  CHECK(basis_identities(make_basis("D14")).size() == 27);

  auto q = make_basis("Q");
  REQUIRE(q.fixed.size() == 3);
  CHECK(format_identity(q.fixed[0]) == "x^2 = x^3");
  CHECK(format_identity(q.fixed[1]) == "x^2y = yx^2");
  CHECK(format_identity(q.fixed[2]) == "x^2y = xyx");
  BasisOptions n3;
  n3.series_n = 3;
  CHECK(format_identity(make_basis("Q", n3).fixed[0]) == "x^3 = x^4");
  CHECK(format_identity(make_basis("Q", n3).fixed[1]) == "x^3y = yx^3");

  CHECK(basis_identities(make_basis("R")).size() == 4);
  CHECK(basis_identities(make_basis("P")).size() == 2 + 12 + 2);

  CHECK_THROWS_AS(make_basis("D16"), std::invalid_argument);
  CHECK_THROWS_AS(make_basis("D11d"), std::invalid_argument);
  CHECK_THROWS_AS(make_basis("Pd"), std::invalid_argument);
}

TEST_CASE("dual bases") {
  auto d3 = make_basis("D3");
  auto d3d = make_basis("D3d");
  CHECK(d3d.dualized);
  CHECK(d3d.name == "D3d");
  REQUIRE(d3.fixed.size() == d3d.fixed.size());
  for (size_t i = 0; i < d3.fixed.size(); ++i)
    CHECK(d3d.fixed[i] == dual_identity(d3.fixed[i]));

  auto back = dual_basis(dual_basis(d3));
  CHECK(back.name == d3.name);
  CHECK(back.dualized == d3.dualized);
  CHECK(back.fixed == d3.fixed);

  // Family output is dualized member by member.
  auto d2 = basis_identities(make_basis("D2"));
  auto d2d = basis_identities(make_basis("D2d"));
  REQUIRE(d2.size() == d2d.size());
  for (size_t i = 0; i < d2.size(); ++i) CHECK(d2d[i] == dual_identity(d2[i]));

  auto rd = make_basis("Rd");
  CHECK(format_identity(rd.fixed[0]) == "ytxzyx = ytxzxy");
  CHECK(format_identity(rd.fixed[2]) == "x^2 = x^3");
}

TEST_CASE("basis bound options") {
  BasisOptions wide;
  wide.phi1 = {1, 1, 2};
  // Triples (1,1,1) and (1,1,2) contribute 6 and 24 permutations, two
  // identities each.
  CHECK(basis_identities(make_basis("D15", wide)).size() == 3 + 12 + 48);
}
