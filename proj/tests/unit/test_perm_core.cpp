#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ekr/error.hpp"
#include "ekr/families.hpp"
#include "ekr/group.hpp"

using namespace ekr;

namespace {

Permutation cyc(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }

ElementSet ids_of(const GroupTable& g, std::initializer_list<const char*> cycles) {
  ElementSet out;
  for (auto c : cycles) out.push_back(g.id_of(cyc(c, g.degree())));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const auto id = Permutation::identity(3);
  const auto t = cyc("(1,2)", 3);
  const auto r = cyc("(1,2,3)", 3);
  CHECK(compose(id, r) == r);
  CHECK(compose(t, t) == id);
  CHECK(compose(r, t) == cyc("(1,3)", 3));
  CHECK_THROWS_AS(compose(r, cyc("(1,2)", 4)), Error);
}

TEST_CASE("order, parity, fixed points") {
  CHECK(cyc("(1,2)", 2).parity() == Parity::odd);
  CHECK(cyc("(1,2,3)(4,5)", 5).order() == 6);
  CHECK_FALSE(Permutation::identity(4).is_derangement());
  CHECK(cyc("(1,2)(3,4)", 4).is_derangement());
  CHECK(cyc("(1,2)", 4).fixed_points() == std::vector<Point>{2, 3});
  CHECK(cyc("(1,2,3)(4,5)", 6).cycle_type() == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("cycle notation and image arrays round-trip") {
  for (const char* s : {"(1,5,2)(3,4)", "(1,2)", "()"}) {
    const auto p = cyc(s, 5);
    CHECK(Permutation::from_cycles(p.to_cycles(), 5) == p);
    const auto im = p.to_images_1based();
    CHECK(Permutation::from_images_1based(im) == p);
  }
  CHECK(cyc("(1, 2)(3,4)", 4) == cyc("(1,2)(3,4)", 4));
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 3), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,1)", 3), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,5)", 3), Error);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("close enumerates the group in lexicographic order") {
  CHECK(close({cyc("(1,2,3)", 3)}).order() == 3);
  const auto s4 = close({cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(close({cyc("(1,2,3,4,5,6)", 6), cyc("(1,6)(2,5)(3,4)", 6)}).order() == 12);
  CHECK(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  CHECK(s4.element(GroupTable::identity()).is_identity());
  CHECK(close({}, kDefaultClosureCap, "", 4).order() == 1);
  CHECK_THROWS_AS(close({cyc("(1,2)", 5), cyc("(1,2,3,4,5)", 5)}, 100), Error);
  // same generators in another order give the same ids
  const auto again = close({cyc("(1,2,3,4)", 4), cyc("(1,2)", 4)});
  CHECK(again.elements() == s4.elements());
}

TEST_CASE("closure under multiplication and inverse") {
  const auto g = symmetric(4);
  for (ElementId a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == GroupTable::identity());
    for (ElementId b = 0; b < g.order(); b += 5)
      CHECK(g.element(g.mul(a, b)) == compose(g.element(a), g.element(b)));
  }
}

TEST_CASE("parity is a homomorphism and conjugation keeps fixed-point counts") {
  for (const auto& g : {symmetric(5), pgl2p(5), dihedral(8)}) {
    for (ElementId a = 0; a < g.order(); a += 3)
      for (ElementId b = 0; b < g.order(); b += 7) {
        const auto& p = g.element(a);
        const auto& q = g.element(b);
        CHECK((p * q).is_even() == (p.is_even() == q.is_even()));
        CHECK(conjugate(q, p).num_fixed_points() == q.num_fixed_points());
      }
  }
}

TEST_CASE("orbits, transitivity, regularity") {
  CHECK(is_regular(cyclic_regular(5)));
  const auto s4 = symmetric(4);
  CHECK(is_transitive(s4));
  CHECK_FALSE(is_regular(s4));
  const auto h = close({cyc("(1,2)(3,4)", 4)});
  const auto o = orbits(h);
  REQUIRE(o.size() == 2);
  CHECK(o[0] == std::vector<Point>{0, 1});
  CHECK(o[1] == std::vector<Point>{2, 3});
}

TEST_CASE("Burnside: a transitive group has one orbit on average") {
  for (const auto& g : {symmetric(5), pgl2p(3), matching_join(3), agl1p(7)}) {
    std::size_t fixed = 0;
    for (const auto& p : g.elements()) fixed += p.num_fixed_points();
    CHECK(fixed == g.order());
  }
}

TEST_CASE("coset action on the cosets of a transposition is natural Sym(3)") {
  const auto g = symmetric(3);
  const auto h = ids_of(g, {"()", "(1,2)"});
  const auto ca = coset_action(g, h);
  CHECK(ca.action.degree() == 3);
  CHECK(ca.action.order() == 6);
  CHECK(ca.faithful);
  const auto reg = coset_action(g, {GroupTable::identity()});
  CHECK(is_regular(reg.action));
  CHECK_THROWS_AS(coset_action(g, ids_of(g, {"()", "(1,2,3)", "(1,2)"})), Error);
}

TEST_CASE("Q8 on the cosets of its center is not faithful") {
  const auto q8 = dicyclic_regular(AbelianSpec::canonical({4}));
  ElementSet center;
  for (ElementId a = 0; a < q8.order(); ++a)
    if (q8.element_order(a) <= 2) center.push_back(a);
  REQUIRE(center.size() == 2);
  const auto ca = coset_action(q8, center);
  CHECK(ca.action.degree() == 4);
  CHECK_FALSE(ca.faithful);
}

TEST_CASE("coset action fixes a coset exactly for conjugates into H") {
  const auto g = symmetric(4);
  const auto h = ids_of(g, {"()", "(1,2)", "(3,4)", "(1,2)(3,4)"});
  const auto ca = coset_action(g, h);
  CHECK(ca.action.degree() * h.size() == g.order());
  const auto conj = conjugacy_closure(g, h);
  for (ElementId x = 0; x < g.order(); ++x) {
    const bool fixes = !ca.action.element(ca.image_of[x]).is_derangement();
    CHECK(fixes == std::binary_search(conj.begin(), conj.end(), x));
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(cyclic_regular(6), 6).size() == 4);
  const auto q8 = dicyclic_regular(AbelianSpec::canonical({4}));
  CHECK(enumerate_subgroups(q8, 8).size() == 6);
  CHECK(enumerate_subgroups(close({}, kDefaultClosureCap, "", 3), 1).size() == 1);
  for (const auto& h : enumerate_subgroups(symmetric(4), 24)) CHECK(is_subgroup(symmetric(4), h));
  CHECK(enumerate_subgroups(symmetric(4), 24).size() == 30);
  CHECK_THROWS_AS(enumerate_subgroups(symmetric(6), 720), Error);
}

TEST_CASE("faithful transitive actions") {
  const auto q8 = faithful_transitive_actions(dicyclic_regular(AbelianSpec::canonical({4})));
  REQUIRE(q8.size() == 1);
  CHECK(q8[0].degree == 8);
  std::vector<std::size_t> degrees;
  for (const auto& a : faithful_transitive_actions(symmetric(3))) degrees.push_back(a.degree);
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<std::size_t>{3, 3, 3, 6});
  const auto c4 = faithful_transitive_actions(cyclic_regular(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].degree == 4);
}
