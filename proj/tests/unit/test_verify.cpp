#include <doctest.h>

#include <algorithm>
#include <memory>

#include "ekr/error.hpp"
#include "ekr/verify.hpp"

using namespace ekr;

namespace {

GroupPtr P(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }
AbelianSpec A(std::vector<int> f) { return AbelianSpec::canonical(std::move(f)); }

Label lab(const GroupTable& g, const char* cycles) {
  return label_of(g, g.id_of(Permutation::from_cycles(cycles, g.degree())));
}

// alpha recorded for the case removing exactly these labels
std::size_t case_alpha(const GroupTable& g, const ScanResult& s, std::vector<Label> removed) {
  std::sort(removed.begin(), removed.end());
  for (const auto& c : s.cases) {
    auto r = c.removed;
    std::sort(r.begin(), r.end());
    if (r == removed) {
      CHECK(c.alpha == c.predicted);
      return c.alpha;
    }
  }
  FAIL("no case for " << label_to_string(g, removed.front()));
  return 0;
}

}  // namespace

TEST_CASE("EKR property") {
  for (auto [g, a] : {std::pair{P(generalized_dihedral(A({6}))), 2}, {P(symmetric(4)), 6}, {P(pgl2p(5)), 20}}) {
    const auto v = ekr_property(g);
    CHECK(v.pass);
    CHECK(v.computed["alpha"] == a);
  }
  CHECK_FALSE(ekr_property(P(close({Permutation::from_cycles("(1,2)", 4)}))).hypothesis);
}

TEST_CASE("exhaustive robustness") {
  const auto c6 = ekr_robust_exhaustive(P(cyclic_regular(6)));
  CHECK(c6.pass);
  CHECK(c6.computed["subsets_scanned"] == 0);
  const auto pg = ekr_robust_exhaustive(P(pgl2p(3)), 2);
  CHECK(pg.pass);
  CHECK(pg.computed["subsets_scanned"] == 15);
  CHECK(pg.computed["labels"] == 6);
  const auto big = ekr_robust_exhaustive(P(symmetric(5)), 1, 1000);
  CHECK(big.budget_exceeded);
}

TEST_CASE("robustness witness for Sym(5)") {
  const auto g = P(symmetric(5));
  ElementSet d;
  for (const auto& c : sym5_removed_set()) d.push_back(g->id_of(Permutation::from_cycles(c, 5)));
  std::sort(d.begin(), d.end());
  const auto v = ekr_robust_witness(g, labels_of(*g, d));
  CHECK(v.pass);
  CHECK(v.computed["labels"] == 9);
  CHECK(v.computed["d_G"] == 10);
  CHECK(v.computed["alpha"].get<std::size_t>() >= 30);
}

TEST_CASE("kernel classification") {
  const auto agl = kernel_classification(P(agl1p(5)));
  CHECK(agl.pass);
  CHECK(agl.computed["cliques"] == 4);
  CHECK(agl.computed["clique_size"] == 5);
  CHECK(agl.computed["d_G"] == 1);
  const auto c6 = kernel_classification(P(cyclic_regular(6)));
  CHECK(c6.pass);
  CHECK(c6.computed["cliques"] == 1);
  const auto s4 = kernel_classification(P(symmetric(4)));
  CHECK_FALSE(s4.hypothesis);
}

TEST_CASE("single kernel label removal") {
  const auto c9 = P(cyclic_regular(9));
  const auto v9 = kernel_remove_one(c9, lab(*c9, "(1,4,7)(2,5,8)(3,6,9)"));
  CHECK(v9.pass);
  CHECK(v9.computed["alpha_before"] == 1);
  CHECK(v9.computed["alpha"] == 3);
  const auto agl = P(agl1p(5));
  ElementId t = 0;
  for (auto x : derangement_set(*agl))
    if (agl->element_order(x) == 5) t = x;
  const auto va = kernel_remove_one(agl, label_of(*agl, t));
  CHECK(va.pass);
  CHECK(va.computed["alpha"] == 8);
  const auto c6 = P(cyclic_regular(6));
  const auto v6 = kernel_remove_one(c6, lab(*c6, "(1,4)(2,5)(3,6)"));
  CHECK(v6.pass);
  CHECK(v6.computed["alpha"] == 2);
  CHECK_FALSE(kernel_remove_one(P(symmetric(4)), lab(symmetric(4), "(1,2)(3,4)")).hypothesis);
}

TEST_CASE("kernel scans never land strictly between alpha and twice alpha") {
  for (auto g : {P(cyclic_regular(9)), P(cyclic_regular(6)), P(agl1p(5)), P(agl1p(7)), P(cyclic_regular(12))}) {
    const auto s = kernel_remove_scan(g, 2);
    CHECK(s.verdict.pass);
    const auto a = s.verdict.computed["alpha_before"].get<std::size_t>();
    for (const auto& c : s.cases) {
      CHECK_FALSE((c.alpha > a && c.alpha < 2 * a));
      CHECK(c.alpha == c.predicted);
    }
  }
}

TEST_CASE("odd derangement removal") {
  const auto v = kernel_odd_removal(P(cyclic_regular(6)));
  CHECK(v.pass);
  CHECK(v.computed["sets_tested"] == 3);
  CHECK_FALSE(kernel_odd_removal(P(cyclic_regular(9))).hypothesis);
}

TEST_CASE("dicyclic groups act only regularly") {
  CHECK(dicyclic_only_regular(A({4})).pass);
  CHECK(dicyclic_only_regular(A({6})).pass);
  CHECK(dicyclic_only_regular(A({8})).pass);
  CHECK_FALSE(only_regular_action(symmetric(3)).pass);
  CHECK_THROWS_AS(dicyclic_only_regular(A({40})), Error);
}

TEST_CASE("binary star check") {
  const auto v = binary_star_check(P(symmetric(4)));
  CHECK(v.pass);
  CHECK(v.computed["size"] == 12);
  CHECK(binary_star_check(P(generalized_dihedral(A({6})))).pass);
}

TEST_CASE("fixed-point form of reflections") {
  CHECK(gendi_fixed_point_form(A({6})).computed["non_derangement_reflections"] == 3);
  CHECK(gendi_fixed_point_form(A({8})).computed["non_derangement_reflections"] == 4);
  CHECK(gendi_fixed_point_form(A({4, 2})).computed["non_derangement_reflections"] == 2);
  CHECK_FALSE(gendi_fixed_point_form(A({2, 2})).hypothesis);
}

TEST_CASE("one-label removals in D(A)") {
  const auto s6 = generalized_dihedral_structure(A({6}));
  const auto r6 = gendi_remove_one(A({6}));
  CHECK(r6.verdict.pass);
  CHECK(case_alpha(s6.group, r6, {label_of(s6.group, s6.rotation[2])}) == 6);
  const auto s8 = generalized_dihedral_structure(A({8}));
  const auto r8 = gendi_remove_one(A({8}));
  CHECK(case_alpha(s8.group, r8, {label_of(s8.group, s8.rotation[2])}) == 4);
  CHECK(case_alpha(s8.group, r8, {label_of(s8.group, s8.rotation[1])}) == 2);
  CHECK_FALSE(gendi_remove_one(A({2, 2, 2})).verdict.hypothesis);
}

TEST_CASE("one-label removals are total over small even A") {
  for (std::size_t n = 4; n <= 16; n += 2)
    for (const auto& spec : abelian_specs_of_order(n)) {
      if (spec.is_elementary_abelian_2()) continue;
      const auto s = gendi_remove_one(spec, 2);
      CHECK_MESSAGE(s.verdict.pass, spec.to_string());
      for (const auto& c : s.cases) {
        CHECK((c.alpha == 2 || c.alpha == 4 || c.alpha == 6));
        CHECK(!c.tag.empty());
      }
    }
}

TEST_CASE("two-label removals in dihedral groups") {
  auto rot = [](const GeneralizedDihedral& s, std::size_t k) { return label_of(s.group, s.rotation[k]); };
  const auto s10 = generalized_dihedral_structure(A({10}));
  CHECK(case_alpha(s10.group, dihedral_remove_two(10), {rot(s10, 2), rot(s10, 4)}) == 10);
  const auto s8 = generalized_dihedral_structure(A({8}));
  CHECK(case_alpha(s8.group, dihedral_remove_two(8), {rot(s8, 2), rot(s8, 4)}) == 8);
  const auto s12 = generalized_dihedral_structure(A({12}));
  CHECK(case_alpha(s12.group, dihedral_remove_two(12), {rot(s12, 2), rot(s12, 4)}) == 6);
  CHECK_THROWS_AS(dihedral_remove_two(7), Error);
}

TEST_CASE("two-label removals: exactly one case fires for every pair") {
  for (std::size_t n = 6; n <= 20; n += 2) {
    const auto s = dihedral_remove_two(n, 2);
    CHECK_MESSAGE(s.verdict.pass, n);
    const auto labels = s.verdict.computed["pairs"].get<std::size_t>();
    CHECK(s.cases.size() == labels);
    for (const auto& c : s.cases) {
      CHECK(c.removed.size() == 2);
      CHECK((c.alpha == 2 || c.alpha == 4 || c.alpha == 6 || c.alpha == 8 || c.alpha == 10));
    }
  }
}

TEST_CASE("bulk removals in D(A)") {
  CHECK(gendi_remove_rotations(A({6})).computed["alpha_rotations_only"] == 2);
  CHECK(gendi_remove_odd_rotations(A({8})).computed["alpha"] == 2);
  const auto s = gendi_no_alpha3(A({6}));
  CHECK(s.verdict.pass);
  CHECK(s.verdict.computed["subsets"] == 64);
  CHECK(s.verdict.computed["monotone"] == true);
  for (const auto& c : s.cases) CHECK(c.alpha != 3);
  CHECK(gendi_bulk_removals(A({6})).pass);
  CHECK(gendi_bulk_removals(A({10})).pass);
}

TEST_CASE("alpha 3 construction") {
  const auto v = gendi_alpha3_witness(A({4, 2}));
  CHECK(v.pass);
  CHECK(v.computed["alpha"] == 3);
  CHECK(v.computed["squares"] == 2);
  CHECK_FALSE(gendi_alpha3_witness(A({6})).hypothesis);
}

TEST_CASE("PGL(2,p) certificate") {
  const auto v3 = pgl_certificate(3);
  CHECK(v3.pass);
  CHECK(v3.computed["conjugates"] == 3);
  CHECK(v3.computed["d_G"] == 3);
  const auto v5 = pgl_certificate(5);
  CHECK(v5.pass);
  CHECK(v5.computed["conjugates"] == 10);
  CHECK(v5.computed["d_G"] == 10);
  CHECK(ekr_robust_exhaustive(P(pgl2p(3))).pass == v3.computed["robust"].get<bool>());
  CHECK_THROWS_AS(pgl_certificate(4), Error);
}

TEST_CASE("prime-degree clique lower bound") {
  const auto v5 = prime_clique_lower_bound(5);
  CHECK(v5.computed["subgroups"] == 6);
  CHECK(v5.computed["d_G"] == 10);
  CHECK(v5.computed["pairwise_trivial"] == true);
  CHECK(prime_clique_lower_bound(3).computed["lower_bound"] == 1);
  CHECK_THROWS_AS(prime_clique_lower_bound(11), Error);
}

TEST_CASE("label formula for Sym(n)") {
  CHECK(sym_label_formula(4).computed["labels"] == 3);
  CHECK(sym_label_formula(4).computed["literal_disagrees"] == true);
  CHECK(sym_label_formula(5).computed["labels"] == 10);
  CHECK(sym_label_formula(6).computed["labels"] == 50);
}

TEST_CASE("Sym(5) witness") {
  CHECK(sym5_removed_set().size() == 18);
  CHECK(sym5_independent_set().size() == 30);
  const auto v = sym5_witness();
  CHECK(v.pass);
  CHECK(v.computed["labels"] == 9);
  CHECK(v.computed["d_G"] == 10);
  CHECK(v.computed["independent"] == true);
  CHECK(v.computed["alpha_full"] == 24);
}

TEST_CASE("obstruction sets") {
  const auto v4 = sym_obstruction_set(4);
  CHECK(v4.pass);
  CHECK(v4.computed["max_clique"].get<std::size_t>() < 4);
  const auto v5 = sym_obstruction_set(5);
  CHECK(v5.pass);
  CHECK(v5.computed["alpha"] == 30);
  CHECK(v5.computed["removed_elements"].get<std::size_t>() < v5.computed["two_way_elements"].get<std::size_t>());
  CHECK_THROWS_AS(sym_obstruction_set(7), Error);
}

TEST_CASE("homomorphism transfer") {
  for (int n : {4, 6}) {
    const auto s = generalized_dihedral_structure(A({n}));
    const auto g = P(s.group);
    ElementSet h(s.rotation.begin(), s.rotation.end());
    std::sort(h.begin(), h.end());
    LabelSet d;
    for (auto r : s.reflection)
      if (g->is_derangement(r)) d.insert(label_of(*g, r));
    const auto v = hom_transfer(g, h, d);
    CHECK(v.pass);
    CHECK(v.computed["alpha_removed"] == 2);
    CHECK(v.computed["G_ekr"] == true);
    const auto plain = hom_transfer(g, h, {});
    CHECK(plain.computed["alpha_H"] == 1);
    CHECK(plain.computed["alpha_G"] == 2);
    CHECK(plain.computed["ratio_bound"] == true);
  }
  const auto g = P(symmetric(4));
  CHECK_THROWS_AS(hom_transfer(g, ElementSet{0, 1, 2}, {}), Error);
}

TEST_CASE("unique-derangement subgroup and the matching join") {
  const auto m2 = subgroup_matching(P(matching_join(2)));
  CHECK(m2.pass);
  CHECK(m2.computed["alpha"] == 2);
  CHECK(m2.computed["alpha_removed"] == 4);
  CHECK(m2.computed["annihilates"] == true);
  const auto m3 = subgroup_matching(P(matching_join(3)));
  CHECK(m3.pass);
  CHECK(m3.computed["alpha"] == 4);
  CHECK(m3.computed["alpha_removed"] == 8);
  CHECK(m3.computed["join"] == json{3, 8});
  CHECK(m3.computed["printed_set_annihilates"] == false);
  CHECK_FALSE(subgroup_matching(P(symmetric(4))).hypothesis);
}

TEST_CASE("catalog scan on an inline catalog") {
  const std::string text =
      R"j({"degree": 4, "name": "C4", "generators": ["(1,2,3,4)"]})j"
      "\n"
      R"j({"degree": 4, "name": "D4", "generators": ["(1,2,3,4)", "(1,3)"]})j"
      "\n"
      R"j({"degree": 4, "name": "S4", "generators": ["(1,2,3,4)", "(1,2)"]})j"
      "\n";
  const auto cat = parse_catalog_text(text, "inline");
  REQUIRE(cat.size() == 3);
  const auto v = catalog_scan(cat, 4);
  CHECK(v.computed["entries"] == 3);
  CHECK(v.computed["count"] == 2);
  CHECK(v.predicted["count"] == 1);
  CHECK(table_count(8) == 12u);
  CHECK_FALSE(table_count(5));
}
