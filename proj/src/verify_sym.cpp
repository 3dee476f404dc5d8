#include <algorithm>
#include <set>

#include "ekr/error.hpp"
#include "ekr/verify.hpp"
#include "verify_util.hpp"

namespace ekr {

using namespace detail;

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

bool pairwise_trivial(const std::vector<ElementSet>& groups) {
  ElementSet common;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      common.clear();
      std::set_intersection(groups[i].begin(), groups[i].end(), groups[j].begin(), groups[j].end(),
                            std::back_inserter(common));
      if (common.size() != 1) return false;
    }
  }
  return true;
}

bool nonidentity_derangements(const GroupTable& g, const ElementSet& h) {
  return std::all_of(h.begin(), h.end(), [&](ElementId x) { return x == GroupTable::identity() || g.is_derangement(x); });
}

ElementSet parse_set(const GroupTable& g, const std::vector<std::string>& cycles) {
  ElementSet out;
  for (const auto& c : cycles) out.push_back(g.id_of(Permutation::from_cycles(c, g.degree())));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Verdict pgl_certificate(std::size_t p) {
  if (p != 3 && p != 5 && p != 7 && p != 11 && p != 13)
    fail(ErrorKind::invalid_argument, "certificate is supported for p in {3,5,7,11,13}");
  const auto g = std::make_shared<const GroupTable>(pgl2p(p));
  auto v = start("pgl_certificate", *g);
  v.params["p"] = p;
  ElementId c = 0;
  for (ElementId x = 0; x < g->order(); ++x)
    if (g->element_order(x) == p + 1) {
      c = x;
      break;
    }
  ElementId gen[] = {c};
  const auto cyc = subgroup_generated(*g, gen);
  std::set<ElementSet> conj;
  for (ElementId x = 0; x < g->order(); ++x) conj.insert(conjugate_set(*g, cyc, x));
  const std::vector<ElementSet> conjugates(conj.begin(), conj.end());
  const bool trivial = pairwise_trivial(conjugates);
  const bool derangements = std::all_of(conjugates.begin(), conjugates.end(),
                                        [&](const ElementSet& h) { return nonidentity_derangements(*g, h); });
  const auto dg = d_G(*g);
  const auto expected = p * (p - 1) / 2;
  // A removal set with fewer labels than there are conjugates misses one of
  // them, since two conjugates share only the identity. That conjugate is a
  // clique of size p + 1, which pins alpha to the star size.
  const bool robust = trivial && derangements && dg.value && conjugates.size() >= *dg.value;
  v.predicted["conjugates"] = expected;
  v.predicted["d_G"] = expected;
  v.predicted["robust"] = true;
  v.computed["conjugates"] = conjugates.size();
  v.computed["pairwise_trivial"] = trivial;
  v.computed["all_derangements"] = derangements;
  v.computed["d_G"] = dg.value ? json(*dg.value) : json(nullptr);
  v.computed["robust"] = robust;
  if (g->order() <= 2048) {
    const auto a = alpha(derangement_graph(g), std::nullopt, nullptr);
    v.computed["alpha"] = a;
    v.predicted["alpha"] = star_size(*g);
  }
  v.witness["cyclic_subgroup"] = cycles_json(*g, cyc);
  v.pass = conjugates.size() == expected && trivial && derangements && dg.value == std::optional<std::size_t>(expected) &&
           robust && (!v.computed.contains("alpha") || v.computed["alpha"] == v.predicted["alpha"]);
  return v;
}

Verdict prime_clique_lower_bound(std::size_t p) {
  if (p != 3 && p != 5 && p != 7) fail(ErrorKind::invalid_argument, "bound is supported for p in {3,5,7}");
  const auto g = std::make_shared<const GroupTable>(symmetric(p));
  auto v = start("prime_clique_lower_bound", *g);
  v.params["p"] = p;
  std::set<ElementSet> subs;
  for (ElementId x = 0; x < g->order(); ++x) {
    const auto ct = g->element(x).cycle_type();
    if (ct.size() == 1 && ct.front() == p) {
      ElementId gen[] = {x};
      subs.insert(subgroup_generated(*g, gen));
    }
  }
  const std::vector<ElementSet> groups(subs.begin(), subs.end());
  const bool trivial = pairwise_trivial(groups);
  // In the derangement graph a subgroup is a clique iff its other elements are derangements.
  bool cliques = std::all_of(groups.begin(), groups.end(),
                             [&](const ElementSet& h) { return nonidentity_derangements(*g, h); });
  if (g->order() <= 2048) {
    const auto gamma = derangement_graph(g);
    cliques = cliques && std::all_of(groups.begin(), groups.end(),
                                     [&](const ElementSet& h) { return contains_subgroup_clique(gamma, h); });
  }
  const auto dg = d_G(*g);
  const auto expected = factorial(p - 2);
  v.predicted["subgroups"] = expected;
  v.computed["subgroups"] = groups.size();
  v.computed["pairwise_trivial"] = trivial;
  v.computed["cliques"] = cliques;
  v.computed["lower_bound"] = groups.size();
  v.computed["d_G"] = dg.value ? json(*dg.value) : json(nullptr);
  v.computed["bound_below_d_G"] = dg.value && groups.size() < *dg.value;
  v.pass = groups.size() == expected && trivial && cliques && dg.value && groups.size() <= *dg.value &&
           (p == 3 || groups.size() < *dg.value);
  return v;
}

Verdict sym_label_formula(std::size_t n) {
  Verdict v;
  v.claim = "sym_label_count";
  v.params["n"] = n;
  const auto c = sym_label_count(n);
  v.predicted["labels"] = c.formula;
  v.computed["labels"] = c.enumerated;
  v.computed["literal_formula"] = c.literal;
  v.computed["literal_disagrees"] = c.literal_disagrees;
  bool dg_ok = true;
  if (n <= 6) {
    const auto dg = d_G(symmetric(n));
    v.computed["d_G"] = dg.value ? json(*dg.value) : json(nullptr);
    dg_ok = dg.value && static_cast<std::int64_t>(*dg.value) == c.enumerated;
  }
  if (c.literal_disagrees)
    v.notes.push_back("the (n-1)!! subtrahend gives " + std::to_string(c.literal) + ", not the enumerated " +
                      std::to_string(c.enumerated));
  v.pass = c.formula == c.enumerated && dg_ok;
  return v;
}

std::vector<std::string> sym5_removed_set() {
  return {"(1,3,2)(4,5)", "(1,2,3)(4,5)", "(1,3)(2,5,4)", "(1,3)(2,4,5)", "(1,5,4)(2,3)", "(1,4,5)(2,3)",
          "(1,3,5,4,2)",  "(1,2,4,5,3)",  "(1,2,5,4,3)",  "(1,3,4,5,2)",  "(1,2,3,5,4)",  "(1,4,5,3,2)",
          "(1,2,3,4,5)",  "(1,5,4,3,2)",  "(1,3,2,4,5)",  "(1,5,4,2,3)",  "(1,3,2,5,4)",  "(1,4,5,2,3)"};
}

std::vector<std::string> sym5_independent_set() {
  return {"()",          "(4,5)",       "(3,4)",       "(3,5,4)",    "(3,4,5)",     "(3,5)",
          "(2,3)",       "(2,3)(4,5)",  "(2,3,4)",     "(2,3,5,4)",  "(2,3,4,5)",   "(2,3,5)",
          "(1,3,2)",     "(1,3,2)(4,5)", "(1,3,4,2)",  "(1,3,5,4,2)", "(1,3,4,5,2)", "(1,3,5,2)",
          "(1,2,3)",     "(1,2,3)(4,5)", "(1,3)",      "(1,3)(4,5)", "(1,2,3,4)",   "(1,2,3,5,4)",
          "(1,3,4)",     "(1,3,5,4)",   "(1,2,3,4,5)", "(1,2,3,5)",  "(1,3,4,5)",   "(1,3,5)"};
}

Verdict sym5_witness() {
  const auto g = std::make_shared<const GroupTable>(symmetric(5));
  auto v = start("sym5_witness", *g);
  const auto d = parse_set(*g, sym5_removed_set());
  const auto a_set = parse_set(*g, sym5_independent_set());
  const auto labels = labels_of(*g, d);
  const auto dg = d_G(*g);
  const auto gamma = derangement_graph(g);
  const auto graph = remove_labels(gamma, labels);
  VertexSet a(a_set.begin(), a_set.end());
  bool independent = is_independent(graph.adjacency(), a);
  if (!independent) {
    // The printed products may compose left to right; inverting every element
    // converts between the two conventions.
    VertexSet inv;
    for (auto x : a) inv.push_back(g->inv(x));
    std::sort(inv.begin(), inv.end());
    if (is_independent(graph.adjacency(), inv)) {
      independent = true;
      v.notes.push_back("the independent set is read with left-to-right composition");
    }
  }
  ElementSet w;
  const auto alpha_removed = alpha(graph, std::nullopt, &w);
  const auto alpha_full = alpha(gamma, std::nullopt, nullptr);
  v.predicted["labels"] = 9;
  v.predicted["d_G"] = 10;
  v.predicted["independent_size"] = 30;
  v.predicted["alpha_full"] = 24;
  v.computed["removed_elements"] = d.size();
  v.computed["labels"] = labels.size();
  v.computed["d_G"] = dg.value ? json(*dg.value) : json(nullptr);
  v.computed["independent_size"] = a_set.size();
  v.computed["independent"] = independent;
  v.computed["alpha_removed"] = alpha_removed;
  v.computed["alpha_full"] = alpha_full;
  v.witness["independent_set"] = cycles_json(*g, w);
  v.pass = d.size() == 18 && labels.size() == 9 && dg.value == std::optional<std::size_t>(10) &&
           a_set.size() == 30 && independent && alpha_removed >= 30 && alpha_full == 24;
  return v;
}

Verdict sym_obstruction_set(std::size_t n, std::uint64_t node_limit) {
  if (n < 4 || n > 6) fail(ErrorKind::invalid_argument, "obstruction set is supported for n in {4,5,6}");
  const auto g = std::make_shared<const GroupTable>(symmetric(n));
  auto v = start("sym_obstruction_set", *g);
  v.params["n"] = n;
  auto both = slice(*g, 0, 1);
  const auto back = slice(*g, 1, 0);
  both.insert(both.end(), back.begin(), back.end());
  std::sort(both.begin(), both.end());
  // C: maps 1 to 2, contains the cycle (3,4), does not contain (1,2).
  std::set<ElementId> excluded;
  for (auto x : both) {
    const auto& p = g->element(x);
    if (p(0) == 1 && p(2) == 3 && p(3) == 2 && p(1) != 0) {
      excluded.insert(x);
      excluded.insert(g->inv(x));
    }
  }
  ElementSet d;
  for (auto x : both)
    if (!excluded.count(x)) d.push_back(x);
  const auto labels = labels_of(*g, d);
  const auto graph = remove_labels(derangement_graph(g), labels);
  SolveOptions copts;
  copts.vertex_transitive = true;
  const auto omega = max_clique(graph.adjacency(), copts);
  SolveOptions aopts;
  aopts.vertex_transitive = true;
  aopts.node_limit = node_limit;
  if (omega.value > 0) aopts.upper_bound = clique_coclique_bound(graph.adjacency(), omega.value);
  const auto r = max_independent_set(graph.adjacency(), aopts);
  v.predicted["max_clique_below"] = n;
  v.computed["max_clique"] = omega.value;
  v.computed["removed_elements"] = d.size();
  v.computed["removed_labels"] = labels.size();
  v.computed["two_way_elements"] = both.size();
  v.computed["alpha"] = r.value;
  v.computed["alpha_exact"] = !r.budget_exhausted;
  v.computed["star"] = star_size(*g);
  v.witness["removed"] = labels_json(*g, labels);
  if (n == 5) v.predicted["alpha"] = 30;
  if (r.budget_exhausted) {
    v.budget_exceeded = true;
    v.notes.push_back("alpha search stopped at the node limit; value is a lower bound");
  }
  if (excluded.empty()) v.notes.push_back("C is empty, so every two-way label is removed");
  v.pass = omega.value < n && (n != 5 || (r.value == 30 && !r.budget_exhausted));
  return v;
}

}  // namespace ekr
