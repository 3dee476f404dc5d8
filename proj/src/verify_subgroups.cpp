#include <algorithm>
#include <cmath>

#include "ekr/error.hpp"
#include "ekr/parallel.hpp"
#include "ekr/verify.hpp"
#include "verify_util.hpp"

namespace ekr {

using namespace detail;

namespace {

GroupPtr subgroup_table(const GroupTable& g, const ElementSet& h, const std::string& name) {
  std::vector<Permutation> elems, gens;
  for (auto x : h) {
    elems.push_back(g.element(x));
    if (x != GroupTable::identity()) gens.push_back(g.element(x));
  }
  return std::make_shared<const GroupTable>(std::move(gens), std::move(elems), name);
}

std::size_t count_derangements(const GroupTable& g, const ElementSet& h) {
  return static_cast<std::size_t>(std::count_if(h.begin(), h.end(), [&](ElementId x) { return g.is_derangement(x); }));
}

std::size_t orbit_count(const GroupTable& g, const ElementSet& h) {
  std::vector<int> owner(g.degree(), -1);
  std::size_t count = 0;
  for (Point s = 0; s < g.degree(); ++s) {
    if (owner[s] >= 0) continue;
    for (auto x : h) owner[g.element(x)(s)] = static_cast<int>(count);
    ++count;
  }
  return count;
}

}  // namespace

Verdict hom_transfer(const GroupPtr& g, const ElementSet& h, const LabelSet& d) {
  auto v = start("hom_transfer", *g);
  v.params["subgroup_order"] = h.size();
  v.params["removed"] = labels_json(*g, d);
  if (!is_subgroup(*g, h)) fail(ErrorKind::not_a_subgroup, "H is not a subgroup of G");
  if (!is_transitive(*g) || !transitive_on_points(*g, h))
    fail(ErrorKind::invalid_argument, "both H and G must be transitive");
  const auto n = g->degree();
  const auto ht = subgroup_table(*g, h, "H");
  const auto alpha_h = alpha(derangement_graph(ht), std::nullopt, nullptr);
  const auto alpha_g = alpha(derangement_graph(g), std::nullopt, nullptr);
  // |V(X)| / alpha(X) <= |V(Y)| / alpha(Y), cross-multiplied.
  const bool ratio = h.size() * alpha_g <= g->order() * alpha_h;
  const bool h_ekr = alpha_h == h.size() / n;
  const bool g_ekr = alpha_g == g->order() / n;
  v.computed["alpha_H"] = alpha_h;
  v.computed["alpha_G"] = alpha_g;
  v.computed["ratio_bound"] = ratio;
  v.computed["H_ekr"] = h_ekr;
  v.computed["G_ekr"] = g_ekr;
  v.predicted["ratio_bound"] = true;
  if (h_ekr) v.predicted["G_ekr"] = true;
  bool removal_ok = true;
  if (!d.empty()) {
    bool disjoint = true;
    for (auto x : label_elements(d)) disjoint = disjoint && !std::binary_search(h.begin(), h.end(), x);
    if (!disjoint) return hypothesis_failed(std::move(v), "removed labels meet H");
    const auto a = alpha(remove_labels(derangement_graph(g), d), std::nullopt, nullptr);
    v.computed["alpha_removed"] = a;
    if (h_ekr) {
      v.predicted["alpha_removed"] = star_size(*g);
      removal_ok = a == star_size(*g);
    }
  }
  v.pass = ratio && (!h_ekr || g_ekr) && removal_ok;
  return v;
}

Verdict subgroup_matching(const GroupPtr& g) {
  auto v = start("subgroup_matching", *g);
  const auto n = g->degree();
  if (n % 2) return hypothesis_failed(std::move(v), "odd degree");
  if (!is_transitive(*g)) return hypothesis_failed(std::move(v), "group is not transitive");
  // H would have n/2 orbits and a derangement, so every orbit has size 2 and H
  // is an elementary abelian 2-group of order at most 2^(n/2).
  const auto half = n / 2;
  const double limit = static_cast<double>(half) * std::ldexp(1.0, static_cast<int>(half));
  if (static_cast<double>(g->order()) > limit || g->order() % half)
    return hypothesis_failed(std::move(v), "order rules out an index n/2 subgroup with n/2 orbits");
  if (g->order() > kSubgroupGuard) {
    v.budget_exceeded = true;
    v.notes.push_back("subgroup search is limited to order " + std::to_string(kSubgroupGuard));
    return v;
  }
  const auto hsize = g->order() / half;
  const auto subs = enumerate_subgroups(*g, g->order());
  std::size_t unique_der = 0;
  const ElementSet* found = nullptr;
  for (const auto& h : subs) {
    if (count_derangements(*g, h) != 1) continue;
    ++unique_der;
    if (!found && h.size() == hsize && orbit_count(*g, h) == half) found = &h;
  }
  v.computed["unique_derangement_subgroups"] = unique_der;
  if (!found)
    return hypothesis_failed(std::move(v), unique_der ? "no unique-derangement subgroup of index n/2 with n/2 orbits"
                                                      : "no subgroup has a unique derangement");
  const auto& h = *found;
  ElementId sigma = 0;
  for (auto x : h)
    if (g->is_derangement(x)) sigma = x;
  const auto gamma = derangement_graph(g);
  const auto join = is_join_of_matchings(gamma.adjacency());
  const auto a0 = alpha(gamma, std::nullopt, nullptr);
  const auto a1 = alpha(remove_labels(gamma, LabelSet{label_of(*g, sigma)}), std::nullopt, nullptr);
  const auto hs = static_cast<long long>(hsize);
  const long long top = static_cast<long long>(half - 1) * hs + 1;
  // Adjacency spectrum of a join of n/2 perfect matchings on |H| vertices each.
  const std::vector<long long> spectrum{top, 1, -1, 1 - hs};
  const std::vector<long long> printed{top, 1, -1, -(hs + 1)};
  std::optional<bool> annihilates, printed_annihilates;
  if (g->order() <= kAnnihilationGuard) {
    annihilates = annihilation_check(gamma.adjacency(), spectrum);
    printed_annihilates = annihilation_check(gamma.adjacency(), printed);
  }
  v.params["H_order"] = hsize;
  v.params["sigma"] = g->element(sigma).to_cycles();
  v.predicted["join"] = {half, hsize};
  v.predicted["alpha"] = hsize / 2;
  v.predicted["alpha_removed"] = hsize;
  v.predicted["spectrum"] = spectrum;
  v.computed["join"] = join ? json{join->parts, join->part_size} : json(nullptr);
  v.computed["alpha"] = a0;
  v.computed["alpha_removed"] = a1;
  v.computed["ekr"] = a0 == star_size(*g);
  v.computed["annihilates"] = annihilates ? json(*annihilates) : json(nullptr);
  v.computed["printed_set"] = printed;
  v.computed["printed_set_annihilates"] = printed_annihilates ? json(*printed_annihilates) : json(nullptr);
  v.witness["H"] = cycles_json(*g, h);
  if (printed_annihilates && !*printed_annihilates)
    v.notes.push_back("the eigenvalue set with -(|H|+1) does not annihilate; the smallest eigenvalue is 1-|H|");
  v.pass = join && join->parts == half && join->part_size == hsize && a0 == hsize / 2 && a1 == hsize &&
           a0 == star_size(*g) && annihilates.value_or(true);
  return v;
}

std::optional<std::size_t> table_count(std::size_t degree) {
  switch (degree) {
    case 4: return 1;
    case 6: return 2;
    case 8: return 12;
    case 10: return 2;
    case 12: return 21;
    case 14: return 3;
    case 18: return 13;
    case 20: return 23;
    default: return std::nullopt;
  }
}

Verdict catalog_scan(const std::vector<CatalogEntry>& catalog, std::size_t degree, std::size_t workers) {
  Verdict v;
  v.claim = "catalog_scan";
  v.params["degree"] = degree;
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : catalog)
    if (e.degree == degree) entries.push_back(&e);
  const std::size_t half = degree / 2;
  const std::size_t cap = degree % 2 ? 1 : half * (std::size_t{1} << std::min<std::size_t>(half, 20));
  struct Row {
    std::string name;
    std::optional<std::size_t> order;
    bool hypothesis = false;
    bool pass = false;
    std::size_t h_order = 0;
    std::string note;
  };
  const auto rows = parallel_map(entries.size(), workers, [&](std::size_t i) {
    const auto& e = *entries[i];
    Row r;
    r.name = e.name;
    std::vector<Permutation> gens;
    for (const auto& s : e.generators) gens.push_back(Permutation::from_cycles(s, degree));
    GroupPtr g;
    try {
      g = std::make_shared<const GroupTable>(close(gens, cap, e.name, degree));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::guard_exceeded) throw;
      r.note = "order exceeds " + std::to_string(cap);
      return r;
    }
    r.order = g->order();
    const auto sm = subgroup_matching(g);
    r.hypothesis = sm.hypothesis && !sm.budget_exceeded;
    r.pass = sm.pass;
    if (sm.params.contains("H_order")) r.h_order = sm.params["H_order"].get<std::size_t>();
    if (!sm.notes.empty()) r.note = sm.notes.front();
    return r;
  });
  std::size_t count = 0;
  json groups = json::array();
  for (const auto& r : rows) {
    count += r.pass;
    groups.push_back({{"name", r.name},
                      {"order", r.order ? json(*r.order) : json(nullptr)},
                      {"hypothesis", r.hypothesis},
                      {"pass", r.pass},
                      {"H_order", r.h_order},
                      {"note", r.note}});
  }
  v.computed["entries"] = entries.size();
  v.computed["count"] = count;
  v.computed["groups"] = groups;
  if (const auto ref = table_count(degree)) {
    v.predicted["count"] = *ref;
    v.pass = count == *ref;
  } else {
    v.notes.push_back("no reference count for this degree");
    v.pass = true;
  }
  return v;
}

}  // namespace ekr
