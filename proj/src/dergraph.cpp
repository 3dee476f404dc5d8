#include "ekr/dergraph.hpp"

#include <algorithm>
#include <numeric>

#include "ekr/error.hpp"

namespace ekr {

Label label_of(const GroupTable& g, ElementId d) {
  const auto e = g.inv(d);
  return Label{std::min(d, e), std::max(d, e)};
}

ElementSet derangement_set(const GroupTable& g) {
  ElementSet out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.is_derangement(x)) out.push_back(x);
  return out;
}

LabelSet labels_of(const GroupTable& g, const ElementSet& s) {
  LabelSet out;
  for (auto d : s) {
    if (d >= g.order() || !g.is_derangement(d))
      fail(ErrorKind::invalid_argument, "labels are only defined for derangements");
    out.insert(label_of(g, d));
  }
  return out;
}

LabelSet all_labels(const GroupTable& g) { return labels_of(g, derangement_set(g)); }

ElementSet label_elements(const LabelSet& labels) {
  ElementSet out;
  for (const auto& l : labels) {
    out.push_back(l.lo);
    if (!l.singleton()) out.push_back(l.hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t element_count(const LabelSet& labels) {
  std::size_t n = 0;
  for (const auto& l : labels) n += l.size();
  return n;
}

std::string label_to_string(const GroupTable& g, const Label& l) {
  if (l.singleton()) return "{" + g.element(l.lo).to_cycles() + "}";
  return "{" + g.element(l.lo).to_cycles() + "," + g.element(l.hi).to_cycles() + "}";
}

ElementSet slice(const GroupTable& g, Point i, Point j) {
  if (i == j) fail(ErrorKind::invalid_argument, "slice needs two distinct points");
  if (i >= g.degree() || j >= g.degree()) fail(ErrorKind::invalid_argument, "point outside the action");
  ElementSet out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.is_derangement(x) && g.element(x)(i) == j) out.push_back(x);
  return out;
}

DGValue d_G(const GroupTable& g) {
  const auto n = g.degree();
  // Bucket derangements by (i, d(i)) once rather than rescanning per pair.
  std::vector<LabelSet> buckets(n * n);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (!g.is_derangement(x)) continue;
    const auto& p = g.element(x);
    const auto l = label_of(g, x);
    for (Point i = 0; i < n; ++i) buckets[i * n + p(i)].insert(l);
  }
  DGValue out;
  for (Point i = 0; i < n; ++i) {
    for (Point j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto c = buckets[i * n + j].size();
      if (c == 0) {
        if (!out.empty_slice) out.empty_slice = std::make_pair(i, j);
        continue;
      }
      if (!out.value || c < *out.value) {
        out.value = c;
        out.witness = {i, j};
      }
    }
  }
  if (out.empty_slice) out.value.reset();
  return out;
}

GroupProfile profile(const GroupTable& g) {
  GroupProfile p;
  p.degree = g.degree();
  p.order = g.order();
  p.transitive = is_transitive(g);
  const auto der = derangement_set(g);
  p.derangements = der.size();
  p.labels = labels_of(g, der).size();
  p.star_size = p.order / p.degree;
  if (p.degree < 2) return p;
  auto dg = d_G(g);
  p.d_g = dg.value;
  p.witness = dg.witness;
  if (dg.value) {
    auto both = slice(g, dg.witness.first, dg.witness.second);
    auto back = slice(g, dg.witness.second, dg.witness.first);
    both.insert(both.end(), back.begin(), back.end());
    p.two_way_labels = labels_of(g, both).size();
  }
  return p;
}

LabeledGraph::LabeledGraph(std::shared_ptr<const GroupTable> group, LabelSet connection, LabelSet removed)
    : group_(std::move(group)), connection_(std::move(connection)), removed_(std::move(removed)) {
  if (!group_) fail(ErrorKind::invalid_argument, "graph needs a group");
  const auto& g = *group_;
  for (const auto& l : connection_) {
    if (l.hi >= g.order() || !g.is_derangement(l.lo) || g.inv(l.lo) != l.hi)
      fail(ErrorKind::invalid_argument, "connection set holds a label that is not a derangement pair");
  }
  const auto conn = label_elements(connection_);
  valency_ = conn.size();
  adjacency_ = Graph(g.order());
  for (ElementId x = 0; x < g.order(); ++x)
    for (auto s : conn) adjacency_.add_edge(x, g.mul(x, s));
}

LabeledGraph build(std::shared_ptr<const GroupTable> g, LabelSet connection) {
  return LabeledGraph(std::move(g), std::move(connection));
}

LabeledGraph derangement_graph(std::shared_ptr<const GroupTable> g) {
  auto labels = all_labels(*g);
  return LabeledGraph(std::move(g), std::move(labels));
}

LabeledGraph remove_labels(const LabeledGraph& graph, const LabelSet& labels) {
  LabelSet kept = graph.connection();
  LabelSet removed = graph.removed();
  for (const auto& l : labels) {
    if (!kept.erase(l)) fail(ErrorKind::invalid_argument, "label is not in the connection set");
    removed.insert(l);
  }
  return LabeledGraph(graph.group_ptr(), std::move(kept), std::move(removed));
}

ElementSet binary_star(const GroupTable& g, Point i, Point j) {
  if (i == j) fail(ErrorKind::invalid_argument, "binary star needs two distinct points");
  if (i >= g.degree() || j >= g.degree()) fail(ErrorKind::invalid_argument, "point outside the action");
  ElementSet out;
  for (ElementId x = 0; x < g.order(); ++x) {
    const auto& p = g.element(x);
    if (p(j) == j || p(i) == j) out.push_back(x);
  }
  return out;
}

std::uint64_t derangement_count(std::size_t n) {
  std::uint64_t a = 1, b = 0;  // d_0, d_1
  if (n == 0) return a;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto c = (k - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

std::uint64_t perfect_matchings(std::size_t m) {
  if (m % 2) return 0;
  std::uint64_t r = 1;
  for (std::size_t k = m; k >= 2; k -= 2) r *= k - 1;
  return r;
}

SymLabelCount sym_label_count(std::size_t n) {
  if (n < 3 || n > 9) fail(ErrorKind::invalid_argument, "label count is supported for 3 <= n <= 9");
  SymLabelCount out;
  const auto dn = static_cast<std::int64_t>(derangement_count(n));
  const auto dn2 = static_cast<std::int64_t>(derangement_count(n - 2));
  const auto star = dn / static_cast<std::int64_t>(n - 1);
  out.formula = star - (dn2 - static_cast<std::int64_t>(perfect_matchings(n - 2))) / 2;
  out.literal = star - (dn2 - static_cast<std::int64_t>(perfect_matchings(n))) / 2;
  out.literal_disagrees = out.literal != out.formula;

  // Walk the permutations with 0 -> 1 and keep the lesser of each {p, p^-1}.
  std::vector<Point> rest(n);
  std::iota(rest.begin(), rest.end(), Point{0});
  rest.erase(rest.begin() + 1);
  std::set<std::vector<Point>> seen;
  do {
    std::vector<Point> p(n);
    p[0] = 1;
    std::copy(rest.begin(), rest.end(), p.begin() + 1);
    bool der = true;
    for (std::size_t k = 0; k < n && der; ++k) der = p[k] != k;
    if (!der) continue;
    std::vector<Point> q(n);
    for (std::size_t k = 0; k < n; ++k) q[p[k]] = static_cast<Point>(k);
    seen.insert(std::min(p, q));
  } while (std::next_permutation(rest.begin(), rest.end()));
  out.enumerated = static_cast<std::int64_t>(seen.size());
  return out;
}

}  // namespace ekr
