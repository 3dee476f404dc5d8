#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/group.hpp"

namespace ekr {

/// The pair {d, d^-1}, stored as (min id, max id); lo == hi for involutions.
struct Label {
  ElementId lo = 0;
  ElementId hi = 0;

  bool singleton() const noexcept { return lo == hi; }
  std::size_t size() const noexcept { return singleton() ? 1 : 2; }
  auto operator<=>(const Label&) const = default;
};

using LabelSet = std::set<Label>;

Label label_of(const GroupTable& g, ElementId d);
ElementSet derangement_set(const GroupTable& g);
/// Throws if some element of s is not a derangement.
LabelSet labels_of(const GroupTable& g, const ElementSet& s);
LabelSet all_labels(const GroupTable& g);
/// Elements covered by the labels, sorted.
ElementSet label_elements(const LabelSet& labels);
std::size_t element_count(const LabelSet& labels);
/// "{(1,2,3),(1,3,2)}" style, 1-based.
std::string label_to_string(const GroupTable& g, const Label& l);

/// D_{i->j}: derangements mapping i to j (0-based points).
ElementSet slice(const GroupTable& g, Point i, Point j);

struct DGValue {
  std::optional<std::size_t> value;
  std::pair<Point, Point> witness{0, 0};
  /// Set when some slice is empty, which leaves d_G undefined.
  std::optional<std::pair<Point, Point>> empty_slice;
};

DGValue d_G(const GroupTable& g);

struct GroupProfile {
  std::size_t degree = 0;
  std::size_t order = 0;
  std::size_t derangements = 0;
  std::size_t labels = 0;
  std::size_t star_size = 0;
  std::optional<std::size_t> d_g;
  std::pair<Point, Point> witness{0, 0};
  /// labels(D_{i->j} u D_{j->i}) at the witness pair.
  std::size_t two_way_labels = 0;
  bool transitive = false;
};

GroupProfile profile(const GroupTable& g);

/// Cay(G, C) for an inverse-closed set of derangements C given by labels.
class LabeledGraph {
 public:
  LabeledGraph(std::shared_ptr<const GroupTable> group, LabelSet connection, LabelSet removed = {});

  const GroupTable& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const noexcept { return group_; }
  const LabelSet& connection() const noexcept { return connection_; }
  const LabelSet& removed() const noexcept { return removed_; }
  const Graph& adjacency() const noexcept { return adjacency_; }
  std::size_t size() const noexcept { return adjacency_.size(); }
  /// Number of connection elements, the common vertex degree.
  std::size_t valency() const noexcept { return valency_; }

 private:
  std::shared_ptr<const GroupTable> group_;
  LabelSet connection_;
  LabelSet removed_;
  Graph adjacency_;
  std::size_t valency_ = 0;
};

LabeledGraph build(std::shared_ptr<const GroupTable> g, LabelSet connection);
LabeledGraph derangement_graph(std::shared_ptr<const GroupTable> g);
/// Throws on a label that is not in the connection set.
LabeledGraph remove_labels(const LabeledGraph& graph, const LabelSet& labels);

/// G_{j->j} u G_{i->j}
ElementSet binary_star(const GroupTable& g, Point i, Point j);

/// d_n, the number of derangements of n points.
std::uint64_t derangement_count(std::size_t n);
/// Fixed-point-free involutions of m points: (m-1)!! for even m, else 0.
std::uint64_t perfect_matchings(std::size_t m);

struct SymLabelCount {
  std::int64_t formula = 0;      // d_n/(n-1) - (d_{n-2} - (n-3)!!)/2
  std::int64_t enumerated = 0;   // direct count over D_{1->2}
  std::int64_t literal = 0;      // same formula with (n-1)!! as the subtrahend term
  bool literal_disagrees = false;
};

/// Labels in D_{1->2} of Sym(n), 3 <= n <= 9.
SymLabelCount sym_label_count(std::size_t n);

}  // namespace ekr
