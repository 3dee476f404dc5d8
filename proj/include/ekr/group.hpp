#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ekr/permutation.hpp"

namespace ekr {

using ElementId = std::uint32_t;
/// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;
using Point = Permutation::Point;

inline constexpr std::size_t kDefaultClosureCap = 50'000;
inline constexpr std::size_t kSubgroupGuard = 200;

/// A fully enumerated permutation group.
///
/// Elements are stored in lexicographic order of their image arrays, so ids are
/// reproducible for a given generating set and the identity is always id 0.
/// Immutable after construction.
class GroupTable {
 public:
  GroupTable(std::vector<Permutation> generators, std::vector<Permutation> elements, std::string name);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(ElementId id) const { return elements_.at(id); }

  static constexpr ElementId identity() noexcept { return 0; }

  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws unless p is an element.
  ElementId id_of(const Permutation& p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// a^-1 * b
  ElementId quotient(ElementId a, ElementId b) const { return mul(inverse_[a], b); }
  bool is_derangement(ElementId a) const { return derangement_[a]; }
  std::uint64_t element_order(ElementId a) const { return element_order_[a]; }

  GroupTable renamed(std::string name) const;

 private:
  std::size_t degree_ = 1;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverse_;
  std::vector<bool> derangement_;
  std::vector<std::uint64_t> element_order_;
  std::vector<ElementId> table_;  // full Cayley table for small groups, row-major
};

/// Closes the generators under composition. An empty list gives the trivial
/// group of the given degree (1 when degree is 0).
GroupTable close(const std::vector<Permutation>& generators, std::size_t cap = kDefaultClosureCap,
                 std::string name = {}, std::size_t degree = 0);

std::vector<std::vector<Point>> orbits(const GroupTable& g);
bool is_transitive(const GroupTable& g);
/// Transitive with |G| equal to the degree.
bool is_regular(const GroupTable& g);

bool is_subgroup(const GroupTable& g, const ElementSet& h);
/// Smallest subgroup containing the given elements.
ElementSet subgroup_generated(const GroupTable& g, std::span<const ElementId> gens);
/// Largest normal subgroup of G contained in H.
ElementSet core(const GroupTable& g, const ElementSet& h);
/// g * h * g^-1 for every h in H.
ElementSet conjugate_set(const GroupTable& g, const ElementSet& h, ElementId by);
/// Elements of G conjugate to some element of H.
ElementSet conjugacy_closure(const GroupTable& g, const ElementSet& h);

struct CosetAction {
  GroupTable action;
  /// Element-id in `action` of the permutation induced by each element of G.
  std::vector<ElementId> image_of;
  /// Left cosets gH in the point order used by `action`.
  std::vector<ElementSet> cosets;
  bool faithful = false;
};

/// Action of G by left multiplication on the left cosets of H.
CosetAction coset_action(const GroupTable& g, const ElementSet& h);

/// Every subgroup of order at most `order_cap`, each once, sorted by (order, ids).
std::vector<ElementSet> enumerate_subgroups(const GroupTable& g, std::size_t order_cap);

struct FaithfulAction {
  ElementSet subgroup;
  std::size_t degree = 0;
};

/// One entry per core-free subgroup; the induced action has degree |G:H|.
std::vector<FaithfulAction> faithful_transitive_actions(const GroupTable& g);

}  // namespace ekr
