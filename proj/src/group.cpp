#include "ekr/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ekr/error.hpp"

namespace ekr {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

GroupTable::GroupTable(std::vector<Permutation> generators, std::vector<Permutation> elements, std::string name)
    : name_(std::move(name)), generators_(std::move(generators)), elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorKind::invalid_argument, "a group has at least one element");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  degree_ = elements_.front().degree();
  if (!elements_.front().is_identity()) fail(ErrorKind::invalid_argument, "element list lacks the identity");

  index_.reserve(elements_.size() * 2);
  for (ElementId i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree() != degree_) fail(ErrorKind::invalid_argument, "elements of mixed degree");
    index_.emplace(elements_[i], i);
  }
  const auto n = elements_.size();
  inverse_.resize(n);
  derangement_.resize(n);
  element_order_.resize(n);
  for (ElementId i = 0; i < n; ++i) {
    inverse_[i] = id_of(elements_[i].inverse());
    derangement_[i] = elements_[i].is_derangement();
    element_order_[i] = elements_[i].order();
  }
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) table_[a * n + b] = id_of(elements_[a] * elements_[b]);
  }
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) fail(ErrorKind::invalid_argument, "permutation " + p.to_cycles() + " is not in the group");
  return it->second;
}

ElementId GroupTable::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return id_of(elements_[a] * elements_[b]);
}

GroupTable GroupTable::renamed(std::string name) const {
  GroupTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

GroupTable close(const std::vector<Permutation>& generators, std::size_t cap, std::string name, std::size_t degree) {
  if (cap < 1) fail(ErrorKind::invalid_argument, "closure cap must be at least 1");
  if (!generators.empty()) degree = generators.front().degree();
  if (degree == 0) degree = 1;
  for (const auto& g : generators)
    if (g.degree() != degree) fail(ErrorKind::invalid_argument, "generators have different degrees");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : generators) {
      auto next = elements[k] * g;
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          fail(ErrorKind::guard_exceeded, "group closure exceeds cap of " + std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return GroupTable(generators, std::move(elements), std::move(name));
}

std::vector<std::vector<Point>> orbits(const GroupTable& g) {
  const auto n = g.degree();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<Point>> result;
  for (std::size_t start = 0; start < n; ++start) {
    if (owner[start] >= 0) continue;
    const int label = static_cast<int>(result.size());
    std::vector<Point> orbit{static_cast<Point>(start)};
    owner[start] = label;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& gen : g.generators()) {
        auto img = gen(orbit[k]);
        if (owner[img] < 0) {
          owner[img] = label;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(const GroupTable& g) { return orbits(g).size() == 1; }

bool is_regular(const GroupTable& g) { return is_transitive(g) && g.order() == g.degree(); }

bool is_subgroup(const GroupTable& g, const ElementSet& h) {
  if (h.empty() || !std::binary_search(h.begin(), h.end(), GroupTable::identity())) return false;
  for (auto a : h) {
    if (a >= g.order()) return false;
    for (auto b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) return false;
  }
  return true;
}

namespace {

// Closure by right multiplication; returns nullopt once the size passes `cap`.
std::optional<ElementSet> closure_capped(const GroupTable& g, std::span<const ElementId> gens, std::size_t cap) {
  std::vector<bool> seen(g.order(), false);
  ElementSet out{GroupTable::identity()};
  seen[GroupTable::identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto s : gens) {
      auto next = g.mul(out[k], s);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
        if (out.size() > cap) return std::nullopt;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElementSet subgroup_generated(const GroupTable& g, std::span<const ElementId> gens) {
  return *closure_capped(g, gens, g.order());
}

ElementSet conjugate_set(const GroupTable& g, const ElementSet& h, ElementId by) {
  ElementSet out;
  out.reserve(h.size());
  const auto by_inv = g.inv(by);
  for (auto x : h) out.push_back(g.mul(g.mul(by, x), by_inv));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet conjugacy_closure(const GroupTable& g, const ElementSet& h) {
  std::vector<bool> mark(g.order(), false);
  for (ElementId c = 0; c < g.order(); ++c)
    for (auto x : conjugate_set(g, h, c)) mark[x] = true;
  ElementSet out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (mark[x]) out.push_back(x);
  return out;
}

ElementSet core(const GroupTable& g, const ElementSet& h) {
  ElementSet out;
  for (auto x : h) {
    bool keep = true;
    for (ElementId c = 0; c < g.order() && keep; ++c)
      keep = std::binary_search(h.begin(), h.end(), g.mul(g.mul(c, x), g.inv(c)));
    if (keep) out.push_back(x);
  }
  return out;
}

CosetAction coset_action(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) fail(ErrorKind::not_a_subgroup, "coset action needs a subgroup");
  const auto n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<ElementSet> cosets;
  // Scanning representatives in id order yields cosets sorted by their least element.
  for (ElementId rep = 0; rep < n; ++rep) {
    if (coset_of[rep] >= 0) continue;
    ElementSet c;
    for (auto x : h) c.push_back(g.mul(rep, x));
    std::sort(c.begin(), c.end());
    for (auto x : c) coset_of[x] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const auto degree = cosets.size();
  std::vector<Permutation> induced;
  induced.reserve(n);
  for (ElementId x = 0; x < n; ++x) {
    std::vector<Point> im(degree);
    for (std::size_t c = 0; c < degree; ++c)
      im[c] = static_cast<Point>(coset_of[g.mul(x, cosets[c].front())]);
    induced.emplace_back(std::move(im));
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(induced[g.id_of(s)]);
  GroupTable action(gens, induced, g.name() + " on cosets");
  std::vector<ElementId> image_of(n);
  for (ElementId x = 0; x < n; ++x) image_of[x] = action.id_of(induced[x]);
  const bool faithful = action.order() == n;
  return CosetAction{std::move(action), std::move(image_of), std::move(cosets), faithful};
}

std::vector<ElementSet> enumerate_subgroups(const GroupTable& g, std::size_t order_cap) {
  if (g.order() > kSubgroupGuard)
    fail(ErrorKind::guard_exceeded, "subgroup enumeration is limited to groups of order <= " +
                                        std::to_string(kSubgroupGuard));
  struct Entry {
    ElementSet elements;
    std::vector<ElementId> gens;
  };
  std::set<ElementSet> known;
  std::vector<Entry> found;

  // Distinct cyclic subgroups, each remembered by its least generator.
  std::vector<ElementId> cyclic_gens;
  {
    std::set<ElementSet> cyclic;
    for (ElementId x = 0; x < g.order(); ++x) {
      ElementId one[] = {x};
      if (cyclic.insert(subgroup_generated(g, one)).second) cyclic_gens.push_back(x);
    }
  }
  for (auto x : cyclic_gens) {
    ElementId one[] = {x};
    auto c = subgroup_generated(g, one);
    if (c.size() <= order_cap && known.insert(c).second) found.push_back({c, {x}});
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (auto x : cyclic_gens) {
      if (std::binary_search(found[k].elements.begin(), found[k].elements.end(), x)) continue;
      auto gens = found[k].gens;
      gens.push_back(x);
      auto joined = closure_capped(g, gens, order_cap);
      if (!joined) continue;
      if (known.insert(*joined).second) found.push_back({std::move(*joined), std::move(gens)});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.elements));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<FaithfulAction> faithful_transitive_actions(const GroupTable& g) {
  std::vector<FaithfulAction> out;
  for (auto& h : enumerate_subgroups(g, g.order())) {
    if (core(g, h).size() == 1) out.push_back({h, g.order() / h.size()});
  }
  return out;
}

}  // namespace ekr
