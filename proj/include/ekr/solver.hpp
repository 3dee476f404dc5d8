#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "ekr/dergraph.hpp"
#include "ekr/graph.hpp"

namespace ekr {

inline constexpr std::size_t kSolverGuard = 5000;
inline constexpr std::size_t kNaiveGuard = 24;
inline constexpr std::size_t kAnnihilationGuard = 512;

struct SolverReport {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
  bool early_exit = false;
  /// The node budget ran out, so value is only a lower bound.
  bool budget_exhausted = false;
  double millis = 0.0;
};

struct SolveOptions {
  /// Stop as soon as a solution strictly larger than this is found.
  std::optional<std::size_t> target;
  /// A known upper bound; the search stops once it is reached.
  std::optional<std::size_t> upper_bound;
  /// The graph is vertex-transitive, so some optimum contains vertex 0.
  bool vertex_transitive = false;
  /// 0 means unlimited.
  std::uint64_t node_limit = 0;
};

bool is_independent(const Graph& g, std::span<const Vertex> v);
bool is_clique(const Graph& g, std::span<const Vertex> v);

SolverReport max_clique(const Graph& g, const SolveOptions& opts = {});
SolverReport max_independent_set(const Graph& g, const SolveOptions& opts = {});
/// Exhaustive search over independent sets, for cross-checking.
std::size_t naive_mis(const Graph& g);

/// floor(|V| / clique_size); an upper bound on alpha for vertex-transitive graphs.
std::size_t clique_coclique_bound(std::size_t vertices, std::size_t clique_size);
inline std::size_t clique_coclique_bound(const Graph& g, std::size_t clique_size) {
  return clique_coclique_bound(g.size(), clique_size);
}

/// Alpha of a Cayley graph: fixes the identity and bounds the search with the
/// clique-coclique bound taken from a max clique of the same graph.
SolverReport cayley_alpha(const LabeledGraph& graph, std::optional<std::size_t> target = std::nullopt,
                          std::uint64_t node_limit = 0);

/// True iff every non-identity element of the subgroup h is in the connection set.
bool contains_subgroup_clique(const LabeledGraph& graph, const ElementSet& h);

struct JoinStructure {
  std::size_t parts = 0;
  std::size_t part_size = 0;
};

/// Detects a join of equal parts that each induce a perfect matching.
std::optional<JoinStructure> is_join_of_matchings(const Graph& g);

/// True iff the product of (A - lambda I) over the candidates is the zero matrix.
bool annihilation_check(const Graph& g, std::span<const long long> eigenvalues);

}  // namespace ekr
