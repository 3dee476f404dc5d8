#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "ekr/dergraph.hpp"
#include "ekr/error.hpp"
#include "ekr/families.hpp"
#include "ekr/solver.hpp"

using namespace ekr;

namespace {

std::shared_ptr<const GroupTable> P(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("independence and clique predicates") {
  const auto k4 = Graph::complete(4);
  const VertexSet one{2};
  CHECK(is_independent(k4, one));
  CHECK(is_clique(k4, one));
  const VertexSet pair{0, 3};
  CHECK(is_clique(k4, pair));
  CHECK_FALSE(is_independent(k4, pair));
  CHECK_THROWS_AS(is_independent(k4, VertexSet{7}), Error);
}

TEST_CASE("alpha of small graphs") {
  CHECK(max_independent_set(Graph::cycle(5)).value == 2);
  CHECK(naive_mis(Graph::cycle(5)) == 2);
  CHECK(max_independent_set(Graph::complete(4)).value == 1);
  CHECK(naive_mis(Graph::complete(4)) == 1);
  CHECK(max_independent_set(Graph(7)).value == 7);
  CHECK(max_independent_set(Graph(0)).value == 0);
  CHECK_THROWS_AS(naive_mis(Graph(25)), Error);
}

TEST_CASE("solver agrees with the exhaustive oracle on 200 random graphs") {
  std::mt19937_64 rng(20241014);
  std::uniform_int_distribution<std::size_t> size(1, 24);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, size(rng), density(rng));
    const auto r = max_independent_set(g);
    CHECK(r.value == naive_mis(g));
    CHECK(r.witness.size() == r.value);
    CHECK(is_independent(g, r.witness));
    const auto c = max_clique(g);
    CHECK(is_clique(g, c.witness));
    CHECK(c.value == naive_mis(g.complement()));
  }
}

TEST_CASE("alpha of derangement graphs") {
  CHECK(cayley_alpha(derangement_graph(P(symmetric(4)))).value == 6);
  CHECK(cayley_alpha(derangement_graph(P(generalized_dihedral(AbelianSpec::canonical({6}))))).value == 2);
  const auto pgl3 = derangement_graph(P(pgl2p(3)));
  const auto r = cayley_alpha(pgl3);
  CHECK(r.value == 6);
  CHECK(is_independent(pgl3.adjacency(), r.witness));
  // plain search without the Cayley shortcuts
  CHECK(max_independent_set(pgl3.adjacency()).value == 6);
}

TEST_CASE("target and node limit") {
  const auto gamma = derangement_graph(P(symmetric(5)));
  SolveOptions o;
  o.target = 10;
  const auto r = max_independent_set(gamma.adjacency(), o);
  CHECK(r.early_exit);
  CHECK(r.value > 10);
  CHECK(is_independent(gamma.adjacency(), r.witness));
  SolveOptions lim;
  lim.node_limit = 5;
  CHECK(max_independent_set(gamma.adjacency(), lim).budget_exhausted);
  CHECK_THROWS_AS(max_independent_set(Graph(kSolverGuard + 1)), Error);
}

TEST_CASE("clique-coclique bound") {
  const auto s4 = derangement_graph(P(symmetric(4)));
  const auto w = max_clique(s4.adjacency()).value;
  CHECK(w == 4);
  CHECK(clique_coclique_bound(s4.adjacency(), w) == 6);
  const auto pg = derangement_graph(P(pgl2p(3)));
  CHECK(max_clique(pg.adjacency()).value == 4);
  CHECK(clique_coclique_bound(pg.adjacency(), 4) == 6);
  CHECK(clique_coclique_bound(Graph::complete(5), 5) == 1);
  CHECK_THROWS_AS(clique_coclique_bound(5, 0), Error);
  // an upper bound on every vertex-transitive instance here
  for (auto g : {P(symmetric(5)), P(pgl2p(5)), P(matching_join(3)), P(agl1p(7)), P(dihedral(12))}) {
    const auto gamma = derangement_graph(g);
    const auto c = max_clique(gamma.adjacency()).value;
    CHECK(cayley_alpha(gamma).value <= clique_coclique_bound(gamma.adjacency(), c));
  }
}

TEST_CASE("subgroup cliques") {
  const auto agl = P(agl1p(5));
  ElementSet kernel = derangement_set(*agl);
  kernel.insert(kernel.begin(), GroupTable::identity());
  const auto gamma = derangement_graph(agl);
  CHECK(contains_subgroup_clique(gamma, kernel));
  CHECK(is_clique(gamma.adjacency(), kernel));
  const auto cut = remove_labels(gamma, {label_of(*agl, kernel[1])});
  CHECK_FALSE(contains_subgroup_clique(cut, kernel));
  // a cyclic subgroup of order 4 in PGL(2,3)
  const auto pg = P(pgl2p(3));
  ElementId four = 0;
  for (ElementId x = 0; x < pg->order(); ++x)
    if (pg->element_order(x) == 4) four = x;
  const std::vector<ElementId> gen{four};
  const auto c4 = subgroup_generated(*pg, gen);
  CHECK(c4.size() == 4);
  CHECK(contains_subgroup_clique(derangement_graph(pg), c4));
  CHECK_THROWS_AS(contains_subgroup_clique(gamma, ElementSet{0, kernel[1]}), Error);
}

TEST_CASE("join of matchings") {
  const auto j2 = is_join_of_matchings(derangement_graph(P(matching_join(2))).adjacency());
  REQUIRE(j2);
  CHECK(j2->parts == 2);
  CHECK(j2->part_size == 4);
  const auto j3 = is_join_of_matchings(derangement_graph(P(matching_join(3))).adjacency());
  REQUIRE(j3);
  CHECK(j3->parts == 3);
  CHECK(j3->part_size == 8);
  CHECK_FALSE(is_join_of_matchings(derangement_graph(P(symmetric(4))).adjacency()));
  const auto k2 = is_join_of_matchings(Graph::complete(2));
  REQUIRE(k2);
  CHECK(k2->parts == 1);
  CHECK(k2->part_size == 2);
  for (std::size_t m : {2, 3, 4}) {
    const auto gamma = derangement_graph(P(matching_join(m)));
    const auto j = is_join_of_matchings(gamma.adjacency());
    REQUIRE(j);
    CHECK(cayley_alpha(gamma).value == j->part_size / 2);
  }
}

TEST_CASE("integer annihilation") {
  const auto a2 = derangement_graph(P(matching_join(2))).adjacency();
  const auto a3 = derangement_graph(P(matching_join(3))).adjacency();
  const std::vector<long long> s2{5, 1, -1, -3}, s3{17, 1, -1, -7};
  CHECK(annihilation_check(a2, s2));
  CHECK(annihilation_check(a3, s3));
  // the smallest eigenvalue of a join of m matchings on v vertices is 1 - v, not -(v + 1)
  const std::vector<long long> w2{5, 1, -1, -5}, w3{17, 1, -1, -9};
  CHECK_FALSE(annihilation_check(a2, w2));
  CHECK_FALSE(annihilation_check(a3, w3));
  const std::vector<long long> one{1};
  CHECK_FALSE(annihilation_check(Graph::complete(3), one));
  const std::vector<long long> k3{2, -1};
  CHECK(annihilation_check(Graph::complete(3), k3));
  CHECK_THROWS_AS(annihilation_check(Graph(kAnnihilationGuard + 1), k3), Error);
}

TEST_CASE("alpha never drops when labels are removed") {
  const auto g = P(generalized_dihedral(AbelianSpec::canonical({8})));
  auto gamma = derangement_graph(g);
  std::size_t last = cayley_alpha(gamma).value;
  for (const auto& l : LabelSet(gamma.connection())) {
    gamma = remove_labels(gamma, {l});
    const auto a = cayley_alpha(gamma).value;
    CHECK(a >= last);
    last = a;
  }
  CHECK(last == g->order());
}
