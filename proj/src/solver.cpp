#include "ekr/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "ekr/error.hpp"

namespace ekr {

namespace {

using Word = Graph::Word;
constexpr std::size_t kBits = Graph::kWordBits;

void check_vertices(const Graph& g, std::span<const Vertex> v) {
  for (auto x : v)
    if (x >= g.size()) fail(ErrorKind::invalid_argument, "vertex " + std::to_string(x) + " is not in the graph");
}

bool any(const std::vector<Word>& s) {
  return std::any_of(s.begin(), s.end(), [](Word w) { return w != 0; });
}

// Bit-parallel branch and bound in the style of BBMC: the candidate set is
// greedily colored and the color classes bound the clique that can still be
// added. Vertices are renumbered by non-increasing degree.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const SolveOptions& opts) : n_(g.size()), words_(g.words()), opts_(opts) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::vector<std::size_t> deg(n_);
    for (Vertex v = 0; v < n_; ++v) deg[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    pos_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) pos_[order_[k]] = static_cast<Vertex>(k);
    adj_.assign(n_ * words_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g.neighbors(u)) set(row(pos_[u]), pos_[v]);
  }

  SolverReport run() {
    auto start = std::chrono::steady_clock::now();
    SolverReport r;
    if (n_ > 0) {
      std::vector<Word> p(words_, 0);
      if (opts_.vertex_transitive) {
        const auto v0 = pos_[0];
        current_.push_back(v0);
        record();
        std::copy(row(v0), row(v0) + words_, p.begin());
        if (!stop_ && any(p)) expand(p);
      } else {
        for (std::size_t v = 0; v < n_; ++v) set(p.data(), static_cast<Vertex>(v));
        expand(p);
      }
    }
    r.value = best_.size();
    for (auto v : best_) r.witness.push_back(order_[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = nodes_;
    r.early_exit = early_;
    r.budget_exhausted = exhausted_;
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  Word* row(Vertex v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  static void set(Word* s, Vertex v) { s[v / kBits] |= Word{1} << (v % kBits); }
  static void clear(Word* s, Vertex v) { s[v / kBits] &= ~(Word{1} << (v % kBits)); }

  void record() {
    if (current_.size() <= best_.size()) return;
    best_ = current_;
    if (opts_.target && best_.size() > *opts_.target) {
      early_ = true;
      stop_ = true;
    }
    if (opts_.upper_bound && best_.size() >= *opts_.upper_bound) stop_ = true;
  }

  void expand(std::vector<Word>& p) {
    if (opts_.node_limit && nodes_ >= opts_.node_limit) {
      exhausted_ = true;
      stop_ = true;
      return;
    }
    ++nodes_;
    // Greedy coloring of p; each color class is independent, so the number of
    // classes bounds any clique inside p.
    std::vector<Vertex> verts;
    std::vector<std::size_t> colors;
    std::vector<Word> u = p, q(words_);
    std::size_t color = 0;
    while (any(u)) {
      ++color;
      q = u;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const auto v = static_cast<Vertex>(w * kBits + static_cast<std::size_t>(std::countr_zero(q[w])));
          clear(u.data(), v);
          clear(q.data(), v);
          const Word* a = row(v);
          for (std::size_t k = w; k < words_; ++k) q[k] &= ~a[k];
          verts.push_back(v);
          colors.push_back(color);
        }
      }
    }
    std::vector<Word> next(words_);
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colors[idx] <= best_.size()) return;
      const auto v = verts[idx];
      const Word* a = row(v);
      bool nonempty = false;
      for (std::size_t k = 0; k < words_; ++k) {
        next[k] = p[k] & a[k];
        nonempty |= next[k] != 0;
      }
      current_.push_back(v);
      if (nonempty) {
        auto copy = next;
        expand(copy);
      } else {
        record();
      }
      current_.pop_back();
      if (stop_) return;
      clear(p.data(), v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  SolveOptions opts_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
  std::vector<Word> adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool early_ = false;
  bool exhausted_ = false;
};

template <typename T>
bool annihilates(const Graph& g, std::span<const long long> lambdas) {
  const auto n = g.size();
  std::vector<std::vector<Vertex>> nbr(n);
  for (Vertex v = 0; v < n; ++v) nbr[v] = g.neighbors(v);
  // m = A - lambda_0 I
  std::vector<T> m(n * n, T(0));
  for (Vertex r = 0; r < n; ++r) {
    for (auto c : nbr[r]) m[r * n + c] = T(1);
    m[r * n + r] = T(-lambdas[0]);
  }
  std::vector<T> out(n * n);
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    const T lam(lambdas[k]);
    // (M A)[r][c] = sum of M[r][t] over neighbours t of c, since A is symmetric.
    for (std::size_t r = 0; r < n; ++r) {
      const T* mr = &m[r * n];
      for (std::size_t c = 0; c < n; ++c) {
        T s(0);
        for (auto t : nbr[c]) s += mr[t];
        out[r * n + c] = s - lam * mr[c];
      }
    }
    m.swap(out);
  }
  return std::all_of(m.begin(), m.end(), [](const T& x) { return x == 0; });
}

}  // namespace

bool is_independent(const Graph& g, std::span<const Vertex> v) {
  check_vertices(g, v);
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] == v[b] || g.adjacent(v[a], v[b])) return false;
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> v) {
  check_vertices(g, v);
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] == v[b] || !g.adjacent(v[a], v[b])) return false;
  return true;
}

SolverReport max_clique(const Graph& g, const SolveOptions& opts) {
  if (g.size() > kSolverGuard)
    fail(ErrorKind::guard_exceeded, "solver is limited to " + std::to_string(kSolverGuard) + " vertices");
  return CliqueSearch(g, opts).run();
}

SolverReport max_independent_set(const Graph& g, const SolveOptions& opts) {
  if (g.size() > kSolverGuard)
    fail(ErrorKind::guard_exceeded, "solver is limited to " + std::to_string(kSolverGuard) + " vertices");
  return CliqueSearch(g.complement(), opts).run();
}

std::size_t naive_mis(const Graph& g) {
  const auto n = g.size();
  if (n > kNaiveGuard) fail(ErrorKind::guard_exceeded, "naive search is limited to 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (auto u : g.neighbors(v)) nbr[v] |= 1u << u;
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t forbidden, std::size_t size) -> void {
    if (v == n) {
      best = std::max(best, size);
      return;
    }
    self(self, v + 1, forbidden, size);
    if (!((forbidden >> v) & 1u)) self(self, v + 1, forbidden | nbr[v], size + 1);
  };
  rec(rec, 0, 0, 0);
  return best;
}

std::size_t clique_coclique_bound(std::size_t vertices, std::size_t clique_size) {
  if (clique_size == 0) fail(ErrorKind::invalid_argument, "clique size must be positive");
  return vertices / clique_size;
}

SolverReport cayley_alpha(const LabeledGraph& graph, std::optional<std::size_t> target, std::uint64_t node_limit) {
  const auto& adj = graph.adjacency();
  SolveOptions copts;
  copts.vertex_transitive = true;
  const auto omega = max_clique(adj, copts);
  SolveOptions opts;
  opts.vertex_transitive = true;
  opts.target = target;
  opts.node_limit = node_limit;
  if (omega.value > 0) opts.upper_bound = clique_coclique_bound(adj, omega.value);
  auto r = max_independent_set(adj, opts);
  r.nodes += omega.nodes;
  r.millis += omega.millis;
  return r;
}

bool contains_subgroup_clique(const LabeledGraph& graph, const ElementSet& h) {
  const auto& g = graph.group();
  if (!is_subgroup(g, h)) fail(ErrorKind::not_a_subgroup, "clique check needs a subgroup");
  for (auto x : h) {
    if (x == GroupTable::identity()) continue;
    if (!g.is_derangement(x) || !graph.connection().count(label_of(g, x))) return false;
  }
  return true;
}

std::optional<JoinStructure> is_join_of_matchings(const Graph& g) {
  const auto n = g.size();
  if (n == 0) return std::nullopt;
  // Components of the complement: the parts of a join.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> part{s};
    comp[s] = static_cast<int>(parts.size());
    for (std::size_t k = 0; k < part.size(); ++k) {
      for (Vertex v = 0; v < n; ++v) {
        if (v == part[k] || comp[v] >= 0 || g.adjacent(part[k], v)) continue;
        comp[v] = static_cast<int>(parts.size());
        part.push_back(v);
      }
    }
    parts.push_back(std::move(part));
  }
  if (parts.size() == n) {
    // Complete graph: a join of n/2 copies of K2.
    if (n % 2) return std::nullopt;
    return JoinStructure{n / 2, 2};
  }
  const auto v = parts.front().size();
  if (v < 4 || v % 2) return std::nullopt;
  for (const auto& part : parts) {
    if (part.size() != v) return std::nullopt;
    for (auto x : part) {
      std::size_t inside = 0;
      for (auto y : part) inside += g.adjacent(x, y);
      if (inside != 1) return std::nullopt;
    }
  }
  return JoinStructure{parts.size(), v};
}

bool annihilation_check(const Graph& g, std::span<const long long> eigenvalues) {
  const auto n = g.size();
  if (n > kAnnihilationGuard) fail(ErrorKind::guard_exceeded, "annihilation check is limited to 512 vertices");
  std::vector<long long> lambdas(eigenvalues.begin(), eigenvalues.end());
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  if (n == 0) return true;
  if (lambdas.empty()) return false;
  std::size_t maxdeg = 0;
  for (Vertex v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  // Row sums of |A - lambda I| bound every entry of the running product.
  long double log_bound = 0;
  for (auto l : lambdas) log_bound += std::log2(static_cast<long double>(maxdeg) + std::fabs(static_cast<long double>(l)) + 1);
  if (log_bound < 120) return annihilates<__int128>(g, lambdas);
  return annihilates<boost::multiprecision::cpp_int>(g, lambdas);
}

}  // namespace ekr
