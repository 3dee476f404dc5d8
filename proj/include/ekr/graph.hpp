#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ekr {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph with one dense bit row per vertex.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n_ * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(Vertex u, Vertex v) {
    set_bit(u, v);
    set_bit(v, u);
  }
  void remove_edge(Vertex u, Vertex v) {
    clear_bit(u, v);
    clear_bit(v, u);
  }
  bool adjacent(Vertex u, Vertex v) const { return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1u; }

  const Word* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  Word* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(v)[w]));
    return d;
  }
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph complement() const;
  /// Subgraph induced on `vertices`, renumbered 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  bool operator==(const Graph&) const = default;

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);

 private:
  void set_bit(Vertex u, Vertex v) { row(u)[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void clear_bit(Vertex u, Vertex v) { row(u)[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

}  // namespace ekr
