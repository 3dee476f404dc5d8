#include "ekr/graph.hpp"

namespace ekr {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const Word* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    Word bits = r[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (u != v && !adjacent(u, v)) c.set_bit(u, v);
  return c;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n && n >= 3; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return g;
}

}  // namespace ekr
