#include "hyperlp/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperlp/error.hpp"

namespace hyperlp {

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Hyperedge> hyperedges)
    : num_vertices_(num_vertices), hyperedges_(std::move(hyperedges)) {
  for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
    auto& f = hyperedges_[i];
    if (f.size() < 2) {
      throw ValidationError("hyperedge " + std::to_string(i) + " has fewer than two vertices");
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw ValidationError("hyperedge " + std::to_string(i) + " repeats a vertex");
    }
    if (f.back() >= num_vertices_) {
      throw ValidationError("hyperedge " + std::to_string(i) + " references vertex " +
                            std::to_string(f.back()) + " but n = " + std::to_string(num_vertices_));
    }
  }
}

SimpleGraph::SimpleGraph(std::size_t num_vertices, std::span<const VertexPair> edges)
    : num_vertices_(num_vertices), offsets_(num_vertices + 1, 0) {
  std::vector<VertexPair> unique(edges.begin(), edges.end());
  for (const auto& e : unique) {
    if (e.first == e.second) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.first));
    }
    if (e.second >= num_vertices) {
      throw ValidationError("edge references vertex " + std::to_string(e.second) +
                            " but n = " + std::to_string(num_vertices));
    }
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  for (const auto& e : unique) {
    ++offsets_[e.first + 1];
    ++offsets_[e.second + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) offsets_[v + 1] += offsets_[v];

  targets_.resize(2 * unique.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : unique) {
    targets_[cursor[e.first]++] = e.second;
    targets_[cursor[e.second]++] = e.first;
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices_ || v >= num_vertices_) return false;
  const auto a = neighbors(u);
  const auto b = neighbors(v);
  // search the shorter list
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<VertexPair> SimpleGraph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::without_edges(std::span<const VertexPair> removed) const {
  std::vector<VertexPair> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<VertexPair> kept;
  kept.reserve(num_edges());
  for (const auto& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return SimpleGraph(num_vertices_, kept);
}

SimpleGraph clique_expand(const Hypergraph& h) {
  std::vector<VertexPair> pairs;
  for (const auto& f : h.hyperedges()) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) pairs.emplace_back(f[a], f[b]);
    }
  }
  return SimpleGraph(h.num_vertices(), pairs);
}

std::size_t width(const Hypergraph& h) {
  if (h.num_hyperedges() == 0) throw ValidationError("width of a hypergraph with no hyperedges");
  std::size_t w = 0;
  for (const auto& f : h.hyperedges()) w = std::max(w, f.size());
  return w;
}

std::map<std::size_t, std::size_t> size_distribution(const Hypergraph& h) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& f : h.hyperedges()) ++counts[f.size()];
  return counts;
}

std::size_t common_neighbors_count(const SimpleGraph& g, Vertex u, Vertex v) {
  if (u == v) throw ValidationError("common neighbors of a vertex with itself");
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    throw ValidationError("vertex id out of range");
  }
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace hyperlp
