#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace hyperlp {

using Vertex = std::uint32_t;

// Vertex set of one hyperedge, kept sorted ascending.
using Hyperedge = std::vector<Vertex>;

// Unordered vertex pair, stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// H = (V, F) with V = {0, ..., n-1}. F is a multiset: duplicate hyperedges
// are kept so that size statistics count every occurrence.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws ValidationError on an out-of-range id, a repeated id within one
  // hyperedge, or a hyperedge with fewer than two vertices.
  Hypergraph(std::size_t num_vertices, std::vector<Hyperedge> hyperedges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_hyperedges() const { return hyperedges_.size(); }
  std::span<const Hyperedge> hyperedges() const { return hyperedges_; }
  const Hyperedge& hyperedge(std::size_t i) const { return hyperedges_.at(i); }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Hyperedge> hyperedges_;
};

// Undirected simple graph in compressed sparse row form with sorted
// neighbor lists. Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Duplicate pairs collapse to one edge; self-loops and out-of-range ids
  // throw ValidationError.
  SimpleGraph(std::size_t num_vertices, std::span<const VertexPair> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<VertexPair> edges() const;

  // Copy of this graph with the given edges deleted (missing ones ignored).
  SimpleGraph without_edges(std::span<const VertexPair> removed) const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

// eta(H): {u, v} is an edge iff some hyperedge contains both u and v.
SimpleGraph clique_expand(const Hypergraph& h);

// Maximum hyperedge cardinality. Throws ValidationError when F is empty.
std::size_t width(const Hypergraph& h);

// Hyperedge size -> number of hyperedges of that size (multiset count).
std::map<std::size_t, std::size_t> size_distribution(const Hypergraph& h);

// |Gamma(u) n Gamma(v)|. Throws ValidationError if u == v or an id is out of range.
std::size_t common_neighbors_count(const SimpleGraph& g, Vertex u, Vertex v);

}  // namespace hyperlp
