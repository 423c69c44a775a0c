#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

enum class ScorerId { CN, AA, PA, JC, RA, SR };

inline constexpr std::array<ScorerId, 6> kAllScorers = {ScorerId::CN, ScorerId::AA, ScorerId::PA,
                                                       ScorerId::JC, ScorerId::RA, ScorerId::SR};

// "CN", "AA", ...
std::string_view scorer_name(ScorerId id);
// Case-insensitive. Throws ValidationError listing the valid ids.
ScorerId parse_scorer(std::string_view token);
// Comma-separated list, e.g. "cn,aa,pa".
std::vector<ScorerId> parse_scorer_list(std::string_view list);

struct SimRankOptions {
  double decay = 0.8;
  double tolerance = 1e-4;  // max-norm change between iterations
  std::size_t max_iterations = 100;
};

// Dense SimRank table. s(a, a) = 1; for a != b,
// s(a, b) = C / (|G(a)| |G(b)|) * sum_{i in G(a), j in G(b)} s(i, j),
// and 0 when either vertex is isolated. Iterated from the identity.
class SimRankTable {
 public:
  SimRankTable(const SimpleGraph& g, const SimRankOptions& options);

  double operator()(Vertex a, Vertex b) const { return values_[a * n_ + b]; }
  std::size_t iterations() const { return iterations_; }
  double final_change() const { return final_change_; }
  bool converged() const { return converged_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  std::size_t iterations_ = 0;
  double final_change_ = 0.0;
  bool converged_ = false;
};

// Scorer bound to one graph. SR builds its similarity table at construction
// and throws ConvergenceError when the tolerance is not met.
class PairScorer {
 public:
  PairScorer(ScorerId id, const SimpleGraph& g, const SimRankOptions& simrank = {});

  ScorerId id() const { return id_; }
  const SimpleGraph& graph() const { return *graph_; }

  // Score of (u, v) on the bound graph.
  double score(Vertex u, Vertex v) const;

  // Score of (u, v) on the bound graph with the edge {u, v} removed (equal to
  // score() when the edge is absent). SR recomputes its table on the reduced
  // graph, so this costs a full SimRank run per call.
  double score_without_edge(Vertex u, Vertex v) const;

 private:
  double local_score(Vertex u, Vertex v, bool drop_edge) const;

  ScorerId id_;
  const SimpleGraph* graph_;
  SimRankOptions simrank_options_;
  std::shared_ptr<const SimRankTable> simrank_;
};

// One-off score of (u, v) on g. Throws ValidationError if u == v.
double score(ScorerId id, const SimpleGraph& g, Vertex u, Vertex v,
             const SimRankOptions& simrank = {});

// Elementwise score over `pairs`, order preserved.
std::vector<double> score_all_pairs(ScorerId id, const SimpleGraph& g,
                                    std::span<const VertexPair> pairs,
                                    const SimRankOptions& simrank = {});

}  // namespace hyperlp
