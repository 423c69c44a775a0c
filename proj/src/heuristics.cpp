#include "hyperlp/heuristics.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "hyperlp/error.hpp"
#include "hyperlp/parallel.hpp"

namespace hyperlp {

std::string_view scorer_name(ScorerId id) {
  switch (id) {
    case ScorerId::CN: return "CN";
    case ScorerId::AA: return "AA";
    case ScorerId::PA: return "PA";
    case ScorerId::JC: return "JC";
    case ScorerId::RA: return "RA";
    case ScorerId::SR: return "SR";
  }
  return "?";
}

ScorerId parse_scorer(std::string_view token) {
  std::string upper;
  for (char c : token) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  for (ScorerId id : kAllScorers) {
    if (upper == scorer_name(id)) return id;
  }
  throw ValidationError("unknown algorithm '" + std::string(token) +
                        "' (valid: cn, aa, pa, jc, ra, sr)");
}

std::vector<ScorerId> parse_scorer_list(std::string_view list) {
  std::vector<ScorerId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto token = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    out.push_back(parse_scorer(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SimRankTable::SimRankTable(const SimpleGraph& g, const SimRankOptions& options)
    : n_(g.num_vertices()) {
  using Sparse = Eigen::SparseMatrix<double>;
  const auto n = static_cast<Eigen::Index>(n_);

  // W(i, a) = 1 / |G(a)| for i in G(a); the update is S <- C W^T S W.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.num_edges());
  for (Vertex a = 0; a < n_; ++a) {
    const double weight = 1.0 / static_cast<double>(std::max<std::size_t>(1, g.degree(a)));
    for (Vertex i : g.neighbors(a)) triplets.emplace_back(i, a, weight);
  }
  Sparse w(n, n);
  w.setFromTriplets(triplets.begin(), triplets.end());
  const Sparse wt = w.transpose();

  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
  for (iterations_ = 1; iterations_ <= options.max_iterations; ++iterations_) {
    Eigen::MatrixXd sw = s * w;
    Eigen::MatrixXd next = options.decay * (wt * sw);
    next = (0.5 * (next + next.transpose())).eval();  // products are symmetric only up to rounding
    next.diagonal().setOnes();
    final_change_ = n == 0 ? 0.0 : (next - s).cwiseAbs().maxCoeff();
    s = std::move(next);
    if (final_change_ < options.tolerance) {
      converged_ = true;
      break;
    }
  }
  if (!converged_) iterations_ = options.max_iterations;

  values_.resize(n_ * n_);
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      values_.data(), n, n) = s;
}

namespace {

std::shared_ptr<const SimRankTable> checked_simrank(const SimpleGraph& g,
                                                    const SimRankOptions& options) {
  auto table = std::make_shared<const SimRankTable>(g, options);
  if (!table->converged()) {
    throw ConvergenceError("SimRank did not reach tolerance " + std::to_string(options.tolerance) +
                           " within " + std::to_string(options.max_iterations) +
                           " iterations (last change " + std::to_string(table->final_change()) +
                           ")");
  }
  return table;
}

}  // namespace

PairScorer::PairScorer(ScorerId id, const SimpleGraph& g, const SimRankOptions& simrank)
    : id_(id), graph_(&g), simrank_options_(simrank) {
  if (id_ == ScorerId::SR) simrank_ = checked_simrank(g, simrank);
}

double PairScorer::score(Vertex u, Vertex v) const {
  if (u == v) throw ValidationError("cannot score a vertex against itself");
  if (u >= graph_->num_vertices() || v >= graph_->num_vertices()) {
    throw ValidationError("vertex id out of range");
  }
  if (id_ == ScorerId::SR) return (*simrank_)(u, v);
  return local_score(u, v, false);
}

double PairScorer::score_without_edge(Vertex u, Vertex v) const {
  if (!graph_->has_edge(u, v)) return score(u, v);
  if (id_ == ScorerId::SR) {
    const VertexPair removed(u, v);
    const auto reduced = graph_->without_edges(std::span(&removed, 1));
    return (*checked_simrank(reduced, simrank_options_))(u, v);
  }
  return local_score(u, v, true);
}

// drop_edge: evaluate as if {u, v} were absent. Removing that edge only
// changes deg(u), deg(v) and the union G(u) u G(v); common neighbors and
// their degrees are untouched.
double PairScorer::local_score(Vertex u, Vertex v, bool drop_edge) const {
  const SimpleGraph& g = *graph_;
  const auto du = static_cast<double>(g.degree(u)) - (drop_edge ? 1.0 : 0.0);
  const auto dv = static_cast<double>(g.degree(v)) - (drop_edge ? 1.0 : 0.0);
  if (id_ == ScorerId::PA) return du * dv;

  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t common = 0;
  double aa = 0.0;
  double ra = 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      const auto dw = static_cast<double>(g.degree(*i));
      ++common;
      aa += 1.0 / std::log(1.0 + dw);
      ra += 1.0 / dw;
      ++i;
      ++j;
    }
  }
  switch (id_) {
    case ScorerId::CN: return static_cast<double>(common);
    case ScorerId::AA: return aa;
    case ScorerId::RA: return ra;
    case ScorerId::JC: {
      const double uni = du + dv - static_cast<double>(common);
      return uni > 0.0 ? static_cast<double>(common) / uni : 0.0;
    }
    default: break;
  }
  throw Error("unhandled scorer");
}

double score(ScorerId id, const SimpleGraph& g, Vertex u, Vertex v, const SimRankOptions& simrank) {
  if (u == v) throw ValidationError("cannot score a vertex against itself");
  return PairScorer(id, g, simrank).score(u, v);
}

std::vector<double> score_all_pairs(ScorerId id, const SimpleGraph& g,
                                    std::span<const VertexPair> pairs,
                                    const SimRankOptions& simrank) {
  std::vector<double> out(pairs.size());
  if (pairs.empty()) return out;
  const PairScorer scorer(id, g, simrank);
  parallel_for(pairs.size(), [&](std::size_t k) { out[k] = scorer.score(pairs[k].first, pairs[k].second); });
  return out;
}

}  // namespace hyperlp
