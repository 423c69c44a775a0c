#include "hyperlp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "hyperlp/error.hpp"
#include "hyperlp/parallel.hpp"
#include "hyperlp/rng.hpp"

namespace hyperlp {

std::size_t LabeledPairs::num_positive() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
}

namespace {

struct ClassCounts {
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;
};

ClassCounts check_inputs(std::span<const double> scores, const std::vector<bool>& labels) {
  if (scores.size() != labels.size()) {
    throw ValidationError("scores and labels differ in length");
  }
  ClassCounts c;
  for (bool l : labels) (l ? c.positives : c.negatives)++;
  if (c.positives == 0 || c.negatives == 0) {
    throw ValidationError("AUC needs at least one positive and one negative (got " +
                          std::to_string(c.positives) + " / " + std::to_string(c.negatives) + ")");
  }
  return c;
}

// Indices in ascending score order; ties keep index order.
std::vector<std::size_t> ascending_order(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  return order;
}

}  // namespace

double auc(std::span<const double> scores, const std::vector<bool>& labels) {
  const auto counts = check_inputs(scores, labels);
  const auto order = ascending_order(scores);

  // Twice the rank sum of the positives, with tied blocks sharing their
  // mid-rank; kept integral so the result is exact up to the final division.
  std::uint64_t twice_rank_sum = 0;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && scores[order[end]] == scores[order[start]]) ++end;
    std::uint64_t block_positives = 0;
    for (std::size_t k = start; k < end; ++k) block_positives += labels[order[k]] ? 1 : 0;
    twice_rank_sum += block_positives * (start + end + 1);
    start = end;
  }
  const std::uint64_t twice_u = twice_rank_sum - counts.positives * (counts.positives + 1);
  return static_cast<double>(twice_u) /
         (2.0 * static_cast<double>(counts.positives) * static_cast<double>(counts.negatives));
}

double auc(const LabeledPairs& data) { return auc(data.scores, data.labels); }

double auc_conditional(std::span<const double> scores, const std::vector<bool>& labels) {
  check_inputs(scores, labels);
  const auto order = ascending_order(scores);
  std::uint64_t greater = 0;
  std::uint64_t less = 0;
  std::uint64_t positives_below = 0;
  std::uint64_t negatives_below = 0;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && scores[order[end]] == scores[order[start]]) ++end;
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    for (std::size_t k = start; k < end; ++k) (labels[order[k]] ? pos : neg)++;
    greater += pos * negatives_below;
    less += neg * positives_below;
    positives_below += pos;
    negatives_below += neg;
    start = end;
  }
  if (greater + less == 0) {
    throw ValidationError("conditional AUC undefined: every positive/negative comparison ties");
  }
  return static_cast<double>(greater) / static_cast<double>(greater + less);
}

double auc_conditional(const LabeledPairs& data) {
  return auc_conditional(data.scores, data.labels);
}

namespace {

std::vector<VertexPair> all_pairs(std::size_t n) {
  std::vector<VertexPair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

LabeledPairs score_every_pair(const SimpleGraph& g, ScorerId id, const SimRankOptions& simrank,
                              bool remove_edges) {
  const std::size_t n = g.num_vertices();
  LabeledPairs out;
  out.pairs = all_pairs(n);
  out.labels.resize(out.pairs.size());
  out.scores.resize(out.pairs.size());
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    out.labels[k] = g.has_edge(out.pairs[k].first, out.pairs[k].second);
  }
  const PairScorer scorer(id, g, simrank);
  // Row u of the pair list starts at u*n - u(u+1)/2.
  parallel_for(n, [&](std::size_t u) {
    std::size_t k = u * n - u * (u + 1) / 2;
    for (std::size_t v = u + 1; v < n; ++v, ++k) {
      const auto a = static_cast<Vertex>(u);
      const auto b = static_cast<Vertex>(v);
      out.scores[k] = remove_edges && out.labels[k] ? scorer.score_without_edge(a, b)
                                                     : scorer.score(a, b);
    }
  });
  return out;
}

}  // namespace

LabeledPairs leave_one_out(const SimpleGraph& g, ScorerId scorer, const SimRankOptions& simrank) {
  const std::size_t total = g.num_vertices() * (g.num_vertices() - (g.num_vertices() > 0 ? 1 : 0)) / 2;
  if (g.num_edges() == 0) throw DataError("leave-one-out needs at least one edge");
  if (g.num_edges() == total) throw DataError("leave-one-out needs at least one non-edge");
  return score_every_pair(g, scorer, simrank, true);
}

LabeledPairs score_in_place(const SimpleGraph& g, ScorerId scorer, const SimRankOptions& simrank) {
  return score_every_pair(g, scorer, simrank, false);
}

std::size_t test_edge_count(double rho, std::size_t num_edges) {
  if (!(rho > 0.0 && rho < 1.0)) throw ValidationError("rho must lie in (0, 1)");
  const double exact = (1.0 - rho) * static_cast<double>(num_edges);
  return static_cast<std::size_t>(std::ceil(exact - 1e-9));
}

namespace {

// Non-edges of g at train-graph distance in [2, max_hops], u < v, sorted.
std::vector<VertexPair> hop_candidates(const SimpleGraph& train, const SimpleGraph& g,
                                       std::size_t max_hops) {
  const std::size_t n = train.num_vertices();
  std::vector<std::vector<VertexPair>> per_root(n);
  parallel_for(n, [&](std::size_t root) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::queue<Vertex> frontier;
    dist[root] = 0;
    frontier.push(static_cast<Vertex>(root));
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      if (dist[x] == max_hops) continue;
      for (Vertex y : train.neighbors(x)) {
        if (dist[y] != SIZE_MAX) continue;
        dist[y] = dist[x] + 1;
        frontier.push(y);
        if (y > root && dist[y] >= 2 && !g.has_edge(static_cast<Vertex>(root), y)) {
          per_root[root].emplace_back(static_cast<Vertex>(root), y);
        }
      }
    }
    std::sort(per_root[root].begin(), per_root[root].end());
  });
  std::vector<VertexPair> out;
  for (auto& list : per_root) out.insert(out.end(), list.begin(), list.end());
  return out;
}

}  // namespace

SplitResult split_evaluate(const SimpleGraph& g, ScorerId scorer, const SplitSpec& spec,
                           const SimRankOptions& simrank) {
  if (spec.d_hop < 2) throw ValidationError("d_hop must be at least 2");
  if (!(spec.negative_ratio > 0.0)) throw ValidationError("negative_ratio must be positive");
  const std::size_t num_test = test_edge_count(spec.rho, g.num_edges());
  if (num_test == 0) throw DataError("split leaves no test edges");

  Rng rng = make_rng(spec.seed);
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<VertexPair> positives(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(num_test));
  std::sort(positives.begin(), positives.end());

  SplitResult result;
  result.train = g.without_edges(positives);

  std::vector<VertexPair> negatives;
  if (spec.negatives == NegativeSampling::All) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
        if (!g.has_edge(u, v)) negatives.emplace_back(u, v);
      }
    }
    if (negatives.empty()) throw DataError("graph has no non-edges to use as negatives");
  } else {
    auto candidates = hop_candidates(result.train, g, spec.d_hop);
    const auto wanted = static_cast<std::size_t>(
        std::llround(spec.negative_ratio * static_cast<double>(num_test)));
    if (candidates.size() < wanted) {
      throw DataError("only " + std::to_string(candidates.size()) + " non-links within " +
                      std::to_string(spec.d_hop) + " hops, need " + std::to_string(wanted) +
                      " (short by " + std::to_string(wanted - candidates.size()) + ")");
    }
    // partial Fisher-Yates
    for (std::size_t i = 0; i < wanted; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
    }
    negatives.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(wanted));
    std::sort(negatives.begin(), negatives.end());
  }

  auto& test = result.test;
  test.pairs = positives;
  test.pairs.insert(test.pairs.end(), negatives.begin(), negatives.end());
  test.labels.assign(positives.size(), true);
  test.labels.resize(test.pairs.size(), false);
  test.scores = score_all_pairs(scorer, result.train, test.pairs, simrank);
  return result;
}

std::string protocol_name(const Protocol& protocol) {
  if (protocol.kind == Protocol::Kind::LeaveOneOut) return "loo";
  return protocol.split.negatives == NegativeSampling::All ? "split-all" : "split";
}

LabeledPairs evaluate(const SimpleGraph& g, ScorerId scorer, const Protocol& protocol) {
  if (protocol.kind == Protocol::Kind::LeaveOneOut) {
    return leave_one_out(g, scorer, protocol.simrank);
  }
  return split_evaluate(g, scorer, protocol.split, protocol.simrank).test;
}

LabeledPairs model_scores(const PotentialIndex& pot, const SelectionProbabilities& phi,
                          const SimpleGraph& g, bool covered_only) {
  if (pot.num_vertices() != g.num_vertices()) {
    throw ValidationError("potential index and graph disagree on vertex count");
  }
  LabeledPairs out;
  out.pairs = covered_only ? pot.covered_pairs() : all_pairs(g.num_vertices());
  out.labels.reserve(out.pairs.size());
  out.scores.reserve(out.pairs.size());
  for (const auto& p : out.pairs) {
    out.labels.push_back(g.has_edge(p.first, p.second));
    out.scores.push_back(link_probability(pot, phi, p.first, p.second));
  }
  return out;
}

double model_auc(const PotentialIndex& pot, const SelectionProbabilities& phi,
                 const SimpleGraph& g, bool covered_only) {
  const auto data = model_scores(pot, phi, g, covered_only);
  const std::size_t positives = data.num_positive();
  if (positives == 0 || positives == data.labels.size()) return 0.5;
  return auc(data);
}

std::optional<double> pooled_auc(std::span<const LabeledPairs> samples) {
  std::vector<double> scores;
  std::vector<bool> labels;
  for (const auto& s : samples) {
    scores.insert(scores.end(), s.scores.begin(), s.scores.end());
    labels.insert(labels.end(), s.labels.begin(), s.labels.end());
  }
  const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
  if (positives == 0 || positives == labels.size()) return std::nullopt;
  return auc(scores, labels);
}

std::vector<ScanRow> overestimation_scan(std::span<const ScanPoint> grid,
                                         std::span<const ScorerId> scorers,
                                         std::size_t seeds_per_point, std::uint64_t seed) {
  const std::size_t jobs = grid.size() * seeds_per_point;
  std::vector<std::vector<ScanRow>> per_job(jobs);
  parallel_for(jobs, [&](std::size_t job) {
    const std::size_t point_index = job / seeds_per_point;
    const ScanPoint& point = grid[point_index];
    const std::uint64_t job_seed = derive_seed(seed, job);
    auto& rows = per_job[job];
    for (ScorerId id : scorers) {
      ScanRow row;
      row.point = point_index;
      row.seed = job_seed;
      row.scorer = id;
      rows.push_back(row);
    }
    try {
      const auto latents = sample_latents(point.n, point.d, derive_seed(job_seed, 0));
      const auto radii = radii_from_percentiles(latents, point.percentiles);
      const auto pot = build_potential(latents, radii);
      SelectionProbabilities phi;
      if (!point.phi_values.empty()) {
        phi = SelectionProbabilities(point.phi_values);
      } else {
        PhiContext ctx;
        ctx.max_size = radii.max_size();
        ctx.radii = radii;
        ctx.hoff = point.hoff.value_or(default_hoff_params(latents));
        ctx.potential = &pot;
        phi = phi_preset(point.phi_preset, ctx);
      }
      const auto g = clique_expand(sample_hypergraph(pot, phi, derive_seed(job_seed, 1)));
      const double truth = model_auc(pot, phi, g, point.model_covered_only);
      for (auto& row : rows) {
        row.model_auc = truth;
        try {
          row.heuristic_auc = auc(leave_one_out(g, row.scorer));
          row.overestimated = row.heuristic_auc > row.model_auc;
        } catch (const Error& e) {
          row.error = e.what();
        }
      }
    } catch (const Error& e) {
      for (auto& row : rows) row.error = e.what();
    }
  });
  std::vector<ScanRow> out;
  out.reserve(jobs * scorers.size());
  for (auto& rows : per_job) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

}  // namespace hyperlp
