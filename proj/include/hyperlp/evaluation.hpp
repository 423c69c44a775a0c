#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlp/heuristics.hpp"
#include "hyperlp/hypergraph.hpp"
#include "hyperlp/latent_model.hpp"

namespace hyperlp {

// Parallel arrays of candidate pairs, ground-truth labels and scores.
struct LabeledPairs {
  std::vector<VertexPair> pairs;
  std::vector<bool> labels;  // true = link
  std::vector<double> scores;

  std::size_t num_positive() const;
  std::size_t num_negative() const { return labels.size() - num_positive(); }
};

// Mann-Whitney AUC with ties counted one half:
// (#{s_p > s_n} + 0.5 #{s_p = s_n}) / (P N). O(m log m).
// Throws ValidationError when either class is empty or sizes differ.
double auc(std::span<const double> scores, const std::vector<bool>& labels);
double auc(const LabeledPairs& data);

// #{s_p > s_n} / #{s_p != s_n}. Throws ValidationError when every
// cross-class comparison is a tie.
double auc_conditional(std::span<const double> scores, const std::vector<bool>& labels);
double auc_conditional(const LabeledPairs& data);

// Every unordered pair of g: edges are scored with themselves removed,
// non-edges on g unchanged. Throws DataError if g has no edge or no non-edge.
LabeledPairs leave_one_out(const SimpleGraph& g, ScorerId scorer,
                           const SimRankOptions& simrank = {});

// Every unordered pair of g scored on g itself (no removal).
LabeledPairs score_in_place(const SimpleGraph& g, ScorerId scorer,
                            const SimRankOptions& simrank = {});

enum class NegativeSampling {
  DHop,  // non-edges at train-graph distance in [2, d_hop], sampled
  All,   // every non-edge of the input graph
};

struct SplitSpec {
  double rho = 0.8;
  std::size_t d_hop = 2;
  double negative_ratio = 1.0;
  NegativeSampling negatives = NegativeSampling::DHop;
  std::uint64_t seed = 0;
};

// Number of test positives for a rho-split of `num_edges` edges:
// ceil((1 - rho) |E|), guarded against floating-point spill (0.2 * 100 -> 20).
std::size_t test_edge_count(double rho, std::size_t num_edges);

struct SplitResult {
  SimpleGraph train;
  LabeledPairs test;
};

// Removes ceil((1-rho)|E|) uniformly chosen edges as test positives, samples
// negatives, and scores the test pairs on the remaining train graph.
// Throws DataError when too few d-hop negatives exist.
SplitResult split_evaluate(const SimpleGraph& g, ScorerId scorer, const SplitSpec& spec,
                           const SimRankOptions& simrank = {});

// Evaluation protocol shared by plain evaluation and relocation runs.
struct Protocol {
  enum class Kind { LeaveOneOut, Split };
  Kind kind = Kind::LeaveOneOut;
  SplitSpec split;  // used when kind == Split
  SimRankOptions simrank;
};

std::string protocol_name(const Protocol& protocol);

// Scored pairs of g under the given protocol.
LabeledPairs evaluate(const SimpleGraph& g, ScorerId scorer, const Protocol& protocol);

// Model ground-truth scores P(i ~ j) for every pair of g (or only pairs
// covered by F-bar), labelled by g's adjacency.
LabeledPairs model_scores(const PotentialIndex& pot, const SelectionProbabilities& phi,
                          const SimpleGraph& g, bool covered_only = false);

// Tie-aware AUC of model_scores. A single-class pair set carries no ranking
// information and scores 0.5.
double model_auc(const PotentialIndex& pot, const SelectionProbabilities& phi,
                 const SimpleGraph& g, bool covered_only = false);

// Tie-aware AUC over the union of several scored pair sets, i.e. the
// P(Z_link > Z_nonlink) ensemble view over independent samples.
// Returns nullopt when the pooled set lacks a class.
std::optional<double> pooled_auc(std::span<const LabeledPairs> samples);

// One point of an overestimation scan: a latent configuration and Phi.
struct ScanPoint {
  std::size_t n = 30;
  std::size_t d = 2;
  std::vector<double> percentiles{1, 5, 9, 13};
  std::string phi_preset = "power_law";  // ignored when phi_values is set
  std::vector<double> phi_values;
  std::optional<HoffParams> hoff;
  // Restrict model_auc to pairs covered by F-bar instead of all pairs.
  bool model_covered_only = false;
};

struct ScanRow {
  std::size_t point = 0;
  std::uint64_t seed = 0;
  ScorerId scorer = ScorerId::CN;
  double model_auc = 0.0;
  double heuristic_auc = 0.0;
  bool overestimated = false;
  std::string error;  // nonempty when the row failed
};

// For each point, each of `seeds_per_point` derived seeds and each scorer:
// draw U, radii, F-bar and F, expand, then compare the heuristic's
// leave-one-out AUC with model_auc. Failures are recorded per row.
std::vector<ScanRow> overestimation_scan(std::span<const ScanPoint> grid,
                                         std::span<const ScorerId> scorers,
                                         std::size_t seeds_per_point, std::uint64_t seed);

}  // namespace hyperlp
