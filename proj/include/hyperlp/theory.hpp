#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlp/evaluation.hpp"
#include "hyperlp/heuristics.hpp"
#include "hyperlp/hypergraph.hpp"
#include "hyperlp/latent_model.hpp"

namespace hyperlp {

enum class Verdict { Pass, Fail, Degenerate, Indeterminate };

std::string_view verdict_name(Verdict v);

// Aggregate of a Monte-Carlo check. The interval is a 95% normal-approximation
// band around the statistic; verdicts use the claim-specific predicate.
struct TrialSummary {
  std::string claim_id;
  std::optional<ScorerId> scorer;
  std::size_t n_trials = 0;
  double statistic = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double target = 0.0;
  Verdict verdict = Verdict::Indeterminate;
  std::map<std::string, double> details;
  std::string note;
};

// Mean, standard error and 95% interval of a sample. Empty input yields zeros.
struct SampleMean {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};
SampleMean sample_mean(std::span<const double> values);

// G(n, p): each pair independently an edge with probability p.
SimpleGraph er_sample(std::size_t n, double p, std::uint64_t seed);

// 3 * #triangles / #connected triples; nullopt when no connected triple exists.
std::optional<double> global_clustering(const SimpleGraph& g);

// Mean global clustering over `trials` G(n, p) draws against the target p.
TrialSummary verify_clustering(std::size_t n, double p, std::size_t trials, std::uint64_t seed);

// CN of uniformly drawn pairs on G(n, p): mean vs (n-2)p^2, and the gap
// between edge- and non-edge-conditioned means.
TrialSummary verify_cn_distribution(std::size_t n, double p, std::size_t trials,
                                    std::size_t pairs_per_trial, std::uint64_t seed);

// Mean leave-one-out AUC of each scorer on G(n, p); passes within 0.5 +- 3 SE.
std::vector<TrialSummary> verify_theorem2(std::size_t n, double p, std::span<const ScorerId> scorers,
                                          std::size_t trials, std::uint64_t seed);

// Per-trial CN scores of a (F-bar, Phi) model, scored on the realized graph
// and with leave-one-out, plus the model probabilities.
struct ModelTrial {
  LabeledPairs in_place;
  LabeledPairs leave_one_out;
  LabeledPairs model;
};

ModelTrial run_model_trial(const PotentialIndex& pot, const SelectionProbabilities& phi,
                           ScorerId scorer, std::uint64_t seed);

// Ensemble CN AUC of the model (pairs pooled over trials, scored on the
// realized graph). Standard error from batch means over groups of trials.
// Passes when statistic - 0.5 > 3 SE. Details carry the leave-one-out,
// conditional and model variants.
TrialSummary verify_theorem1(const PotentialIndex& pot, const SelectionProbabilities& phi,
                             std::size_t trials, std::uint64_t seed,
                             ScorerId scorer = ScorerId::CN);

// Relocated-graph AUC per scorer for a width-2 hypergraph; passes when the
// run mean lies within 0.5 +- 0.05. Throws ValidationError for width != 2.
std::vector<TrialSummary> verify_relocation_baseline(const Hypergraph& h,
                                                     std::span<const ScorerId> scorers,
                                                     std::size_t runs, std::uint64_t seed,
                                                     const Protocol& protocol = {});

}  // namespace hyperlp
