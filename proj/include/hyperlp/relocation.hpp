#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperlp/evaluation.hpp"
#include "hyperlp/heuristics.hpp"
#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

// Replaces every hyperedge by a uniformly random vertex subset of the same
// size. Collisions are kept, so the size multiset is preserved exactly.
// Throws ValidationError if some |f| > n.
Hypergraph relocate(const Hypergraph& h, std::uint64_t seed);

// Raw AUC, relocated baselines, adjustment factor and adjusted AUC for one
// scorer. af = auc_rel_mean / 0.5 and auc_adjusted = auc_original / af.
struct AdjustmentReport {
  ScorerId scorer = ScorerId::CN;
  std::string protocol;
  double auc_original = 0.0;
  double auc_conditional_original = 0.0;
  std::size_t num_positive = 0;
  std::size_t num_negative = 0;
  std::vector<double> auc_rel_runs;
  std::vector<std::uint64_t> seeds;  // relocation seed per successful run
  std::vector<std::string> failed_runs;
  double auc_rel_mean = 0.0;
  double auc_rel_std = 0.0;  // sample standard deviation, 0 for a single run
  double af = 0.0;
  double auc_adjusted = 0.0;

  std::size_t n_runs() const { return auc_rel_runs.size(); }
};

inline constexpr std::size_t kDefaultRelocationRuns = 5;

// Assembles the report fields derived from the run list.
void finalize_report(AdjustmentReport& report);

// Evaluates eta(H) and eta(relocate(H, seed_r)) for r = 1..n_runs under the
// same protocol. Failed runs are listed; throws only if every run fails.
AdjustmentReport adjusted_auc(const Hypergraph& h, ScorerId scorer, const Protocol& protocol,
                              std::size_t n_runs, std::uint64_t seed);

// Scorer pairs whose raw-AUC order and adjusted-AUC order disagree (both
// differences nonzero).
std::vector<std::pair<ScorerId, ScorerId>> performance_reversal_check(
    const std::map<ScorerId, AdjustmentReport>& reports);

}  // namespace hyperlp
