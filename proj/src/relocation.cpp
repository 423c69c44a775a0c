#include "hyperlp/relocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "hyperlp/error.hpp"
#include "hyperlp/rng.hpp"

namespace hyperlp {

namespace {

// Floyd's algorithm: k distinct values from [0, n), each k-subset equally likely.
Hyperedge sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  std::unordered_set<Vertex> chosen;
  chosen.reserve(k);
  Hyperedge out;
  out.reserve(k);
  for (std::size_t j = n - k; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j);
    auto t = static_cast<Vertex>(pick(rng));
    if (!chosen.insert(t).second) {
      t = static_cast<Vertex>(j);
      chosen.insert(t);
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Hypergraph relocate(const Hypergraph& h, std::uint64_t seed) {
  const std::size_t n = h.num_vertices();
  for (const auto& f : h.hyperedges()) {
    if (f.size() > n) throw ValidationError("hyperedge larger than the vertex set");
  }
  Rng rng = make_rng(seed);
  std::vector<Hyperedge> moved;
  moved.reserve(h.num_hyperedges());
  for (const auto& f : h.hyperedges()) moved.push_back(sample_without_replacement(n, f.size(), rng));
  return Hypergraph(n, std::move(moved));
}

void finalize_report(AdjustmentReport& report) {
  const auto& runs = report.auc_rel_runs;
  if (runs.empty()) throw Error("adjustment report has no successful runs");
  const double count = static_cast<double>(runs.size());
  report.auc_rel_mean = std::accumulate(runs.begin(), runs.end(), 0.0) / count;
  double sq = 0.0;
  for (double x : runs) sq += (x - report.auc_rel_mean) * (x - report.auc_rel_mean);
  report.auc_rel_std = runs.size() > 1 ? std::sqrt(sq / (count - 1.0)) : 0.0;
  report.af = report.auc_rel_mean / 0.5;
  report.auc_adjusted = report.auc_original / report.af;
}

AdjustmentReport adjusted_auc(const Hypergraph& h, ScorerId scorer, const Protocol& protocol,
                              std::size_t n_runs, std::uint64_t seed) {
  if (n_runs == 0) throw ValidationError("need at least one relocation run");
  AdjustmentReport report;
  report.scorer = scorer;
  report.protocol = protocol_name(protocol);

  const auto original = evaluate(clique_expand(h), scorer, protocol);
  report.auc_original = auc(original);
  report.num_positive = original.num_positive();
  report.num_negative = original.num_negative();
  try {
    report.auc_conditional_original = auc_conditional(original);
  } catch (const ValidationError&) {
    report.auc_conditional_original = std::nan("");
  }

  for (std::size_t r = 0; r < n_runs; ++r) {
    const std::uint64_t run_seed = derive_seed(seed, r);
    try {
      const auto relocated = clique_expand(relocate(h, run_seed));
      report.auc_rel_runs.push_back(auc(evaluate(relocated, scorer, protocol)));
      report.seeds.push_back(run_seed);
    } catch (const Error& e) {
      report.failed_runs.push_back("run " + std::to_string(r) + ": " + e.what());
    }
  }
  if (report.auc_rel_runs.empty()) {
    throw DataError("every relocation run failed; first: " + report.failed_runs.front());
  }
  finalize_report(report);
  return report;
}

std::vector<std::pair<ScorerId, ScorerId>> performance_reversal_check(
    const std::map<ScorerId, AdjustmentReport>& reports) {
  std::vector<std::pair<ScorerId, ScorerId>> out;
  for (auto a = reports.begin(); a != reports.end(); ++a) {
    for (auto b = std::next(a); b != reports.end(); ++b) {
      const double raw = a->second.auc_original - b->second.auc_original;
      const double adj = a->second.auc_adjusted - b->second.auc_adjusted;
      if (raw != 0.0 && adj != 0.0 && (raw > 0.0) != (adj > 0.0)) {
        out.emplace_back(a->first, b->first);
      }
    }
  }
  return out;
}

}  // namespace hyperlp
