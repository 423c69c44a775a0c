#include "hyperlp/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hyperlp/error.hpp"
#include "hyperlp/parallel.hpp"
#include "hyperlp/relocation.hpp"
#include "hyperlp/rng.hpp"

namespace hyperlp {

namespace {

constexpr double kZ95 = 1.959963984540054;

void set_interval(TrialSummary& s) {
  s.ci_low = s.statistic - kZ95 * s.std_error;
  s.ci_high = s.statistic + kZ95 * s.std_error;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Degenerate: return "degenerate";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

SampleMean sample_mean(std::span<const double> values) {
  SampleMean m;
  m.count = values.size();
  if (values.empty()) return m;
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double x : values) sq += (x - m.mean) * (x - m.mean);
    m.std_error = std::sqrt(sq / static_cast<double>(values.size() - 1) /
                            static_cast<double>(values.size()));
  }
  return m;
}

SimpleGraph er_sample(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw ValidationError("G(n, p) needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, edges);
}

std::optional<double> global_clustering(const SimpleGraph& g) {
  std::uint64_t triangles = 0;
  std::uint64_t triples = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto deg = static_cast<std::uint64_t>(g.degree(u));
    triples += deg * (deg - (deg > 0 ? 1 : 0)) / 2;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      // count each triangle once, at its smallest edge (u, v) with w > v
      const auto a = g.neighbors(u);
      const auto b = g.neighbors(v);
      auto i = std::upper_bound(a.begin(), a.end(), v);
      auto j = std::upper_bound(b.begin(), b.end(), v);
      while (i != a.end() && j != b.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++triangles;
          ++i;
          ++j;
        }
      }
    }
  }
  if (triples == 0) return std::nullopt;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

TrialSummary verify_clustering(std::size_t n, double p, std::size_t trials, std::uint64_t seed) {
  if (n < 10) throw ValidationError("clustering check needs n >= 10");
  if (trials < 30) throw ValidationError("clustering check needs at least 30 trials");
  std::vector<std::optional<double>> per_trial(trials);
  parallel_for(trials, [&](std::size_t t) {
    per_trial[t] = global_clustering(er_sample(n, p, derive_seed(seed, t)));
  });
  std::vector<double> values;
  for (const auto& v : per_trial) {
    if (v) values.push_back(*v);
  }

  TrialSummary s;
  s.claim_id = "cc";
  s.n_trials = trials;
  s.target = p;
  s.details["degenerate_trials"] = static_cast<double>(trials - values.size());
  if (values.empty()) {
    s.verdict = Verdict::Degenerate;
    s.note = "no connected triples in any trial";
    return s;
  }
  const auto m = sample_mean(values);
  s.statistic = m.mean;
  s.std_error = m.std_error;
  set_interval(s);
  s.verdict = std::abs(s.statistic - p) <= 3.0 * s.std_error ? Verdict::Pass : Verdict::Fail;
  return s;
}

TrialSummary verify_cn_distribution(std::size_t n, double p, std::size_t trials,
                                    std::size_t pairs_per_trial, std::uint64_t seed) {
  if (n < 10) throw ValidationError("CN check needs n >= 10");
  if (trials == 0 || pairs_per_trial == 0) throw ValidationError("CN check needs samples");

  struct TrialCounts {
    std::vector<double> all, edge, non_edge;
  };
  std::vector<TrialCounts> per_trial(trials);
  parallel_for(trials, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const auto g = er_sample(n, p, trial_seed);
    Rng rng = make_rng(derive_seed(trial_seed, 1));
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    auto& out = per_trial[t];
    for (std::size_t k = 0; k < pairs_per_trial; ++k) {
      Vertex u = pick(rng);
      Vertex v = pick(rng);
      while (v == u) v = pick(rng);
      const auto cn = static_cast<double>(common_neighbors_count(g, u, v));
      out.all.push_back(cn);
      (g.has_edge(u, v) ? out.edge : out.non_edge).push_back(cn);
    }
  });
  std::vector<double> all, edge, non_edge;
  for (auto& t : per_trial) {
    all.insert(all.end(), t.all.begin(), t.all.end());
    edge.insert(edge.end(), t.edge.begin(), t.edge.end());
    non_edge.insert(non_edge.end(), t.non_edge.begin(), t.non_edge.end());
  }

  TrialSummary s;
  s.claim_id = "cn-dist";
  s.n_trials = trials;
  s.target = static_cast<double>(n - 2) * p * p;
  const auto m = sample_mean(all);
  s.statistic = m.mean;
  s.std_error = m.std_error;
  set_interval(s);

  const auto me = sample_mean(edge);
  const auto mn = sample_mean(non_edge);
  const double gap = me.mean - mn.mean;
  const double gap_se = std::sqrt(me.std_error * me.std_error + mn.std_error * mn.std_error);
  s.details["pairs"] = static_cast<double>(all.size());
  s.details["mean_cn_edge"] = me.mean;
  s.details["mean_cn_non_edge"] = mn.mean;
  s.details["edge_pairs"] = static_cast<double>(me.count);
  s.details["conditional_gap"] = gap;
  s.details["conditional_gap_se"] = gap_se;

  // Pearson chi-square against Bin(n-2, p^2), tail bins merged until the
  // expected count reaches 5. Pairs from one graph are not independent, so
  // this is reported only.
  const std::size_t trials_binom = n - 2;
  const double q = p * p;
  std::map<std::size_t, double> observed;
  for (double x : all) observed[static_cast<std::size_t>(x)] += 1.0;
  double chi2 = 0.0;
  std::size_t cells = 0;
  double exp_acc = 0.0, obs_acc = 0.0;
  double log_choose = 0.0;
  for (std::size_t k = 0; k <= trials_binom; ++k) {
    if (k > 0) log_choose += std::log(static_cast<double>(trials_binom - k + 1)) - std::log(static_cast<double>(k));
    const double pk = q <= 0.0 ? (k == 0 ? 1.0 : 0.0)
                      : q >= 1.0 ? (k == trials_binom ? 1.0 : 0.0)
                                 : std::exp(log_choose + static_cast<double>(k) * std::log(q) +
                                            static_cast<double>(trials_binom - k) * std::log1p(-q));
    exp_acc += pk * static_cast<double>(all.size());
    obs_acc += observed.count(k) ? observed[k] : 0.0;
    if (exp_acc >= 5.0 || k == trials_binom) {
      if (exp_acc > 0.0) {
        chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
        ++cells;
      }
      exp_acc = obs_acc = 0.0;
    }
  }
  s.details["chi_square"] = chi2;
  s.details["chi_square_cells"] = static_cast<double>(cells);

  const bool mean_ok = std::abs(s.statistic - s.target) <= 3.0 * s.std_error;
  const bool independent =
      me.count == 0 || mn.count == 0 || std::abs(gap) < 3.0 * gap_se || (gap_se == 0.0 && gap == 0.0);
  s.verdict = mean_ok && independent ? Verdict::Pass : Verdict::Fail;
  return s;
}

std::vector<TrialSummary> verify_theorem2(std::size_t n, double p, std::span<const ScorerId> scorers,
                                          std::size_t trials, std::uint64_t seed) {
  if (n < 10) throw ValidationError("theorem-2 check needs n >= 10");
  if (trials == 0) throw ValidationError("theorem-2 check needs trials");
  // [scorer][trial], NaN when the trial had a single class
  std::vector<std::vector<double>> values(scorers.size(), std::vector<double>(trials, std::nan("")));
  parallel_for(trials, [&](std::size_t t) {
    const auto g = er_sample(n, p, derive_seed(seed, t));
    for (std::size_t k = 0; k < scorers.size(); ++k) {
      try {
        values[k][t] = auc(leave_one_out(g, scorers[k]));
      } catch (const DataError&) {
      }
    }
  });

  std::vector<TrialSummary> out;
  for (std::size_t k = 0; k < scorers.size(); ++k) {
    std::vector<double> valid;
    for (double v : values[k]) {
      if (!std::isnan(v)) valid.push_back(v);
    }
    TrialSummary s;
    s.claim_id = "thm2";
    s.scorer = scorers[k];
    s.n_trials = valid.size();
    s.target = 0.5;
    s.details["skipped_trials"] = static_cast<double>(trials - valid.size());
    if (valid.empty()) {
      s.verdict = Verdict::Degenerate;
      out.push_back(s);
      continue;
    }
    const auto m = sample_mean(valid);
    s.statistic = m.mean;
    s.std_error = m.std_error;
    set_interval(s);
    s.verdict = valid.size() < 2 ? Verdict::Indeterminate
                : std::abs(s.statistic - 0.5) <= 3.0 * s.std_error ? Verdict::Pass
                                                                     : Verdict::Fail;
    s.note = "single-trial AUC varies; only the trial mean is judged";
    out.push_back(s);
  }
  return out;
}

ModelTrial run_model_trial(const PotentialIndex& pot, const SelectionProbabilities& phi,
                           ScorerId scorer, std::uint64_t seed) {
  const auto g = clique_expand(sample_hypergraph(pot, phi, seed));
  ModelTrial trial;
  trial.in_place = score_in_place(g, scorer);
  // leave-one-out is only defined when both classes exist
  if (g.num_edges() > 0 && g.num_edges() < g.num_vertices() * (g.num_vertices() - 1) / 2) {
    trial.leave_one_out = leave_one_out(g, scorer);
  }
  trial.model = model_scores(pot, phi, g);
  return trial;
}

TrialSummary verify_theorem1(const PotentialIndex& pot, const SelectionProbabilities& phi,
                             std::size_t trials, std::uint64_t seed, ScorerId scorer) {
  if (trials == 0) throw ValidationError("theorem-1 check needs trials");
  bool has_higher_order = false;
  for (std::size_t s = 3; s <= pot.max_size(); ++s) has_higher_order |= !pot.of_size(s).empty();

  std::vector<ModelTrial> runs(trials);
  parallel_for(trials, [&](std::size_t t) {
    runs[t] = run_model_trial(pot, phi, scorer, derive_seed(seed, t));
  });

  auto pooled = [&](auto member, std::size_t begin, std::size_t end) {
    std::vector<LabeledPairs> parts;
    for (std::size_t t = begin; t < end; ++t) parts.push_back(runs[t].*member);
    return pooled_auc(parts);
  };

  TrialSummary s;
  s.claim_id = "thm1";
  s.scorer = scorer;
  s.n_trials = trials;
  s.target = 0.5;
  if (!has_higher_order) s.note = "no potential hyperedge of size >= 3; theorem precondition unmet";

  const auto overall = pooled(&ModelTrial::in_place, 0, trials);
  if (!overall) {
    s.verdict = Verdict::Degenerate;
    s.note = "pooled pairs contain a single class";
    return s;
  }
  s.statistic = *overall;

  const std::size_t batches = std::min<std::size_t>(20, trials);
  std::vector<double> batch_values;
  for (std::size_t b = 0; b < batches; ++b) {
    const auto value = pooled(&ModelTrial::in_place, b * trials / batches, (b + 1) * trials / batches);
    if (value) batch_values.push_back(*value);
  }
  const auto bm = sample_mean(batch_values);
  s.std_error = bm.std_error;
  set_interval(s);

  if (const auto loo = pooled(&ModelTrial::leave_one_out, 0, trials)) s.details["auc_leave_one_out"] = *loo;
  if (const auto model = pooled(&ModelTrial::model, 0, trials)) s.details["auc_model"] = *model;
  {
    std::vector<double> scores;
    std::vector<bool> labels;
    for (const auto& r : runs) {
      scores.insert(scores.end(), r.in_place.scores.begin(), r.in_place.scores.end());
      labels.insert(labels.end(), r.in_place.labels.begin(), r.in_place.labels.end());
    }
    try {
      s.details["auc_conditional"] = auc_conditional(scores, labels);
    } catch (const ValidationError&) {
    }
  }
  std::vector<double> per_trial;
  for (const auto& r : runs) {
    const auto positives = r.in_place.num_positive();
    if (positives > 0 && positives < r.in_place.labels.size()) per_trial.push_back(auc(r.in_place));
  }
  s.details["informative_trials"] = static_cast<double>(per_trial.size());
  if (!per_trial.empty()) s.details["mean_per_trial_auc"] = sample_mean(per_trial).mean;
  s.details["batches"] = static_cast<double>(batch_values.size());

  s.verdict = s.statistic - 0.5 > 3.0 * s.std_error ? Verdict::Pass : Verdict::Fail;
  return s;
}

std::vector<TrialSummary> verify_relocation_baseline(const Hypergraph& h,
                                                     std::span<const ScorerId> scorers,
                                                     std::size_t runs, std::uint64_t seed,
                                                     const Protocol& protocol) {
  if (h.num_hyperedges() == 0 || width(h) != 2) {
    throw ValidationError("relocation baseline check needs a hypergraph of width 2");
  }
  if (runs == 0) throw ValidationError("need at least one relocation run");
  std::vector<SimpleGraph> relocated(runs);
  parallel_for(runs, [&](std::size_t r) { relocated[r] = clique_expand(relocate(h, derive_seed(seed, r))); });

  std::vector<TrialSummary> out;
  for (ScorerId id : scorers) {
    std::vector<double> values;
    for (const auto& g : relocated) {
      try {
        values.push_back(auc(evaluate(g, id, protocol)));
      } catch (const DataError&) {
      }
    }
    TrialSummary s;
    s.claim_id = "relocation-baseline";
    s.scorer = id;
    s.n_trials = values.size();
    s.target = 0.5;
    const auto m = sample_mean(values);
    s.statistic = m.mean;
    s.std_error = m.std_error;
    set_interval(s);
    if (values.size() < 2) {
      s.verdict = Verdict::Indeterminate;
      s.note = "fewer than two usable runs";
    } else {
      s.verdict = std::abs(s.statistic - 0.5) <= 0.05 ? Verdict::Pass : Verdict::Fail;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace hyperlp
