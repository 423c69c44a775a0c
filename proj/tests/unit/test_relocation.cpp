#include "doctest.h"

#include <cmath>
#include <map>

#include "hyperlp/error.hpp"
#include "hyperlp/relocation.hpp"
#include "oracles.hpp"

using namespace hyperlp;

TEST_CASE("relocation preserves the size multiset") {
  Rng rng = make_rng(3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 5 + seed % 20;
    const Hypergraph h(n, oracle::random_hyperedges(n, 1 + seed % 30, 6, rng));
    const auto r = relocate(h, seed);
    CHECK(r.num_vertices() == n);
    CHECK(size_distribution(r) == size_distribution(h));
    CHECK(relocate(h, seed).hyperedges().size() == r.hyperedges().size());
    for (std::size_t k = 0; k < r.num_hyperedges(); ++k) CHECK(r.hyperedge(k) == relocate(h, seed).hyperedge(k));
  }
}

TEST_CASE("relocation of full-size hyperedges is forced") {
  const Hypergraph h(4, {{0, 1, 2, 3}, {0, 1, 2, 3}});
  const auto r = relocate(h, 8);
  for (const auto& f : r.hyperedges()) CHECK(f == Hyperedge{0, 1, 2, 3});
}

TEST_CASE("a relocated 2-edge is uniform over pairs") {
  const Hypergraph h(5, {{0, 1}});
  std::map<Hyperedge, std::size_t> freq;
  const std::size_t seeds = 10000;
  for (std::uint64_t s = 0; s < seeds; ++s) ++freq[relocate(h, s).hyperedge(0)];
  CHECK(freq.size() == 10);
  const double sd = std::sqrt(0.1 * 0.9 / seeds);
  double chi2 = 0.0;
  for (const auto& [f, c] : freq) {
    const double p = static_cast<double>(c) / seeds;
    CHECK(std::abs(p - 0.1) < 3.0 * sd + 1e-3);
    chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  }
  CHECK(chi2 < 27.88);  // chi-square 9 dof, p = 0.001
}

TEST_CASE("adjustment identities") {
  AdjustmentReport r;
  r.auc_original = 0.99;
  r.auc_rel_runs = {0.9};
  r.seeds = {1};
  finalize_report(r);
  CHECK(r.af == doctest::Approx(1.8).epsilon(1e-15));
  CHECK(r.auc_adjusted == doctest::Approx(0.55).epsilon(1e-15));
  CHECK(r.auc_rel_std == 0.0);

  AdjustmentReport half;
  half.auc_original = 0.7;
  half.auc_rel_runs = {0.5, 0.5};
  half.seeds = {1, 2};
  finalize_report(half);
  CHECK(half.af == 1.0);
  CHECK(half.auc_adjusted == 0.7);

  AdjustmentReport low;
  low.auc_original = 0.6;
  low.auc_rel_runs = {0.4, 0.44};
  low.seeds = {1, 2};
  finalize_report(low);
  CHECK(low.af < 1.0);  // not clamped
  CHECK(low.auc_rel_std == doctest::Approx(std::sqrt(0.0008)));
}

TEST_CASE("adjusted AUC on a real hypergraph") {
  Rng rng = make_rng(6);
  const Hypergraph h(30, oracle::random_hyperedges(30, 25, 4, rng));
  const auto r = adjusted_auc(h, ScorerId::CN, Protocol{}, kDefaultRelocationRuns, 12);
  CHECK(r.n_runs() == 5);
  CHECK(r.seeds.size() == 5);
  CHECK(r.af == r.auc_rel_mean / 0.5);
  CHECK(r.auc_adjusted == r.auc_original / r.af);
  CHECK(r.auc_rel_std >= 0.0);
  CHECK(r.protocol == "loo");
  const auto again = adjusted_auc(h, ScorerId::CN, Protocol{}, kDefaultRelocationRuns, 12);
  CHECK(again.auc_rel_runs == r.auc_rel_runs);
  CHECK_THROWS_AS(adjusted_auc(h, ScorerId::CN, Protocol{}, 0, 1), ValidationError);
}

TEST_CASE("performance reversal") {
  auto make = [](ScorerId id, double auc, double adj) {
    AdjustmentReport r;
    r.scorer = id;
    r.auc_original = auc;
    r.auc_adjusted = adj;
    return r;
  };
  std::map<ScorerId, AdjustmentReport> reports{{ScorerId::PA, make(ScorerId::PA, 0.95, 0.52)},
                                               {ScorerId::AA, make(ScorerId::AA, 0.83, 0.80)}};
  const auto flags = performance_reversal_check(reports);
  REQUIRE(flags.size() == 1);
  CHECK(((flags[0].first == ScorerId::PA && flags[0].second == ScorerId::AA) ||
         (flags[0].first == ScorerId::AA && flags[0].second == ScorerId::PA)));

  std::map<ScorerId, AdjustmentReport> same{{ScorerId::CN, make(ScorerId::CN, 0.9, 0.6)},
                                            {ScorerId::AA, make(ScorerId::AA, 0.9, 0.6)}};
  CHECK(performance_reversal_check(same).empty());
  std::map<ScorerId, AdjustmentReport> single{{ScorerId::CN, make(ScorerId::CN, 0.9, 0.6)}};
  CHECK(performance_reversal_check(single).empty());
}
