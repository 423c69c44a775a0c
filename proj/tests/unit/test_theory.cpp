#include "doctest.h"

#include <cmath>

#include "hyperlp/error.hpp"
#include "hyperlp/relocation.hpp"
#include "hyperlp/theory.hpp"
#include "oracles.hpp"

using namespace hyperlp;

TEST_CASE("Erdos-Renyi sampler") {
  CHECK(er_sample(30, 0.0, 1).num_edges() == 0);
  CHECK(er_sample(30, 1.0, 1).num_edges() == 435);
  const auto g = er_sample(100, 0.1, 2);
  const double sd = std::sqrt(4950 * 0.1 * 0.9);
  CHECK(std::abs(static_cast<double>(g.num_edges()) - 495.0) < 3 * sd);
  CHECK(er_sample(100, 0.1, 2).edges() == g.edges());
  CHECK_THROWS_AS(er_sample(1, 0.5, 0), ValidationError);
  CHECK_THROWS_AS(er_sample(5, 1.5, 0), ValidationError);
}

TEST_CASE("global clustering") {
  CHECK(*global_clustering(er_sample(10, 1.0, 0)) == 1.0);
  CHECK_FALSE(global_clustering(er_sample(10, 0.0, 0)).has_value());
  const std::vector<VertexPair> tri_tail{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  // 3 closed triples * 1 triangle / 5 connected triples
  CHECK(*global_clustering(SimpleGraph(4, tri_tail)) == doctest::Approx(0.6));
}

TEST_CASE("clustering claim") {
  const auto s = verify_clustering(200, 0.1, 100, 1);
  CHECK(s.statistic >= 0.09);
  CHECK(s.statistic <= 0.11);
  CHECK(s.ci_low <= s.statistic);
  CHECK(s.statistic <= s.ci_high);
  CHECK(s.verdict == Verdict::Pass);
  CHECK(verify_clustering(20, 1.0, 30, 1).statistic == 1.0);
  CHECK(verify_clustering(20, 0.0, 30, 1).verdict == Verdict::Degenerate);
}

TEST_CASE("common-neighbor distribution claim") {
  const auto s = verify_cn_distribution(102, 0.1, 100, 1000, 3);
  CHECK(s.statistic >= 0.95);
  CHECK(s.statistic <= 1.05);
  CHECK(std::abs(s.details.at("conditional_gap")) < 3 * s.details.at("conditional_gap_se"));
  CHECK(s.verdict == Verdict::Pass);
  CHECK(verify_cn_distribution(30, 0.0, 10, 100, 3).statistic == 0.0);
}

TEST_CASE("theorem-2 claim is reproducible") {
  const std::vector<ScorerId> scorers{ScorerId::CN, ScorerId::PA};
  const auto a = verify_theorem2(60, 0.1, scorers, 20, 5);
  const auto b = verify_theorem2(60, 0.1, scorers, 20, 5);
  REQUIRE(a.size() == 2);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].statistic == b[k].statistic);
    CHECK(a[k].std_error == b[k].std_error);
    CHECK(std::abs(a[k].statistic - 0.5) < 0.1);
  }
}

TEST_CASE("theorem-1 Monte Carlo converges to the enumerated ensemble AUC") {
  const std::vector<Hyperedge> fbar{{0, 1, 2}, {2, 3, 4}};
  const PotentialIndex pot(6, fbar);
  const SelectionProbabilities phi({0.0, 0.5});
  const double exact = oracle::exact_ensemble_auc(6, fbar, phi, ScorerId::CN);
  CHECK(exact > 0.5);
  const auto s = verify_theorem1(pot, phi, 4000, 9);
  CHECK(std::abs(s.statistic - exact) < 3 * s.std_error);
  CHECK(s.verdict == Verdict::Pass);
  CHECK(s.statistic - 0.5 > 3 * s.std_error);
}

TEST_CASE("theorem-1 trial on the three-vertex configurations") {
  const PotentialIndex tri(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  const SelectionProbabilities only3({0.0, 0.6});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = run_model_trial(tri, only3, ScorerId::CN, seed);
    const auto pos = t.in_place.num_positive();
    CHECK((pos == 0 || pos == 3));
    for (std::size_t k = 0; k < t.in_place.scores.size(); ++k)
      CHECK(t.in_place.scores[k] == (t.in_place.labels[k] ? 1.0 : 0.0));
  }
}

TEST_CASE("relocation baseline claim") {
  Rng rng = make_rng(1);
  const Hypergraph trivial(100, oracle::random_hyperedges(100, 200, 2, rng));
  const std::vector<ScorerId> scorers{ScorerId::CN, ScorerId::AA};
  const auto results = verify_relocation_baseline(trivial, scorers, 10, 2);
  REQUIRE(results.size() == 2);
  for (const auto& s : results) CHECK(std::abs(s.statistic - 0.5) < 0.05);

  const Hypergraph wide(10, {{0, 1, 2}, {3, 4}});
  CHECK_THROWS_AS(verify_relocation_baseline(wide, scorers, 10, 2), ValidationError);
  const auto single = verify_relocation_baseline(trivial, scorers, 1, 2);
  CHECK(single[0].verdict == Verdict::Indeterminate);
}

TEST_CASE("sample mean") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto m = sample_mean(v);
  CHECK(m.mean == 2.5);
  CHECK(m.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(m.count == 4);
}
