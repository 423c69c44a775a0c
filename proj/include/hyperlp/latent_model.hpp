#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

// n points in R^d, row-major.
class LatentPositions {
 public:
  LatentPositions() = default;
  LatentPositions(std::size_t n, std::size_t d, std::vector<double> coords);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }
  std::span<const double> row(std::size_t i) const { return {coords_.data() + i * d_, d_}; }
  std::span<const double> data() const { return coords_; }

  double distance(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<double> coords_;
};

// Per-size value table for sizes 2..max_size. Used both for radii r_s and
// selection probabilities phi_s. Sizes outside the table read as 0.
class SizeTable {
 public:
  SizeTable() = default;
  // values[0] belongs to size 2, values[1] to size 3, ...
  explicit SizeTable(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t max_size() const { return values_.size() + 1; }
  double at(std::size_t size) const {
    return size >= 2 && size - 2 < values_.size() ? values_[size - 2] : 0.0;
  }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

using Radii = SizeTable;

// Phi. Every entry must lie in [0, 1].
class SelectionProbabilities : public SizeTable {
 public:
  SelectionProbabilities() = default;
  explicit SelectionProbabilities(std::vector<double> values);
};

// The full generative configuration (U, r, Phi).
struct LatentModel {
  LatentPositions latents;
  Radii radii;
  SelectionProbabilities phi;
  std::uint64_t seed = 0;

  std::size_t max_size() const { return radii.max_size(); }
};

struct HoffParams {
  double alpha = 10.0;
  double gamma = 0.0;
};

// F-bar partitioned by cardinality, plus S_s(i, j) for every covered pair.
class PotentialIndex {
 public:
  PotentialIndex() = default;

  // Hyperedges are canonicalized (sorted vertex lists, lexicographic order
  // within each size). Throws ValidationError on invalid vertex sets.
  PotentialIndex(std::size_t num_vertices, std::vector<Hyperedge> potential);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t max_size() const { return by_size_.empty() ? 1 : by_size_.size() + 1; }
  std::size_t total() const { return total_; }

  std::span<const Hyperedge> of_size(std::size_t s) const;
  std::vector<Hyperedge> all() const;

  // S_s(i, j); zero for uncovered pairs or sizes beyond max_size().
  std::size_t pair_count(Vertex i, Vertex j, std::size_t s) const;
  // S_s(i, j) for s = 2..max_size(), entry 0 belongs to size 2.
  std::span<const std::uint32_t> pair_counts(Vertex i, Vertex j) const;

  // Pairs with S_s(i, j) > 0 for some s, sorted.
  std::vector<VertexPair> covered_pairs() const;

 private:
  static std::uint64_t key(Vertex i, Vertex j);

  std::size_t num_vertices_ = 0;
  std::size_t total_ = 0;
  std::vector<std::vector<Hyperedge>> by_size_;  // index s - 2
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_counts_;
};

// Default cap on the number of potential hyperedges build_potential may emit.
inline constexpr std::size_t kDefaultPotentialCap = 10'000'000;

// n x d i.i.d. standard normal coordinates; deterministic in seed.
LatentPositions sample_latents(std::size_t n, std::size_t d, std::uint64_t seed);

// All n(n-1)/2 pairwise Euclidean distances, pair order (0,1), (0,2), ...
std::vector<double> pairwise_distances(const LatentPositions& u);

// Percentile with linear interpolation between order statistics
// (position p/100 * (m-1) in the sorted sample). p in [0, 100].
double percentile(std::vector<double> sample, double p);

// r_s for s = 2..k_max from strictly increasing percentiles in (0, 100].
Radii radii_from_percentiles(const LatentPositions& u, std::span<const double> percentiles);

// Size-s potential hyperedges are the s-cliques of the threshold graph
// {(a, b) : |u_a - u_b| <= 2 r_s}. Throws ResourceError past `cap`.
PotentialIndex build_potential(const LatentPositions& u, const Radii& radii,
                               std::size_t cap = kDefaultPotentialCap);

// Includes each f in F-bar independently with probability phi_|f|.
Hypergraph sample_hypergraph(const PotentialIndex& pot, const SelectionProbabilities& phi,
                             std::uint64_t seed);

// Inputs for the named Phi presets. Only the fields a preset reads are needed.
struct PhiContext {
  std::size_t max_size = 0;
  std::optional<Radii> radii;             // hoff_sigmoid
  HoffParams hoff;                        // hoff_sigmoid
  const PotentialIndex* potential = nullptr;  // empirical
};

// power_law: 1/s^2; hoff_sigmoid: 1/(1+exp(alpha(r_s - gamma))); constant: 0.1;
// empirical: |F_s| / max_t |F_t|. Unknown names throw ValidationError.
SelectionProbabilities phi_preset(std::string_view name, const PhiContext& context);

// 1 - prod_s (1 - phi_s)^{S_s(i,j)}.
double link_probability(const PotentialIndex& pot, const SelectionProbabilities& phi, Vertex i,
                        Vertex j);

// 1 / (1 + exp(alpha (dist - gamma))).
double hoff_edge_probability(const HoffParams& params, double dist);

// Product of hoff_edge_probability over the C(|f|, 2) pairwise distances.
double hoff_clique_probability(const HoffParams& params, std::span<const double> pair_distances);

// Hoff parameters used when the caller gives none: alpha = 10, gamma = median
// pairwise distance.
HoffParams default_hoff_params(const LatentPositions& u);

// Gamma for which the expected Hoff edge count over all pairs of U equals
// `expected_edges` at the given alpha (bisection).
double calibrate_hoff_gamma(const LatentPositions& u, double alpha, double expected_edges);

struct DistanceBin {
  double low = 0.0;
  double high = 0.0;
  std::size_t num_pairs = 0;
  double hypergraph_probability = 0.0;  // empirical over trials
  double hoff_probability = 0.0;        // sigmoid at bin center
  double center() const { return 0.5 * (low + high); }
};

// Empirical edge frequency of eta(H) per distance bin over `trials` samples,
// next to the Hoff sigmoid evaluated at the bin center. Bins split
// [0, max pairwise distance] evenly.
std::vector<DistanceBin> edge_distance_profile(const LatentPositions& u, const PotentialIndex& pot,
                                               const SelectionProbabilities& phi,
                                               const HoffParams& hoff, std::size_t trials,
                                               std::size_t bins, std::uint64_t seed);

}  // namespace hyperlp
