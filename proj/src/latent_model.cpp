#include "hyperlp/latent_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hyperlp/error.hpp"
#include "hyperlp/rng.hpp"

namespace hyperlp {

LatentPositions::LatentPositions(std::size_t n, std::size_t d, std::vector<double> coords)
    : n_(n), d_(d), coords_(std::move(coords)) {
  if (coords_.size() != n * d) {
    throw ValidationError("latent array has " + std::to_string(coords_.size()) +
                          " values, expected n*d = " + std::to_string(n * d));
  }
}

double LatentPositions::distance(std::size_t i, std::size_t j) const {
  const auto a = row(i);
  const auto b = row(j);
  double sum = 0.0;
  for (std::size_t k = 0; k < d_; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

SelectionProbabilities::SelectionProbabilities(std::vector<double> values)
    : SizeTable(std::move(values)) {
  for (std::size_t i = 0; i < this->values().size(); ++i) {
    const double p = this->values()[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("phi for size " + std::to_string(i + 2) + " is outside [0, 1]");
    }
  }
}

// --- PotentialIndex ---------------------------------------------------------

std::uint64_t PotentialIndex::key(Vertex i, Vertex j) {
  const VertexPair p(i, j);
  return (static_cast<std::uint64_t>(p.first) << 32) | p.second;
}

PotentialIndex::PotentialIndex(std::size_t num_vertices, std::vector<Hyperedge> potential)
    : num_vertices_(num_vertices) {
  // Reuse Hypergraph's validation of the vertex sets.
  Hypergraph checked(num_vertices, std::move(potential));
  std::size_t kmax = 1;
  for (const auto& f : checked.hyperedges()) kmax = std::max(kmax, f.size());
  if (kmax >= 2) by_size_.resize(kmax - 1);
  for (const auto& f : checked.hyperedges()) by_size_[f.size() - 2].push_back(f);
  for (auto& list : by_size_) std::sort(list.begin(), list.end());
  total_ = checked.num_hyperedges();

  const std::size_t slots = by_size_.size();
  for (std::size_t s = 0; s < slots; ++s) {
    for (const auto& f : by_size_[s]) {
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a + 1; b < f.size(); ++b) {
          auto& counts = pair_counts_[key(f[a], f[b])];
          if (counts.empty()) counts.assign(slots, 0);
          ++counts[s];
        }
      }
    }
  }
}

std::span<const Hyperedge> PotentialIndex::of_size(std::size_t s) const {
  if (s < 2 || s - 2 >= by_size_.size()) return {};
  return by_size_[s - 2];
}

std::vector<Hyperedge> PotentialIndex::all() const {
  std::vector<Hyperedge> out;
  out.reserve(total_);
  for (const auto& list : by_size_) out.insert(out.end(), list.begin(), list.end());
  return out;
}

std::size_t PotentialIndex::pair_count(Vertex i, Vertex j, std::size_t s) const {
  const auto counts = pair_counts(i, j);
  return s >= 2 && s - 2 < counts.size() ? counts[s - 2] : 0;
}

std::span<const std::uint32_t> PotentialIndex::pair_counts(Vertex i, Vertex j) const {
  if (i == j) return {};
  const auto it = pair_counts_.find(key(i, j));
  if (it == pair_counts_.end()) return {};
  return it->second;
}

std::vector<VertexPair> PotentialIndex::covered_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(pair_counts_.size());
  for (const auto& [k, counts] : pair_counts_) {
    out.emplace_back(static_cast<Vertex>(k >> 32), static_cast<Vertex>(k & 0xffffffffu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- generation --------------------------------------------------------------

LatentPositions sample_latents(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 2) throw ValidationError("need at least two latent points");
  if (d < 1) throw ValidationError("latent dimension must be positive");
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coords(n * d);
  for (auto& x : coords) x = normal(rng);
  return LatentPositions(n, d, std::move(coords));
}

std::vector<double> pairwise_distances(const LatentPositions& u) {
  std::vector<double> out;
  const std::size_t n = u.size();
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(u.distance(i, j));
  }
  return out;
}

double percentile(std::vector<double> sample, double p) {
  if (sample.empty()) throw ValidationError("percentile of an empty sample");
  if (!(p >= 0.0 && p <= 100.0)) throw ValidationError("percentile outside [0, 100]");
  const double pos = p / 100.0 * static_cast<double>(sample.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sample.size() - 1);
  std::nth_element(sample.begin(), sample.begin() + static_cast<std::ptrdiff_t>(lo), sample.end());
  const double a = sample[lo];
  if (hi == lo) return a;
  const double b = *std::min_element(sample.begin() + static_cast<std::ptrdiff_t>(lo) + 1, sample.end());
  return a + (pos - static_cast<double>(lo)) * (b - a);
}

Radii radii_from_percentiles(const LatentPositions& u, std::span<const double> percentiles) {
  if (percentiles.empty()) throw ValidationError("at least one percentile is required");
  for (std::size_t i = 0; i < percentiles.size(); ++i) {
    if (!(percentiles[i] > 0.0 && percentiles[i] <= 100.0)) {
      throw ValidationError("percentile " + std::to_string(percentiles[i]) +
                            " is outside (0, 100]");
    }
    if (i > 0 && !(percentiles[i] > percentiles[i - 1])) {
      throw ValidationError("percentiles must be strictly increasing");
    }
  }
  const auto distances = pairwise_distances(u);
  std::vector<double> radii;
  radii.reserve(percentiles.size());
  for (double p : percentiles) radii.push_back(percentile(distances, p));
  return Radii(std::move(radii));
}

namespace {

// Forward adjacency (neighbors with larger id) of the threshold graph.
std::vector<std::vector<Vertex>> threshold_graph(const LatentPositions& u, double threshold) {
  const std::size_t n = u.size();
  std::vector<std::vector<Vertex>> forward(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u.distance(i, j) <= threshold) forward[i].push_back(static_cast<Vertex>(j));
    }
  }
  return forward;
}

class CliqueEnumerator {
 public:
  CliqueEnumerator(const std::vector<std::vector<Vertex>>& forward, std::size_t size,
                   std::vector<Hyperedge>& out, std::size_t& emitted, std::size_t cap)
      : forward_(forward), size_(size), out_(out), emitted_(emitted), cap_(cap) {}

  void run() {
    for (Vertex root = 0; root < forward_.size(); ++root) {
      current_.assign(1, root);
      extend(forward_[root]);
    }
  }

 private:
  void extend(const std::vector<Vertex>& candidates) {
    if (current_.size() == size_) {
      if (++emitted_ > cap_) {
        throw ResourceError("potential hyperedge count exceeds cap of " + std::to_string(cap_));
      }
      out_.push_back(current_);
      return;
    }
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      if (current_.size() + (candidates.size() - idx) < size_) return;
      const Vertex v = candidates[idx];
      std::vector<Vertex> next;
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                            candidates.end(), forward_[v].begin(), forward_[v].end(),
                            std::back_inserter(next));
      current_.push_back(v);
      extend(next);
      current_.pop_back();
    }
  }

  const std::vector<std::vector<Vertex>>& forward_;
  std::size_t size_;
  std::vector<Hyperedge>& out_;
  std::size_t& emitted_;
  std::size_t cap_;
  Hyperedge current_;
};

}  // namespace

PotentialIndex build_potential(const LatentPositions& u, const Radii& radii, std::size_t cap) {
  for (double r : radii.values()) {
    if (!(r >= 0.0)) throw ValidationError("radii must be nonnegative");
  }
  std::vector<Hyperedge> potential;
  std::size_t emitted = 0;
  for (std::size_t s = 2; s <= radii.max_size(); ++s) {
    const auto forward = threshold_graph(u, 2.0 * radii.at(s));
    CliqueEnumerator(forward, s, potential, emitted, cap).run();
  }
  return PotentialIndex(u.size(), std::move(potential));
}

Hypergraph sample_hypergraph(const PotentialIndex& pot, const SelectionProbabilities& phi,
                             std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Hyperedge> chosen;
  for (std::size_t s = 2; s <= pot.max_size(); ++s) {
    const double p = phi.at(s);
    for (const auto& f : pot.of_size(s)) {
      // one draw per potential hyperedge keeps the stream aligned across phi
      if (unit(rng) < p) chosen.push_back(f);
    }
  }
  return Hypergraph(pot.num_vertices(), std::move(chosen));
}

SelectionProbabilities phi_preset(std::string_view name, const PhiContext& context) {
  const std::size_t kmax = context.max_size;
  if (kmax < 2) throw ValidationError("phi preset needs a maximum size of at least 2");
  std::vector<double> values;
  values.reserve(kmax - 1);
  if (name == "power_law") {
    for (std::size_t s = 2; s <= kmax; ++s) values.push_back(1.0 / static_cast<double>(s * s));
  } else if (name == "hoff_sigmoid") {
    if (!context.radii) throw ValidationError("hoff_sigmoid preset needs radii");
    for (std::size_t s = 2; s <= kmax; ++s) {
      values.push_back(hoff_edge_probability(context.hoff, context.radii->at(s)));
    }
  } else if (name == "constant") {
    values.assign(kmax - 1, 0.1);
  } else if (name == "empirical") {
    if (context.potential == nullptr) throw ValidationError("empirical preset needs F-bar");
    std::size_t largest = 0;
    for (std::size_t s = 2; s <= kmax; ++s) {
      largest = std::max(largest, context.potential->of_size(s).size());
    }
    for (std::size_t s = 2; s <= kmax; ++s) {
      const auto count = context.potential->of_size(s).size();
      values.push_back(largest == 0 ? 0.0
                                    : static_cast<double>(count) / static_cast<double>(largest));
    }
  } else {
    throw ValidationError("unknown phi preset '" + std::string(name) +
                          "' (expected power_law, hoff_sigmoid, constant, empirical)");
  }
  return SelectionProbabilities(std::move(values));
}

double link_probability(const PotentialIndex& pot, const SelectionProbabilities& phi, Vertex i,
                        Vertex j) {
  if (i == j) throw ValidationError("link probability of a vertex with itself");
  const auto counts = pot.pair_counts(i, j);
  double absent = 1.0;
  for (std::size_t idx = 0; idx < counts.size(); ++idx) {
    if (counts[idx] == 0) continue;
    absent *= std::pow(1.0 - phi.at(idx + 2), static_cast<double>(counts[idx]));
  }
  return 1.0 - absent;
}

double hoff_edge_probability(const HoffParams& params, double dist) {
  return 1.0 / (1.0 + std::exp(params.alpha * (dist - params.gamma)));
}

double hoff_clique_probability(const HoffParams& params, std::span<const double> pair_distances) {
  double p = 1.0;
  for (double d : pair_distances) p *= hoff_edge_probability(params, d);
  return p;
}

HoffParams default_hoff_params(const LatentPositions& u) {
  return HoffParams{10.0, percentile(pairwise_distances(u), 50.0)};
}

double calibrate_hoff_gamma(const LatentPositions& u, double alpha, double expected_edges) {
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  const auto distances = pairwise_distances(u);
  if (!(expected_edges > 0.0 && expected_edges < static_cast<double>(distances.size()))) {
    throw ValidationError("expected edge count must lie strictly between 0 and the pair count");
  }
  const double max_dist = *std::max_element(distances.begin(), distances.end());
  // the expected count increases with gamma; widen the bracket by 40/alpha so both ends saturate
  double lo = -40.0 / alpha;
  double hi = max_dist + 40.0 / alpha;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    double total = 0.0;
    for (double d : distances) total += hoff_edge_probability(HoffParams{alpha, mid}, d);
    (total > expected_edges ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<DistanceBin> edge_distance_profile(const LatentPositions& u, const PotentialIndex& pot,
                                               const SelectionProbabilities& phi,
                                               const HoffParams& hoff, std::size_t trials,
                                               std::size_t bins, std::uint64_t seed) {
  if (bins == 0) throw ValidationError("need at least one distance bin");
  if (trials == 0) throw ValidationError("need at least one trial");
  const auto distances = pairwise_distances(u);
  const double max_dist = distances.empty() ? 0.0 : *std::max_element(distances.begin(), distances.end());
  const double bin_width = max_dist > 0.0 ? max_dist / static_cast<double>(bins) : 1.0;
  const auto bin_of = [&](double d) {
    return std::min(bins - 1, static_cast<std::size_t>(d / bin_width));
  };

  std::vector<DistanceBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].low = static_cast<double>(b) * bin_width;
    out[b].high = static_cast<double>(b + 1) * bin_width;
    out[b].hoff_probability = hoff_edge_probability(hoff, out[b].center());
  }
  for (double d : distances) ++out[bin_of(d)].num_pairs;

  std::vector<std::size_t> edge_hits(bins, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto g = clique_expand(sample_hypergraph(pot, phi, derive_seed(seed, t)));
    for (const auto& e : g.edges()) ++edge_hits[bin_of(u.distance(e.first, e.second))];
  }
  for (std::size_t b = 0; b < bins; ++b) {
    if (out[b].num_pairs > 0) {
      out[b].hypergraph_probability = static_cast<double>(edge_hits[b]) /
                                      (static_cast<double>(out[b].num_pairs) *
                                       static_cast<double>(trials));
    }
  }
  return out;
}

}  // namespace hyperlp
