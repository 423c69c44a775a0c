#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hyperlp/heuristics.hpp"
#include "hyperlp/hypergraph.hpp"
#include "hyperlp/latent_model.hpp"
#include "hyperlp/rng.hpp"

namespace oracle {

using hyperlp::Hyperedge;
using hyperlp::ScorerId;
using hyperlp::Vertex;

// O(P*N) double loop, ties count one half.
inline double brute_auc(const std::vector<double>& scores, const std::vector<bool>& labels) {
  double wins = 0.0;
  double total = 0.0;
  for (std::size_t a = 0; a < scores.size(); ++a) {
    if (!labels[a]) continue;
    for (std::size_t b = 0; b < scores.size(); ++b) {
      if (labels[b]) continue;
      total += 1.0;
      if (scores[a] > scores[b]) wins += 1.0;
      else if (scores[a] == scores[b]) wins += 0.5;
    }
  }
  return wins / total;
}

using Dense = std::vector<std::vector<bool>>;

inline Dense dense_expand(std::size_t n, const std::vector<Hyperedge>& edges) {
  Dense adj(n, std::vector<bool>(n, false));
  for (const auto& f : edges) {
    for (Vertex a : f) {
      for (Vertex b : f) {
        if (a != b) adj[a][b] = true;
      }
    }
  }
  return adj;
}

inline Dense dense_from(const hyperlp::SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  Dense adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.first][e.second] = adj[e.second][e.first] = true;
  return adj;
}

inline std::size_t dense_degree(const Dense& adj, std::size_t v) {
  std::size_t d = 0;
  for (bool x : adj[v]) d += x;
  return d;
}

// Local heuristics straight from their set definitions.
inline double dense_score(ScorerId id, const Dense& adj, std::size_t u, std::size_t v) {
  const std::size_t n = adj.size();
  double cn = 0.0, aa = 0.0, ra = 0.0, uni = 0.0;
  for (std::size_t w = 0; w < n; ++w) {
    const bool in_u = adj[u][w];
    const bool in_v = adj[v][w];
    if (in_u || in_v) uni += 1.0;
    if (in_u && in_v) {
      const double dw = static_cast<double>(dense_degree(adj, w));
      cn += 1.0;
      aa += 1.0 / std::log(1.0 + dw);
      ra += 1.0 / dw;
    }
  }
  switch (id) {
    case ScorerId::CN: return cn;
    case ScorerId::AA: return aa;
    case ScorerId::RA: return ra;
    case ScorerId::PA: return static_cast<double>(dense_degree(adj, u) * dense_degree(adj, v));
    case ScorerId::JC: return uni == 0.0 ? 0.0 : cn / uni;
    case ScorerId::SR: break;
  }
  return std::nan("");
}

// Pairwise SimRank recursion, one entry at a time. Returns every iterate.
inline std::vector<std::vector<double>> naive_simrank_iterates(const Dense& adj, double decay,
                                                               std::size_t iterations) {
  const std::size_t n = adj.size();
  std::vector<double> s(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) s[i * n + i] = 1.0;
  std::vector<std::vector<double>> out{s};
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<double> next(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) {
          next[a * n + b] = 1.0;
          continue;
        }
        const auto da = dense_degree(adj, a);
        const auto db = dense_degree(adj, b);
        if (da == 0 || db == 0) continue;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (!adj[a][i]) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (adj[b][j]) sum += s[i * n + j];
          }
        }
        next[a * n + b] = decay * sum / static_cast<double>(da * db);
      }
    }
    s = next;
    out.push_back(s);
  }
  return out;
}

// Every s-subset of the n points whose pairwise distances are all <= 2r.
inline std::set<Hyperedge> brute_cliques(const hyperlp::LatentPositions& u, double radius, std::size_t s) {
  const std::size_t n = u.size();
  std::set<Hyperedge> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != s) continue;
    Hyperedge f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) f.push_back(static_cast<Vertex>(i));
    }
    bool ok = true;
    for (std::size_t a = 0; a < f.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < f.size() && ok; ++b) ok = u.distance(f[a], f[b]) <= 2.0 * radius;
    }
    if (ok) out.insert(f);
  }
  return out;
}

inline bool contains_pair(const Hyperedge& f, Vertex i, Vertex j) {
  bool has_i = false, has_j = false;
  for (Vertex v : f) {
    has_i |= v == i;
    has_j |= v == j;
  }
  return has_i && has_j;
}

// Calls body(selected_mask, weight) for each of the 2^m selection outcomes.
template <typename Body>
void for_each_outcome(const std::vector<Hyperedge>& fbar, const hyperlp::SelectionProbabilities& phi,
                      Body&& body) {
  const std::size_t m = fbar.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double w = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double p = phi.at(fbar[k].size());
      w *= (mask >> k & 1) ? p : 1.0 - p;
    }
    if (w > 0.0) body(mask, w);
  }
}

// P(i ~ j) by summing the weights of all outcomes in which some selected
// hyperedge covers the pair.
inline double enumerate_link_probability(const std::vector<Hyperedge>& fbar,
                                         const hyperlp::SelectionProbabilities& phi, Vertex i, Vertex j) {
  double p = 0.0;
  for_each_outcome(fbar, phi, [&](std::uint64_t mask, double w) {
    for (std::size_t k = 0; k < fbar.size(); ++k) {
      if ((mask >> k & 1) && contains_pair(fbar[k], i, j)) {
        p += w;
        return;
      }
    }
  });
  return p;
}

// Limit of the pooled (ensemble) AUC of a heuristic scored in place on the
// realized graph, as the number of independent trials grows. Positive and
// negative pairs are compared across independent outcomes, so the expected
// score histograms of each class multiply.
inline double exact_ensemble_auc(std::size_t n, const std::vector<Hyperedge>& fbar,
                                 const hyperlp::SelectionProbabilities& phi, ScorerId id) {
  std::map<double, double> pos, neg;
  for_each_outcome(fbar, phi, [&](std::uint64_t mask, double w) {
    std::vector<Hyperedge> chosen;
    for (std::size_t k = 0; k < fbar.size(); ++k) {
      if (mask >> k & 1) chosen.push_back(fbar[k]);
    }
    const Dense adj = dense_expand(n, chosen);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        (adj[a][b] ? pos : neg)[dense_score(id, adj, a, b)] += w;
      }
    }
  });
  double wins = 0.0, mass_pos = 0.0, mass_neg = 0.0;
  for (const auto& [x, wx] : pos) mass_pos += wx;
  for (const auto& [y, wy] : neg) mass_neg += wy;
  for (const auto& [x, wx] : pos) {
    for (const auto& [y, wy] : neg) {
      if (x > y) wins += wx * wy;
      else if (x == y) wins += 0.5 * wx * wy;
    }
  }
  return wins / (mass_pos * mass_neg);
}

// Random hypergraph with sizes in [2, max_size] on n vertices.
inline std::vector<Hyperedge> random_hyperedges(std::size_t n, std::size_t count, std::size_t max_size,
                                                hyperlp::Rng& rng) {
  std::vector<Hyperedge> out;
  std::uniform_int_distribution<std::size_t> size_dist(2, std::min(max_size, n));
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    std::shuffle(all.begin(), all.end(), rng);
    Hyperedge f(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

}  // namespace oracle
