#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperlp/hypergraph.hpp"

namespace hyperlp {

// External label <-> dense id table. label(i) is the i-th distinct label in
// order of first appearance.
class LabelMap {
 public:
  Vertex intern(const std::string& label);
  const std::string& label(Vertex id) const { return labels_.at(id); }
  std::size_t size() const { return labels_.size(); }
  Vertex id(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> ids_;
};

struct DatasetBundle {
  std::string name;
  Hypergraph hypergraph;
  LabelMap labels;
  std::vector<std::string> sources;  // input paths
  std::string checksum;              // SHA-256 over the input files, hex
  std::size_t dropped_small = 0;     // hyperedges with fewer than 2 distinct vertices
  std::vector<std::string> warnings;
};

// Benson format: nverts lists hyperedge sizes one per line; simplices holds
// the vertex labels back to back. Throws DataError on malformed input.
DatasetBundle load_benson(const std::filesystem::path& nverts, const std::filesystem::path& simplices,
                          const std::string& name);

// One hyperedge per line of whitespace-separated labels; '#' starts a comment.
DatasetBundle load_plain(const std::filesystem::path& path, const std::string& name = "");

// Picks the loader by argument: plain when `simplices` is empty.
DatasetBundle load_dataset(const std::filesystem::path& primary,
                           const std::filesystem::path& simplices, const std::string& name);

// Writes H in plain format using the given labels (dense ids when null).
void save_plain(const Hypergraph& h, const std::filesystem::path& path,
                const LabelMap* labels = nullptr);

// Lowercase hex SHA-256 of the concatenated file contents.
std::string sha256_files(const std::vector<std::filesystem::path>& paths);
std::string sha256_hex(const std::string& bytes);

enum class FitMethod {
  MaximumLikelihood,  // discrete truncated power law, golden-section on zeta
  LogLeastSquares,    // log count vs log k regression, for sensitivity checks
};

struct SizeDistFit {
  double zeta = 0.0;
  std::size_t k_min = 2;
  std::size_t k_max = 10;
  double goodness = 0.0;  // sum of squared log-residuals of expected vs observed counts
  std::size_t samples = 0;
  FitMethod method = FitMethod::MaximumLikelihood;
};

// Fits P(k) ~ k^-zeta on k in [k_min, k_max]; sizes outside are ignored.
// Throws DataError with fewer than two distinct in-range sizes.
SizeDistFit fit_power_law(const std::map<std::size_t, std::size_t>& distribution,
                          std::size_t k_min = 2, std::size_t k_max = 10,
                          FitMethod method = FitMethod::MaximumLikelihood);

struct DatasetStats {
  std::size_t num_vertices = 0;
  std::size_t num_hyperedges = 0;
  std::size_t num_edges = 0;  // edges of the clique expansion
  std::size_t width = 0;      // 0 when there are no hyperedges
  std::map<std::size_t, std::size_t> sizes;
};

DatasetStats dataset_stats(const DatasetBundle& bundle);

}  // namespace hyperlp
