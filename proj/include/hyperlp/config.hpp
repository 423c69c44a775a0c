#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlp/evaluation.hpp"
#include "hyperlp/heuristics.hpp"
#include "hyperlp/latent_model.hpp"

namespace hyperlp {

// Plain "key = value" text; '#' starts a comment, blank lines are skipped.
// Every error message carries "source:line".
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text, const std::string& source = "<config>");
  static KeyValueConfig load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  const std::string& source() const { return source_; }

  // Throws ValidationError naming the first key outside `allowed`.
  void require_known(std::initializer_list<std::string_view> allowed) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  // Whitespace- or comma-separated numbers.
  std::vector<double> get_doubles(const std::string& key) const;

  // "source:line: " prefix for messages about `key`.
  std::string where(const std::string& key) const;

 private:
  struct Entry {
    std::string value;
    std::size_t line = 0;
  };
  const Entry& entry(const std::string& key) const;

  std::string source_;
  std::map<std::string, Entry> entries_;
};

// Parses a list of numbers; throws ValidationError prefixed with `where`.
std::vector<double> parse_number_list(std::string_view text, const std::string& where);

// Generator configuration. Keys: n, d, seed, percentiles, phi (preset name
// or explicit list for sizes 2..k), alpha, gamma, cap.
struct ModelConfig {
  std::size_t n = 10;
  std::size_t d = 2;
  std::optional<std::uint64_t> seed;
  std::vector<double> percentiles{1, 5, 9, 13};
  std::string phi_preset = "power_law";
  std::vector<double> phi_values;  // overrides the preset when nonempty
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::size_t cap = kDefaultPotentialCap;
};

ModelConfig parse_model_config(const KeyValueConfig& config);

// Resolves Phi for a model config once U, radii and F-bar exist.
SelectionProbabilities resolve_phi(const ModelConfig& config, const LatentPositions& latents,
                                   const Radii& radii, const PotentialIndex& pot);
HoffParams resolve_hoff(const ModelConfig& config, const LatentPositions& latents);

// Scan grid. Keys: n and d (number lists), percentiles and phi (alternatives
// separated by ';'), seeds (per grid point), algorithms, alpha, gamma,
// model_pairs (all or covered).
// The grid is the cartesian product; an empty list gives an empty grid.
struct ScanConfig {
  std::vector<ScanPoint> grid;
  std::size_t seeds_per_point = 10;
  std::vector<ScorerId> scorers{ScorerId::CN, ScorerId::AA};
};

ScanConfig parse_scan_config(const KeyValueConfig& config);

}  // namespace hyperlp
