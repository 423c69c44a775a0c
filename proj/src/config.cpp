#include "hyperlp/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hyperlp/error.hpp"

namespace hyperlp {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view token, const std::string& where) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ValidationError(where + "'" + std::string(token) + "' is not a number");
  }
  return value;
}

}  // namespace

std::vector<double> parse_number_list(std::string_view text, const std::string& where) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<double> out;
  std::string token;
  while (in >> token) out.push_back(parse_number(token, where));
  return out;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text, const std::string& source) {
  KeyValueConfig config;
  config.source_ = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    const std::string prefix = source + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ValidationError(prefix + "expected 'key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    if (key.empty()) throw ValidationError(prefix + "missing key");
    if (config.entries_.count(key)) {
      throw ValidationError(prefix + "duplicate key '" + key + "' (first on line " +
                            std::to_string(config.entries_[key].line) + ")");
    }
    config.entries_[key] = Entry{trim(std::string_view(content).substr(eq + 1)), line_no};
  }
  return config;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

void KeyValueConfig::require_known(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, e] : entries_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ValidationError(where(key) + "unknown key '" + key + "'");
    }
  }
}

const KeyValueConfig::Entry& KeyValueConfig::entry(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ValidationError(source_ + ": missing required key '" + key + "'");
  return it->second;
}

std::string KeyValueConfig::where(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return source_ + ": ";
  return source_ + ":" + std::to_string(it->second.line) + ": ";
}

std::string KeyValueConfig::get_string(const std::string& key) const { return entry(key).value; }

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double KeyValueConfig::get_double(const std::string& key) const {
  return parse_number(entry(key).value, where(key));
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key) const {
  const auto& value = entry(key).value;
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ValidationError(where(key) + "'" + value + "' is not a nonnegative integer");
  }
  return out;
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? get_uint(key) : fallback;
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key) const {
  return parse_number_list(entry(key).value, where(key));
}

namespace {

void check_percentiles(const std::vector<double>& p, const std::string& where) {
  if (p.empty()) throw ValidationError(where + "percentiles must not be empty");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0 && p[i] <= 100.0)) throw ValidationError(where + "percentile outside (0, 100]");
    if (i > 0 && !(p[i] > p[i - 1])) throw ValidationError(where + "percentiles must be strictly increasing");
  }
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '.' || s[0] == '-');
}

}  // namespace

ModelConfig parse_model_config(const KeyValueConfig& config) {
  config.require_known({"n", "d", "seed", "percentiles", "phi", "alpha", "gamma", "cap"});
  ModelConfig out;
  out.n = config.get_uint("n", out.n);
  if (out.n < 2) throw ValidationError(config.where("n") + "n must be at least 2");
  out.d = config.get_uint("d", out.d);
  if (out.d < 1) throw ValidationError(config.where("d") + "d must be at least 1");
  if (config.has("seed")) out.seed = config.get_uint("seed");
  if (config.has("percentiles")) out.percentiles = config.get_doubles("percentiles");
  check_percentiles(out.percentiles, config.where("percentiles"));
  if (config.has("phi")) {
    const std::string phi = config.get_string("phi");
    if (looks_numeric(phi)) {
      out.phi_values = config.get_doubles("phi");
      if (out.phi_values.size() != out.percentiles.size()) {
        throw ValidationError(config.where("phi") + "phi lists " + std::to_string(out.phi_values.size()) +
                              " sizes but percentiles imply " + std::to_string(out.percentiles.size()));
      }
      for (double v : out.phi_values) {
        if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(config.where("phi") + "phi values must lie in [0, 1]");
      }
    } else {
      out.phi_preset = phi;
    }
  }
  if (config.has("alpha")) {
    out.alpha = config.get_double("alpha");
    if (!(*out.alpha > 0.0)) throw ValidationError(config.where("alpha") + "alpha must be positive");
  }
  if (config.has("gamma")) out.gamma = config.get_double("gamma");
  out.cap = config.get_uint("cap", out.cap);
  return out;
}

HoffParams resolve_hoff(const ModelConfig& config, const LatentPositions& latents) {
  HoffParams params = default_hoff_params(latents);
  if (config.alpha) params.alpha = *config.alpha;
  if (config.gamma) params.gamma = *config.gamma;
  return params;
}

SelectionProbabilities resolve_phi(const ModelConfig& config, const LatentPositions& latents,
                                   const Radii& radii, const PotentialIndex& pot) {
  if (!config.phi_values.empty()) return SelectionProbabilities(config.phi_values);
  PhiContext ctx;
  ctx.max_size = radii.max_size();
  ctx.radii = radii;
  ctx.hoff = resolve_hoff(config, latents);
  ctx.potential = &pot;
  return phi_preset(config.phi_preset, ctx);
}

ScanConfig parse_scan_config(const KeyValueConfig& config) {
  config.require_known({"n", "d", "percentiles", "phi", "seeds", "algorithms", "alpha", "gamma", "model_pairs"});
  ScanConfig out;
  out.seeds_per_point = config.get_uint("seeds", out.seeds_per_point);
  if (config.has("algorithms")) {
    try {
      out.scorers = parse_scorer_list(config.get_string("algorithms"));
    } catch (const ValidationError& e) {
      throw ValidationError(config.where("algorithms") + e.what());
    }
  }

  std::vector<std::size_t> ns{30};
  std::vector<std::size_t> ds{2};
  const auto to_sizes = [&](const std::string& key) {
    std::vector<std::size_t> v;
    for (double x : config.get_doubles(key)) {
      if (x < 1 || x != std::floor(x)) throw ValidationError(config.where(key) + "expected positive integers");
      v.push_back(static_cast<std::size_t>(x));
    }
    return v;
  };
  if (config.has("n")) ns = to_sizes("n");
  if (config.has("d")) ds = to_sizes("d");

  std::vector<std::vector<double>> percentile_sets{{1, 5, 9, 13}};
  if (config.has("percentiles")) {
    percentile_sets.clear();
    for (const auto& alt : split(config.get_string("percentiles"), ';')) {
      if (alt.empty()) continue;
      percentile_sets.push_back(parse_number_list(alt, config.where("percentiles")));
      check_percentiles(percentile_sets.back(), config.where("percentiles"));
    }
  }

  struct PhiChoice {
    std::string preset;
    std::vector<double> values;
  };
  std::vector<PhiChoice> phis{{"power_law", {}}};
  if (config.has("phi")) {
    phis.clear();
    for (const auto& alt : split(config.get_string("phi"), ';')) {
      if (alt.empty()) continue;
      if (looks_numeric(alt)) {
        phis.push_back({"", parse_number_list(alt, config.where("phi"))});
      } else {
        phis.push_back({alt, {}});
      }
    }
  }

  std::optional<HoffParams> hoff;
  if (config.has("alpha") || config.has("gamma")) {
    if (!config.has("alpha") || !config.has("gamma")) {
      throw ValidationError(config.where(config.has("alpha") ? "alpha" : "gamma") +
                            "alpha and gamma must be given together in a scan");
    }
    hoff = HoffParams{config.get_double("alpha"), config.get_double("gamma")};
  }

  const std::string model_pairs = config.get_string("model_pairs", "all");
  if (model_pairs != "all" && model_pairs != "covered") {
    throw ValidationError(config.where("model_pairs") + "model_pairs must be 'all' or 'covered'");
  }

  for (std::size_t n : ns) {
    for (std::size_t d : ds) {
      for (const auto& pct : percentile_sets) {
        for (const auto& phi : phis) {
          if (!phi.values.empty() && phi.values.size() != pct.size()) {
            throw ValidationError(config.where("phi") + "explicit phi length does not match percentiles");
          }
          ScanPoint point;
          point.n = n;
          point.d = d;
          point.percentiles = pct;
          point.phi_preset = phi.preset.empty() ? "power_law" : phi.preset;
          point.phi_values = phi.values;
          point.hoff = hoff;
          point.model_covered_only = model_pairs == "covered";
          out.grid.push_back(point);
        }
      }
    }
  }
  return out;
}

}  // namespace hyperlp
