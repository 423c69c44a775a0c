#include "hyperlp/data_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "hyperlp/error.hpp"

namespace hyperlp {

Vertex LabelMap::intern(const std::string& label) {
  const auto [it, inserted] = ids_.try_emplace(label, static_cast<Vertex>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

Vertex LabelMap::id(const std::string& label) const {
  const auto it = ids_.find(label);
  if (it == ids_.end()) throw ValidationError("unknown vertex label '" + label + "'");
  return it->second;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<long long> parse_integers(const std::string& text, const std::filesystem::path& path) {
  std::vector<long long> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw DataError(path.string() + ": non-integer token '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw DataError(path.string() + " is empty");
  return out;
}

// Dedups a labelled vertex list and appends it as a hyperedge when it has at
// least two distinct vertices.
void add_hyperedge(std::vector<Vertex> members, std::vector<Hyperedge>& out, DatasetBundle& bundle,
                   const std::string& where) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() < 2) {
    ++bundle.dropped_small;
    bundle.warnings.push_back(where + ": hyperedge with fewer than two distinct vertices dropped");
    return;
  }
  out.push_back(std::move(members));
}

}  // namespace

DatasetBundle load_benson(const std::filesystem::path& nverts, const std::filesystem::path& simplices,
                          const std::string& name) {
  const auto sizes = parse_integers(read_file(nverts), nverts);
  const auto ids = parse_integers(read_file(simplices), simplices);
  long long total = 0;
  for (long long s : sizes) {
    if (s < 0) throw DataError(nverts.string() + ": negative hyperedge size");
    total += s;
  }
  if (total != static_cast<long long>(ids.size())) {
    throw DataError("nverts sums to " + std::to_string(total) + " but simplices has " +
                    std::to_string(ids.size()) + " entries");
  }

  DatasetBundle bundle;
  bundle.name = name;
  bundle.sources = {nverts.string(), simplices.string()};
  std::vector<Hyperedge> hyperedges;
  hyperedges.reserve(sizes.size());
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<Vertex> members;
    for (long long k = 0; k < sizes[i]; ++k) members.push_back(bundle.labels.intern(std::to_string(ids[cursor++])));
    add_hyperedge(std::move(members), hyperedges, bundle, "simplex " + std::to_string(i));
  }
  bundle.hypergraph = Hypergraph(bundle.labels.size(), std::move(hyperedges));
  bundle.checksum = sha256_files({nverts, simplices});
  return bundle;
}

DatasetBundle load_plain(const std::filesystem::path& path, const std::string& name) {
  const std::string text = read_file(path);
  DatasetBundle bundle;
  bundle.name = name.empty() ? path.stem().string() : name;
  bundle.sources = {path.string()};
  std::vector<Hyperedge> hyperedges;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Vertex> members;
    std::string label;
    while (fields >> label) members.push_back(bundle.labels.intern(label));
    if (members.empty()) continue;
    add_hyperedge(std::move(members), hyperedges, bundle,
                  path.string() + ":" + std::to_string(line_no));
  }
  if (hyperedges.empty()) throw DataError(path.string() + " contains no hyperedges");
  bundle.hypergraph = Hypergraph(bundle.labels.size(), std::move(hyperedges));
  bundle.checksum = sha256_files({path});
  return bundle;
}

DatasetBundle load_dataset(const std::filesystem::path& primary,
                           const std::filesystem::path& simplices, const std::string& name) {
  if (simplices.empty()) return load_plain(primary, name);
  return load_benson(primary, simplices, name.empty() ? primary.stem().string() : name);
}

void save_plain(const Hypergraph& h, const std::filesystem::path& path, const LabelMap* labels) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& f : h.hyperedges()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out << ' ';
      if (labels != nullptr) {
        out << labels->label(f[i]);
      } else {
        out << f[i];
      }
    }
    out << '\n';
  }
  if (!out) throw DataError("failed writing " + path.string());
}

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string sha256_files(const std::vector<std::filesystem::path>& paths) {
  std::string all;
  for (const auto& p : paths) all += read_file(p);
  return sha256_hex(all);
}

namespace {

struct InRange {
  std::vector<double> k;
  std::vector<double> count;
  double total = 0.0;
};

double truncation_norm(double zeta, std::size_t k_min, std::size_t k_max) {
  double norm = 0.0;
  for (std::size_t k = k_min; k <= k_max; ++k) norm += std::pow(static_cast<double>(k), -zeta);
  return norm;
}

}  // namespace

SizeDistFit fit_power_law(const std::map<std::size_t, std::size_t>& distribution,
                          std::size_t k_min, std::size_t k_max, FitMethod method) {
  if (k_min >= k_max) throw ValidationError("k_min must be below k_max");
  if (k_min < 1) throw ValidationError("k_min must be positive");
  InRange data;
  for (const auto& [k, c] : distribution) {
    if (k < k_min || k > k_max || c == 0) continue;
    data.k.push_back(static_cast<double>(k));
    data.count.push_back(static_cast<double>(c));
    data.total += static_cast<double>(c);
  }
  if (data.k.size() < 2) {
    throw DataError("power-law fit needs at least two distinct sizes in [" + std::to_string(k_min) +
                    ", " + std::to_string(k_max) + "]");
  }

  SizeDistFit fit;
  fit.k_min = k_min;
  fit.k_max = k_max;
  fit.method = method;
  fit.samples = static_cast<std::size_t>(data.total);

  if (method == FitMethod::MaximumLikelihood) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0;
    double hi = 10.0;
    double weighted_log_k = 0.0;
    for (std::size_t i = 0; i < data.k.size(); ++i) weighted_log_k += data.count[i] * std::log(data.k[i]);
    // normalized over the whole truncation window, not just the observed sizes
    auto objective = [&](double zeta) {
      return -zeta * weighted_log_k - data.total * std::log(truncation_norm(zeta, k_min, k_max));
    };
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-4) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + ratio * (hi - lo);
        f2 = objective(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - ratio * (hi - lo);
        f1 = objective(x1);
      }
    }
    fit.zeta = 0.5 * (lo + hi);
  } else {
    double mx = 0.0, my = 0.0;
    const auto m = static_cast<double>(data.k.size());
    for (std::size_t i = 0; i < data.k.size(); ++i) {
      mx += std::log(data.k[i]);
      my += std::log(data.count[i]);
    }
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < data.k.size(); ++i) {
      const double dx = std::log(data.k[i]) - mx;
      sxy += dx * (std::log(data.count[i]) - my);
      sxx += dx * dx;
    }
    fit.zeta = -sxy / sxx;
  }

  const double norm = truncation_norm(fit.zeta, k_min, k_max);
  for (std::size_t i = 0; i < data.k.size(); ++i) {
    const double expected = data.total * std::pow(data.k[i], -fit.zeta) / norm;
    const double r = std::log(data.count[i]) - std::log(expected);
    fit.goodness += r * r;
  }
  return fit;
}

DatasetStats dataset_stats(const DatasetBundle& bundle) {
  const auto& h = bundle.hypergraph;
  DatasetStats stats;
  stats.num_vertices = h.num_vertices();
  stats.num_hyperedges = h.num_hyperedges();
  stats.num_edges = clique_expand(h).num_edges();
  stats.width = h.num_hyperedges() == 0 ? 0 : width(h);
  stats.sizes = size_distribution(h);
  return stats;
}

}  // namespace hyperlp
