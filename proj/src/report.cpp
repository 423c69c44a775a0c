#include "hyperlp/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "hyperlp/error.hpp"

namespace hyperlp {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buffer, ptr);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << csv_field(fields[i]);
  }
  out_ << "\r\n";
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["parameters"] = parameters;
  j["seeds"] = seeds;
  j["version"] = std::string(kVersion);
  j["input_checksums"] = input_checksums;
  j["timestamp"] = timestamp;
  return j;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::filesystem::path write_manifest(const RunManifest& manifest, const std::filesystem::path& output) {
  std::filesystem::path path = output;
  path += ".manifest.json";
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << manifest.to_json().dump(2) << '\n';
  return path;
}

std::vector<std::string> evaluation_header() {
  return {"dataset", "scorer", "protocol", "auc", "auc_conditional", "n_pos", "n_neg", "seed"};
}

std::vector<std::string> evaluation_row(const std::string& dataset, const AdjustmentReport& report,
                                        std::uint64_t seed) {
  return {dataset,
          std::string(scorer_name(report.scorer)),
          report.protocol,
          format_double(report.auc_original),
          format_double(report.auc_conditional_original),
          std::to_string(report.num_positive),
          std::to_string(report.num_negative),
          std::to_string(seed)};
}

std::vector<std::string> adjustment_header(const std::vector<ScorerId>& scorers) {
  std::vector<std::string> out{"dataset"};
  for (ScorerId id : scorers) {
    const std::string name(scorer_name(id));
    for (const char* col : {"AUC", "AUC_rel_mean", "AUC_rel_std", "AF", "AUC_adj"}) {
      out.push_back(name + "_" + col);
    }
  }
  return out;
}

std::vector<std::string> adjustment_row(const std::string& dataset,
                                        const std::vector<ScorerId>& scorers,
                                        const std::map<ScorerId, AdjustmentReport>& reports) {
  std::vector<std::string> out{dataset};
  for (ScorerId id : scorers) {
    const auto it = reports.find(id);
    if (it == reports.end()) {
      out.insert(out.end(), 5, "");
      continue;
    }
    const auto& r = it->second;
    out.push_back(format_double(r.auc_original));
    out.push_back(format_double(r.auc_rel_mean));
    out.push_back(format_double(r.auc_rel_std));
    out.push_back(format_double(r.af));
    out.push_back(format_double(r.auc_adjusted));
  }
  return out;
}

std::vector<std::string> scan_header() {
  return {"point", "n", "d", "percentiles", "phi", "seed", "scorer",
          "model_pairs", "model_auc", "heuristic_auc", "overestimated", "error"};
}

std::vector<std::string> scan_row(const ScanRow& row, const std::vector<ScanPoint>& grid) {
  const auto& p = grid.at(row.point);
  std::string pct;
  for (double x : p.percentiles) pct += (pct.empty() ? "" : " ") + format_double(x);
  std::string phi = p.phi_preset;
  if (!p.phi_values.empty()) {
    phi.clear();
    for (double x : p.phi_values) phi += (phi.empty() ? "" : " ") + format_double(x);
  }
  const bool failed = !row.error.empty();
  return {std::to_string(row.point),
          std::to_string(p.n),
          std::to_string(p.d),
          pct,
          phi,
          std::to_string(row.seed),
          std::string(scorer_name(row.scorer)),
          p.model_covered_only ? "covered" : "all",
          failed ? "" : format_double(row.model_auc),
          failed ? "" : format_double(row.heuristic_auc),
          failed ? "" : (row.overestimated ? "1" : "0"),
          row.error};
}

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

nlohmann::json to_json(const AdjustmentReport& r) {
  nlohmann::json j;
  j["scorer"] = std::string(scorer_name(r.scorer));
  j["protocol"] = r.protocol;
  j["auc"] = number(r.auc_original);
  j["auc_conditional"] = number(r.auc_conditional_original);
  j["n_pos"] = r.num_positive;
  j["n_neg"] = r.num_negative;
  j["auc_rel_runs"] = nlohmann::json::array();
  for (double x : r.auc_rel_runs) j["auc_rel_runs"].push_back(number(x));
  j["seeds"] = r.seeds;
  j["failed_runs"] = r.failed_runs;
  j["n_runs"] = r.n_runs();
  j["auc_rel_mean"] = number(r.auc_rel_mean);
  j["auc_rel_std"] = number(r.auc_rel_std);
  j["af"] = number(r.af);
  j["auc_adj"] = number(r.auc_adjusted);
  return j;
}

nlohmann::json to_json(const TrialSummary& s) {
  nlohmann::json j;
  j["claim"] = s.claim_id;
  if (s.scorer) j["scorer"] = std::string(scorer_name(*s.scorer));
  j["n_trials"] = s.n_trials;
  j["statistic"] = number(s.statistic);
  j["std_error"] = number(s.std_error);
  j["ci_low"] = number(s.ci_low);
  j["ci_high"] = number(s.ci_high);
  j["target"] = number(s.target);
  j["verdict"] = std::string(verdict_name(s.verdict));
  j["details"] = nlohmann::json::object();
  for (const auto& [k, v] : s.details) j["details"][k] = number(v);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

nlohmann::json to_json(const DatasetStats& stats) {
  nlohmann::json j;
  j["num_vertices"] = stats.num_vertices;
  j["num_hyperedges"] = stats.num_hyperedges;
  j["num_edges"] = stats.num_edges;
  j["width"] = stats.width;
  j["sizes"] = nlohmann::json::object();
  for (const auto& [k, c] : stats.sizes) j["sizes"][std::to_string(k)] = c;
  return j;
}

nlohmann::json to_json(const SizeDistFit& fit) {
  nlohmann::json j;
  j["zeta"] = number(fit.zeta);
  j["k_min"] = fit.k_min;
  j["k_max"] = fit.k_max;
  j["goodness"] = number(fit.goodness);
  j["samples"] = fit.samples;
  j["method"] = fit.method == FitMethod::MaximumLikelihood ? "mle" : "lsq";
  return j;
}

}  // namespace hyperlp
