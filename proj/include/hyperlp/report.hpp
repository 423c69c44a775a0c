#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperlp/data_io.hpp"
#include "hyperlp/evaluation.hpp"
#include "hyperlp/relocation.hpp"
#include "hyperlp/theory.hpp"

namespace hyperlp {

inline constexpr std::string_view kVersion = "0.1.0";

// Shortest decimal text that round-trips to the same double; "nan"/"inf"
// for non-finite values.
std::string format_double(double value);

// RFC 4180 field quoting: fields holding a comma, quote, CR or LF are
// wrapped in quotes with inner quotes doubled. Rows end in CRLF.
std::string csv_field(std::string_view field);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

// Everything needed to rerun a subcommand. Tabular outputs never contain the
// timestamp, so equal manifests give byte-identical tables.
struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::uint64_t> seeds;
  std::map<std::string, std::string> input_checksums;  // path -> sha256
  std::string timestamp;                               // UTC, ISO 8601

  nlohmann::json to_json() const;
};

std::string utc_timestamp();

// Writes `<output>.manifest.json` next to an output file and returns its path.
std::filesystem::path write_manifest(const RunManifest& manifest, const std::filesystem::path& output);

// Evaluation rows: dataset, scorer, protocol, auc, auc_conditional, n_pos, n_neg, seed.
std::vector<std::string> evaluation_header();
std::vector<std::string> evaluation_row(const std::string& dataset, const AdjustmentReport& report,
                                        std::uint64_t seed);

// Table-1 shaped rows: one per dataset, and per scorer the columns
// AUC, AUC_rel_mean, AUC_rel_std, AF, AUC_adj.
std::vector<std::string> adjustment_header(const std::vector<ScorerId>& scorers);
std::vector<std::string> adjustment_row(const std::string& dataset,
                                        const std::vector<ScorerId>& scorers,
                                        const std::map<ScorerId, AdjustmentReport>& reports);

std::vector<std::string> scan_header();
std::vector<std::string> scan_row(const ScanRow& row, const std::vector<ScanPoint>& grid);

nlohmann::json to_json(const AdjustmentReport& report);
nlohmann::json to_json(const TrialSummary& summary);
nlohmann::json to_json(const DatasetStats& stats);
nlohmann::json to_json(const SizeDistFit& fit);

}  // namespace hyperlp
