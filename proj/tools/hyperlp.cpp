// hyperlp: hypergraph generation, link-prediction evaluation, relocation
// baselines and Monte-Carlo checks from the command line.
//
// Exit codes: 0 success, 2 validation, 3 data error, 4 internal.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperlp/config.hpp"
#include "hyperlp/data_io.hpp"
#include "hyperlp/error.hpp"
#include "hyperlp/evaluation.hpp"
#include "hyperlp/heuristics.hpp"
#include "hyperlp/latent_model.hpp"
#include "hyperlp/parallel.hpp"
#include "hyperlp/relocation.hpp"
#include "hyperlp/report.hpp"
#include "hyperlp/rng.hpp"
#include "hyperlp/theory.hpp"

namespace fs = std::filesystem;
using namespace hyperlp;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct DatasetOptions {
  std::string data;
  std::string simplices;
  std::string name;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--data", data, "Plain hypergraph file, or the nverts file with --simplices")->required();
    cmd->add_option("--simplices", simplices, "Benson simplices file (switches --data to nverts)");
    cmd->add_option("--name", name, "Dataset name used in reports");
  }

  DatasetBundle load() const {
    auto bundle = load_dataset(data, simplices, name);
    for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << '\n';
    return bundle;
  }
};

struct OutputOptions {
  std::string out;

  void add_to(CLI::App* cmd, const std::string& help = "Output file (stdout when omitted)") {
    cmd->add_option("--out", out, help);
  }
};

struct SeedOption {
  std::optional<std::uint64_t> seed;

  void add_to(CLI::App* cmd) { cmd->add_option("--seed", seed, "Random seed (auto-generated and recorded when omitted)"); }

  std::uint64_t resolve() {
    if (!seed) {
      std::random_device rd;
      seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
      std::cerr << "note: no --seed given, using " << *seed << '\n';
    }
    return *seed;
  }
};

// Writes `text` to `path` (or stdout) and drops the manifest next to a file.
void emit(const std::string& text, const std::string& path, RunManifest manifest) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << text;
  manifest.timestamp = utc_timestamp();
  write_manifest(manifest, path);
}

void add_inputs(RunManifest& manifest, const DatasetBundle& bundle) {
  std::string key;
  for (const auto& s : bundle.sources) key += (key.empty() ? "" : "+") + s;
  manifest.input_checksums[key] = bundle.checksum;
}

// --- generate ---------------------------------------------------------------

int cmd_generate(const std::string& config_path, SeedOption seed_opt, const std::string& prefix) {
  auto config = parse_model_config(KeyValueConfig::load(config_path));
  if (seed_opt.seed) config.seed = seed_opt.seed;
  if (!config.seed) config.seed = seed_opt.resolve();
  const std::uint64_t seed = *config.seed;

  const auto latents = sample_latents(config.n, config.d, derive_seed(seed, 0));
  const auto radii = radii_from_percentiles(latents, config.percentiles);
  const auto pot = build_potential(latents, radii, config.cap);
  const auto phi = resolve_phi(config, latents, radii, pot);
  const auto hoff = resolve_hoff(config, latents);
  const auto h = sample_hypergraph(pot, phi, derive_seed(seed, 1));

  RunManifest manifest;
  manifest.subcommand = "generate";
  manifest.seeds = {seed};
  manifest.input_checksums[config_path] = sha256_files({config_path});
  manifest.parameters = {{"n", config.n},          {"d", config.d},
                         {"percentiles", config.percentiles},
                         {"phi_preset", config.phi_values.empty() ? config.phi_preset : "explicit"},
                         {"phi", std::vector<double>(phi.values().begin(), phi.values().end())},
                         {"alpha", hoff.alpha},    {"gamma", hoff.gamma},
                         {"cap", config.cap}};

  const std::string hyg = prefix + ".hyg";
  save_plain(h, hyg);
  manifest.timestamp = utc_timestamp();
  write_manifest(manifest, hyg);

  {
    std::ofstream out(prefix + ".radii.csv", std::ios::binary);
    CsvWriter csv(out);
    csv.row({"size", "percentile", "radius", "phi", "potential", "selected"});
    const auto sizes = size_distribution(h);
    for (std::size_t s = 2; s <= radii.max_size(); ++s) {
      const auto sel = sizes.count(s) ? sizes.at(s) : 0;
      csv.row({std::to_string(s), format_double(config.percentiles[s - 2]), format_double(radii.at(s)),
               format_double(phi.at(s)), std::to_string(pot.of_size(s).size()), std::to_string(sel)});
    }
  }
  {
    std::ofstream out(prefix + ".latents.csv", std::ios::binary);
    CsvWriter csv(out);
    std::vector<std::string> header{"vertex"};
    for (std::size_t k = 0; k < latents.dim(); ++k) header.push_back("x" + std::to_string(k));
    csv.row(header);
    for (std::size_t i = 0; i < latents.size(); ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (double x : latents.row(i)) row.push_back(format_double(x));
      csv.row(row);
    }
  }
  std::cerr << "wrote " << hyg << " (" << h.num_hyperedges() << " hyperedges from " << pot.total()
            << " potential)\n";
  return 0;
}

// --- expand / stats / fit-sizes ---------------------------------------------

int cmd_expand(const DatasetOptions& data, const OutputOptions& output) {
  const auto bundle = data.load();
  const auto g = clique_expand(bundle.hypergraph);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.row({"u", "v"});
  for (const auto& e : g.edges()) csv.row({bundle.labels.label(e.first), bundle.labels.label(e.second)});
  RunManifest manifest;
  manifest.subcommand = "expand";
  add_inputs(manifest, bundle);
  emit(text.str(), output.out, manifest);
  return 0;
}

int cmd_stats(const DatasetOptions& data, const OutputOptions& output, const std::string& format) {
  const auto bundle = data.load();
  const auto stats = dataset_stats(bundle);
  RunManifest manifest;
  manifest.subcommand = "stats";
  add_inputs(manifest, bundle);
  std::ostringstream text;
  if (format == "json") {
    auto j = to_json(stats);
    j["dataset"] = bundle.name;
    j["dropped_small"] = bundle.dropped_small;
    text << j.dump(2) << '\n';
  } else {
    CsvWriter csv(text);
    csv.row({"dataset", "num_vertices", "num_hyperedges", "num_edges", "width", "size_distribution"});
    std::string sizes;
    for (const auto& [k, c] : stats.sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(c);
    csv.row({bundle.name, std::to_string(stats.num_vertices), std::to_string(stats.num_hyperedges),
             std::to_string(stats.num_edges), std::to_string(stats.width), sizes});
  }
  emit(text.str(), output.out, manifest);
  return 0;
}

int cmd_fit_sizes(const DatasetOptions& data, const OutputOptions& output, std::size_t k_min,
                  std::size_t k_max, const std::string& method, const std::string& format) {
  const auto bundle = data.load();
  const auto fit = fit_power_law(size_distribution(bundle.hypergraph), k_min, k_max,
                                 method == "lsq" ? FitMethod::LogLeastSquares : FitMethod::MaximumLikelihood);
  RunManifest manifest;
  manifest.subcommand = "fit-sizes";
  manifest.parameters = {{"k_min", k_min}, {"k_max", k_max}, {"method", method}};
  add_inputs(manifest, bundle);
  std::ostringstream text;
  if (format == "json") {
    auto j = to_json(fit);
    j["dataset"] = bundle.name;
    text << j.dump(2) << '\n';
  } else {
    CsvWriter csv(text);
    csv.row({"dataset", "zeta", "k_min", "k_max", "goodness", "samples", "method"});
    csv.row({bundle.name, format_double(fit.zeta), std::to_string(fit.k_min), std::to_string(fit.k_max),
             format_double(fit.goodness), std::to_string(fit.samples), method});
  }
  emit(text.str(), output.out, manifest);
  return 0;
}

// --- evaluate / adjust ------------------------------------------------------

struct ProtocolOptions {
  std::string algorithms = "cn,aa,pa,jc,ra";
  std::string protocol = "loo";
  double rho = 0.8;
  std::size_t d_hop = 2;
  double negative_ratio = 1.0;
  std::string negatives = "sampled";
  std::size_t runs = kDefaultRelocationRuns;
  double simrank_decay = 0.8;
  double simrank_tolerance = 1e-4;
  std::size_t simrank_iterations = 100;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--algorithms", algorithms, "Comma-separated scorers: cn,aa,pa,jc,ra,sr")->capture_default_str();
    cmd->add_option("--protocol", protocol, "loo or split")->check(CLI::IsMember({"loo", "split"}))->capture_default_str();
    cmd->add_option("--rho", rho, "Train fraction for split")->capture_default_str();
    cmd->add_option("--dhop", d_hop, "Max hop distance of sampled negatives")->capture_default_str();
    cmd->add_option("--neg-ratio", negative_ratio, "Negatives per test positive")->capture_default_str();
    cmd->add_option("--negatives", negatives, "sampled (d-hop) or all")->check(CLI::IsMember({"sampled", "all"}))->capture_default_str();
    cmd->add_option("--runs", runs, "Relocation runs")->capture_default_str();
    cmd->add_option("--simrank-decay", simrank_decay)->capture_default_str();
    cmd->add_option("--simrank-tol", simrank_tolerance)->capture_default_str();
    cmd->add_option("--simrank-iters", simrank_iterations)->capture_default_str();
  }

  Protocol build(std::uint64_t seed) const {
    Protocol p;
    p.kind = protocol == "split" ? Protocol::Kind::Split : Protocol::Kind::LeaveOneOut;
    p.split.rho = rho;
    p.split.d_hop = d_hop;
    p.split.negative_ratio = negative_ratio;
    p.split.negatives = negatives == "all" ? NegativeSampling::All : NegativeSampling::DHop;
    p.split.seed = derive_seed(seed, 0x5b1d);
    p.simrank = SimRankOptions{simrank_decay, simrank_tolerance, simrank_iterations};
    return p;
  }

  nlohmann::json to_json() const {
    return {{"algorithms", algorithms}, {"protocol", protocol},   {"rho", rho},
            {"d_hop", d_hop},           {"negative_ratio", negative_ratio},
            {"negatives", negatives},   {"runs", runs},
            {"simrank_decay", simrank_decay}, {"simrank_tolerance", simrank_tolerance},
            {"simrank_iterations", simrank_iterations},
            {"split_policy", "split fixed across relocation runs; only the relocation seed varies"}};
  }
};

struct ScorerRun {
  std::map<ScorerId, AdjustmentReport> reports;
  std::map<ScorerId, std::string> failures;
};

ScorerRun run_scorers(const Hypergraph& h, const std::vector<ScorerId>& scorers, const Protocol& protocol,
                      std::size_t runs, std::uint64_t seed) {
  ScorerRun result;
  for (ScorerId id : scorers) {
    try {
      result.reports.emplace(id, adjusted_auc(h, id, protocol, runs, derive_seed(seed, 0xad0)));
    } catch (const Error& e) {
      result.failures[id] = e.what();
      std::cerr << "error: " << scorer_name(id) << ": " << e.what() << '\n';
    }
  }
  return result;
}

int cmd_evaluate(const DatasetOptions& data, const OutputOptions& output, const std::string& json_path,
                 const ProtocolOptions& opts, SeedOption seed_opt) {
  if (opts.runs == 0) throw ValidationError("--runs must be at least 1");
  const auto scorers = parse_scorer_list(opts.algorithms);
  const auto bundle = data.load();
  const std::uint64_t seed = seed_opt.resolve();
  const auto protocol = opts.build(seed);
  const auto result = run_scorers(bundle.hypergraph, scorers, protocol, opts.runs, seed);
  const auto reversals = performance_reversal_check(result.reports);

  std::map<ScorerId, std::string> reversed_with;
  for (const auto& [a, b] : reversals) {
    auto& ra = reversed_with[a];
    auto& rb = reversed_with[b];
    ra += (ra.empty() ? "" : " ") + std::string(scorer_name(b));
    rb += (rb.empty() ? "" : " ") + std::string(scorer_name(a));
  }

  std::ostringstream text;
  CsvWriter csv(text);
  auto header = evaluation_header();
  for (const char* col : {"n_runs", "auc_rel_mean", "auc_rel_std", "af", "auc_adj", "reversed_with", "error"}) {
    header.push_back(col);
  }
  csv.row(header);
  for (ScorerId id : scorers) {
    std::vector<std::string> row;
    if (const auto it = result.reports.find(id); it != result.reports.end()) {
      const auto& r = it->second;
      row = evaluation_row(bundle.name, r, seed);
      row.push_back(std::to_string(r.n_runs()));
      row.push_back(format_double(r.auc_rel_mean));
      row.push_back(format_double(r.auc_rel_std));
      row.push_back(format_double(r.af));
      row.push_back(format_double(r.auc_adjusted));
      row.push_back(reversed_with[id]);
      row.push_back("");
    } else {
      row = {bundle.name, std::string(scorer_name(id)), protocol_name(protocol)};
      row.resize(header.size() - 1);
      row.push_back(result.failures.at(id));
    }
    csv.row(row);
  }

  RunManifest manifest;
  manifest.subcommand = "evaluate";
  manifest.seeds = {seed};
  manifest.parameters = opts.to_json();
  add_inputs(manifest, bundle);
  emit(text.str(), output.out, manifest);

  if (!json_path.empty()) {
    nlohmann::json j;
    j["dataset"] = bundle.name;
    j["reports"] = nlohmann::json::array();
    for (const auto& [id, r] : result.reports) j["reports"].push_back(to_json(r));
    j["failures"] = nlohmann::json::object();
    for (const auto& [id, msg] : result.failures) j["failures"][std::string(scorer_name(id))] = msg;
    j["reversals"] = nlohmann::json::array();
    for (const auto& [a, b] : reversals) j["reversals"].push_back({std::string(scorer_name(a)), std::string(scorer_name(b))});
    manifest.timestamp = utc_timestamp();
    j["manifest"] = manifest.to_json();
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw DataError("cannot write " + json_path);
    out << j.dump(2) << '\n';
  }
  return result.reports.empty() ? kExitData : 0;
}

int cmd_adjust(const DatasetOptions& data, const OutputOptions& output, const ProtocolOptions& opts,
               SeedOption seed_opt) {
  if (opts.runs == 0) throw ValidationError("--runs must be at least 1");
  const auto scorers = parse_scorer_list(opts.algorithms);
  const auto bundle = data.load();
  const std::uint64_t seed = seed_opt.resolve();
  const auto result = run_scorers(bundle.hypergraph, scorers, opts.build(seed), opts.runs, seed);

  std::ostringstream text;
  CsvWriter csv(text);
  csv.row(adjustment_header(scorers));
  csv.row(adjustment_row(bundle.name, scorers, result.reports));
  RunManifest manifest;
  manifest.subcommand = "adjust";
  manifest.seeds = {seed};
  manifest.parameters = opts.to_json();
  add_inputs(manifest, bundle);
  emit(text.str(), output.out, manifest);
  return result.reports.empty() ? kExitData : 0;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(const std::string& config_path, const OutputOptions& output, SeedOption seed_opt) {
  const auto config = parse_scan_config(KeyValueConfig::load(config_path));
  const std::uint64_t seed = seed_opt.resolve();
  const auto rows = overestimation_scan(config.grid, config.scorers, config.seeds_per_point, seed);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.row(scan_header());
  for (const auto& row : rows) csv.row(scan_row(row, config.grid));

  RunManifest manifest;
  manifest.subcommand = "scan";
  manifest.seeds = {seed};
  manifest.input_checksums[config_path] = sha256_files({config_path});
  manifest.parameters = {{"grid_points", config.grid.size()}, {"seeds_per_point", config.seeds_per_point}};
  emit(text.str(), output.out, manifest);
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyOptions {
  std::string claim;
  std::size_t trials = 100;
  std::size_t n = 100;
  double p = 0.1;
  std::size_t pairs = 1000;
  std::string algorithms = "cn,aa,pa,jc,ra";
  std::string scenario = "two-triangles";
  double phi = 0.6;
  std::string config;
  std::string data;
  std::string simplices;
  std::size_t edges = 200;
  std::size_t runs = 50;
};

PotentialIndex scenario_potential(const VerifyOptions& o, SelectionProbabilities& phi, std::uint64_t seed) {
  if (o.scenario == "fig4a") {
    phi = SelectionProbabilities({o.phi, 0.0});
    return PotentialIndex(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  }
  if (o.scenario == "fig4b") {
    phi = SelectionProbabilities({0.0, o.phi});
    return PotentialIndex(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  }
  if (o.scenario == "two-triangles") {
    phi = SelectionProbabilities({0.0, o.phi});
    return PotentialIndex(6, {{0, 1, 2}, {2, 3, 4}});
  }
  if (o.scenario == "latent") {
    if (o.config.empty()) throw ValidationError("--scenario latent needs --config");
    const auto config = parse_model_config(KeyValueConfig::load(o.config));
    const std::uint64_t model_seed = config.seed.value_or(seed);
    const auto latents = sample_latents(config.n, config.d, derive_seed(model_seed, 0));
    const auto radii = radii_from_percentiles(latents, config.percentiles);
    auto pot = build_potential(latents, radii, config.cap);
    phi = resolve_phi(config, latents, radii, pot);
    return pot;
  }
  throw ValidationError("unknown scenario '" + o.scenario + "' (fig4a, fig4b, two-triangles, latent)");
}

int cmd_verify(const VerifyOptions& o, const OutputOptions& output, SeedOption seed_opt) {
  const std::uint64_t seed = seed_opt.resolve();
  nlohmann::json results = nlohmann::json::array();
  nlohmann::json params = {{"claim", o.claim}, {"trials", o.trials}};
  RunManifest manifest;
  manifest.subcommand = "verify";
  manifest.seeds = {seed};

  bool all_pass = true;
  auto record = [&](const TrialSummary& s) {
    results.push_back(to_json(s));
    all_pass &= s.verdict == Verdict::Pass || s.verdict == Verdict::Indeterminate;
  };

  if (o.claim == "cc") {
    params.update({{"n", o.n}, {"p", o.p}});
    record(verify_clustering(o.n, o.p, o.trials, seed));
  } else if (o.claim == "cn-dist") {
    params.update({{"n", o.n}, {"p", o.p}, {"pairs_per_trial", o.pairs}});
    record(verify_cn_distribution(o.n, o.p, o.trials, o.pairs, seed));
  } else if (o.claim == "thm2") {
    params.update({{"n", o.n}, {"p", o.p}, {"algorithms", o.algorithms}});
    for (const auto& s : verify_theorem2(o.n, o.p, parse_scorer_list(o.algorithms), o.trials, seed)) record(s);
  } else if (o.claim == "thm1") {
    params.update({{"scenario", o.scenario}, {"phi", o.phi}});
    SelectionProbabilities phi;
    const auto pot = scenario_potential(o, phi, seed);
    if (!o.config.empty()) manifest.input_checksums[o.config] = sha256_files({o.config});
    record(verify_theorem1(pot, phi, o.trials, seed));
  } else if (o.claim == "relocation-baseline") {
    params.update({{"runs", o.runs}, {"algorithms", o.algorithms}});
    Hypergraph h;
    if (!o.data.empty()) {
      const auto bundle = load_dataset(o.data, o.simplices, "");
      add_inputs(manifest, bundle);
      h = bundle.hypergraph;
    } else {
      // random trivial hypergraph: `edges` uniform 2-edges on n vertices
      params.update({{"n", o.n}, {"edges", o.edges}});
      h = relocate(Hypergraph(o.n, std::vector<Hyperedge>(o.edges, Hyperedge{0, 1})), derive_seed(seed, 0x7e));
    }
    for (const auto& s : verify_relocation_baseline(h, parse_scorer_list(o.algorithms), o.runs, seed)) record(s);
  } else {
    throw ValidationError("unknown claim '" + o.claim + "'");
  }

  manifest.parameters = params;
  manifest.timestamp = utc_timestamp();
  nlohmann::json j;
  j["results"] = results;
  j["manifest"] = manifest.to_json();
  const std::string text = j.dump(2) + "\n";
  if (output.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output.out, std::ios::binary);
    if (!out) throw DataError("cannot write " + output.out);
    out << text;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph link-prediction evaluation toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: HYPERLP_THREADS or all cores)");

  std::string config_path;
  SeedOption seed;
  OutputOptions output;
  DatasetOptions data;
  std::string format = "csv";
  std::string json_path;
  ProtocolOptions protocol;
  VerifyOptions verify;
  std::size_t k_min = 2, k_max = 10;
  std::string method = "mle";

  auto* generate = app.add_subcommand("generate", "Sample a hypergraph from the latent-space model");
  generate->add_option("--config", config_path, "Model config (key = value)")->required();
  generate->add_option("--out", output.out, "Output prefix")->required();
  seed.add_to(generate);

  auto* expand = app.add_subcommand("expand", "Clique-expand a hypergraph to an edge list");
  data.add_to(expand);
  output.add_to(expand);

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  data.add_to(stats);
  output.add_to(stats);
  stats->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* fit = app.add_subcommand("fit-sizes", "Fit a truncated power law to hyperedge sizes");
  data.add_to(fit);
  output.add_to(fit);
  fit->add_option("--kmin", k_min)->capture_default_str();
  fit->add_option("--kmax", k_max)->capture_default_str();
  fit->add_option("--method", method)->check(CLI::IsMember({"mle", "lsq"}))->capture_default_str();
  fit->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* evaluate = app.add_subcommand("evaluate", "AUC, relocated baselines and adjusted AUC per scorer");
  data.add_to(evaluate);
  output.add_to(evaluate);
  evaluate->add_option("--json", json_path, "Also write a JSON report");
  protocol.add_to(evaluate);
  seed.add_to(evaluate);

  auto* adjust = app.add_subcommand("adjust", "Relocation adjustment table (one row per dataset)");
  data.add_to(adjust);
  output.add_to(adjust);
  protocol.add_to(adjust);
  seed.add_to(adjust);

  auto* scan = app.add_subcommand("scan", "Heuristic vs model AUC over a parameter grid");
  scan->add_option("--config", config_path, "Grid config (key = value)")->required();
  output.add_to(scan);
  seed.add_to(scan);

  auto* ver = app.add_subcommand("verify", "Monte-Carlo checks of the theoretical claims");
  ver->add_option("--claim", verify.claim)
      ->required()
      ->check(CLI::IsMember({"cc", "cn-dist", "thm1", "thm2", "relocation-baseline"}));
  ver->add_option("--trials", verify.trials)->capture_default_str();
  ver->add_option("--n", verify.n)->capture_default_str();
  ver->add_option("--p", verify.p)->capture_default_str();
  ver->add_option("--pairs", verify.pairs, "Pair samples per trial (cn-dist)")->capture_default_str();
  ver->add_option("--algorithms", verify.algorithms)->capture_default_str();
  ver->add_option("--scenario", verify.scenario, "thm1: fig4a, fig4b, two-triangles, latent")->capture_default_str();
  ver->add_option("--phi", verify.phi, "Selection probability for the thm1 scenarios")->capture_default_str();
  ver->add_option("--config", verify.config, "Model config for --scenario latent");
  ver->add_option("--data", verify.data, "Width-2 hypergraph for relocation-baseline");
  ver->add_option("--simplices", verify.simplices);
  ver->add_option("--edges", verify.edges, "2-edges of the random trivial hypergraph")->capture_default_str();
  ver->add_option("--runs", verify.runs)->capture_default_str();
  output.add_to(ver);
  seed.add_to(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    set_thread_count(threads);
    if (*generate) return cmd_generate(config_path, seed, output.out);
    if (*expand) return cmd_expand(data, output);
    if (*stats) return cmd_stats(data, output, format);
    if (*fit) return cmd_fit_sizes(data, output, k_min, k_max, method, format);
    if (*evaluate) return cmd_evaluate(data, output, json_path, protocol, seed);
    if (*adjust) return cmd_adjust(data, output, protocol, seed);
    if (*scan) return cmd_scan(config_path, output, seed);
    if (*ver) return cmd_verify(verify, output, seed);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
