#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

fs::path workdir() {
  const auto dir = fs::temp_directory_path() / "hyperlp_cli_test";
  fs::create_directories(dir);
  return dir;
}

Result run(const std::string& args) {
  const std::string cmd = std::string(HYPERLP_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = workdir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("generate is deterministic and records its seed") {
  const auto cfg = write("gen.cfg", "n = 10\nd = 2\npercentiles = 5 20\nphi = 0.5 0.5\n");
  const auto a = workdir() / "ga";
  const auto b = workdir() / "gb";
  CHECK(run("generate --config " + cfg.string() + " --seed 3 --out " + a.string()).code == 0);
  CHECK(run("generate --config " + cfg.string() + " --seed 3 --out " + b.string()).code == 0);
  CHECK(slurp(a.string() + ".hyg") == slurp(b.string() + ".hyg"));
  CHECK(fs::exists(a.string() + ".radii.csv"));
  const auto manifest = nlohmann::json::parse(slurp(a.string() + ".hyg.manifest.json"));
  CHECK(manifest["seeds"][0] == 3);
  CHECK(manifest["subcommand"] == "generate");

  const auto c = workdir() / "gc";
  CHECK(run("generate --config " + cfg.string() + " --out " + c.string()).code == 0);
  const auto auto_seeded = nlohmann::json::parse(slurp(c.string() + ".hyg.manifest.json"));
  CHECK(auto_seeded["seeds"].size() == 1);
}

TEST_CASE("generate reports config errors with exit code 2") {
  const auto cfg = write("bad.cfg", "n = 10\npercentiles = 9 5\n");
  const auto r = run("generate --config " + cfg.string() + " --seed 1 --out " + (workdir() / "bad").string());
  CHECK(r.code == 2);
  CHECK(r.out.find("bad.cfg:2:") != std::string::npos);
}

TEST_CASE("evaluate reproduces the worked example") {
  const auto fig1 = write("fig1.hyg", "a b c\nd e\n");
  const auto out = workdir() / "fig1.csv";
  const auto r = run("evaluate --data " + fig1.string() + " --algorithms cn --protocol loo --seed 1 --out " +
                     out.string());
  CHECK(r.code == 0);
  const auto csv = slurp(out);
  CHECK(csv.find("fig1,CN,loo,0.875,1,4,6,1,5,") != std::string::npos);
  CHECK(fs::exists(out.string() + ".manifest.json"));

  const auto again = workdir() / "fig1b.csv";
  run("evaluate --data " + fig1.string() + " --algorithms cn --protocol loo --seed 1 --out " + again.string());
  CHECK(slurp(again) == csv);
}

TEST_CASE("usage and data errors map to exit codes") {
  const auto fig1 = write("fig1e.hyg", "a b c\nd e\n");
  const auto bad_alg = run("evaluate --data " + fig1.string() + " --algorithms cn,katz --seed 1");
  CHECK(bad_alg.code == 2);
  CHECK(bad_alg.out.find("cn, aa, pa, jc, ra, sr") != std::string::npos);
  CHECK(run("evaluate --data " + (workdir() / "missing.hyg").string() + " --seed 1").code == 3);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --claim nope").code == 2);
}

TEST_CASE("scan output shape") {
  const auto empty_cfg = write("empty_scan.cfg", "n = \n");
  const auto empty = run("scan --config " + empty_cfg.string() + " --seed 1");
  CHECK(empty.code == 0);
  CHECK(count_lines(empty.out) == 1);

  const auto cfg = write("scan.cfg", "n = 15\nseeds = 100\nalgorithms = cn\n");
  const auto out = workdir() / "scan.csv";
  CHECK(run("scan --config " + cfg.string() + " --seed 2 --out " + out.string()).code == 0);
  CHECK(count_lines(slurp(out)) == 101);
}

TEST_CASE("stats, fit-sizes, expand and adjust") {
  const auto h = write("small.hyg", "a b c\nb c d\nd e\ne f g h\na h\n");
  const auto stats = run("stats --data " + h.string() + " --format json");
  CHECK(stats.code == 0);
  const auto j = nlohmann::json::parse(stats.out);
  CHECK(j["num_hyperedges"] == 5);
  CHECK(j["width"] == 4);

  const auto fit = run("fit-sizes --data " + h.string() + " --kmax 4");
  CHECK(fit.code == 0);
  CHECK(fit.out.find("zeta") != std::string::npos);

  const auto expand = run("expand --data " + h.string());
  CHECK(expand.code == 0);
  CHECK(count_lines(expand.out) == 1 + 13);

  const auto adjust = run("adjust --data " + h.string() + " --algorithms cn,aa --runs 2 --seed 4");
  CHECK(adjust.code == 0);
  CHECK(adjust.out.rfind("dataset,CN_AUC,CN_AUC_rel_mean", 0) == 0);
}

TEST_CASE("verify emits JSON with verdicts") {
  const auto r = run("verify --claim thm1 --scenario two-triangles --phi 0.5 --trials 300 --seed 1");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["results"][0]["verdict"] == "pass");
  CHECK(j["manifest"]["seeds"][0] == 1);
}
