#include "beamlattice/run.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace beamlattice;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "beamlattice");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("beamlattice_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string out(const std::string& sub = "out") const { return (dir_ / sub).string(); }
  fs::path dir_;
};

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_F(Cli, VerifySucceeds) {
  const Result r = cli({"verify", "--n", "16,32", "--out", out()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(fs::path(out()) / "verify.json"));
  EXPECT_TRUE(j.contains("checks"));
}

TEST_F(Cli, ZeroLoadSolveGivesZeroField) {
  const Result r = cli({"solve", "--n", "6", "--out", out()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream csv(slurp(fs::path(out()) / "solution.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "i,j,ux,uy,theta");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; std::getline(ls, cell, ','); ++c)
      if (c >= 2) EXPECT_EQ(std::stod(cell), 0.0);
  }
  EXPECT_EQ(rows, 36);
}

TEST_F(Cli, ForceModeSolve) {
  const Result r = cli({"solve", "--n", "8", "--force", "1,0,1,0", "--torque", "0,2,0.5", "--out", out()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(fs::path(out()) / "solution.json"));
  EXPECT_LT(j.at("max_residual").get<double>(), 1e-11);
}

TEST_F(Cli, BadRhoIsConfigError) {
  const Result r = cli({"solve", "--rho-star", "-1", "--out", out()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--rho-star"), std::string::npos);
  EXPECT_EQ(cli({"diff-sweep", "--model", "km", "--lattice", "rectangular", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"err-maps", "--index", "err7", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"--out", out()}).code, 2);
  EXPECT_EQ(cli({"solve", "--bogus"}).code, 2);
}

TEST_F(Cli, IncompatibleForceExitsThree) {
  const Result r = cli({"solve", "--n", "4", "--force", "0,0,1,0", "--out", out()});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, ErrMapsSvgHasTwelvePanels) {
  const Result r = cli({"err-maps", "--n", "5,7,9,11", "--index", "err2", "--format", "csv,svg", "--out", out()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(fs::path(out()) / "err2.svg");
  // Each panel is titled with its (min, max) pair.
  EXPECT_EQ(count(svg, "text-anchor='middle'>("), 12);
  EXPECT_FALSE(fs::exists(fs::path(out()) / "err0.svg"));
  const std::string csv = slurp(fs::path(out()) / "err_maps.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "eps,rho_star,ip,jp,value,index_kind");
}

TEST_F(Cli, ManifestListsArtifacts) {
  ASSERT_EQ(cli({"diff-sweep", "--n", "4,8", "--out", out()}).code, 0);
  const auto m = nlohmann::json::parse(slurp(fs::path(out()) / "manifest.json"));
  EXPECT_EQ(m.at("version"), kVersion);
  EXPECT_EQ(m.at("schema_version"), 1);
  EXPECT_EQ(m.at("config").at("command"), "diff-sweep");
  std::vector<std::string> names;
  for (const auto& a : m.at("artifacts")) names.push_back(a.is_string() ? a.get<std::string>() : a.at("name").get<std::string>());
  EXPECT_NE(std::find(names.begin(), names.end(), "diff_sweep.csv"), names.end());
}

TEST_F(Cli, PresetRunsAreByteIdentical) {
  ASSERT_EQ(cli({"--preset", "paper-fig2", "--n", "4,8,16", "--out", out("a")}).code, 0);
  ASSERT_EQ(cli({"--preset", "paper-fig2", "--n", "4,8,16", "--out", out("b")}).code, 0);
  const std::string a = slurp(fs::path(out("a")) / "diff_sweep.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(fs::path(out("b")) / "diff_sweep.csv"));
  EXPECT_EQ(cli({"err-maps", "--preset", "paper-fig2", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"--preset", "paper-fig9", "--out", out()}).code, 2);
}

TEST_F(Cli, ConfigFileAndFlagPrecedence) {
  const fs::path cfg = dir_ / "cfg.json";
  std::ofstream(cfg) << R"({"command": "diff-sweep", "n": [4, 8], "rho_star": [2.0], "cutoff": 3})";
  ASSERT_EQ(cli({"--config", cfg.string(), "--rho-star", "5", "--out", out()}).code, 0);
  const auto m = nlohmann::json::parse(slurp(fs::path(out()) / "manifest.json"));
  EXPECT_EQ(m.at("config").at("rho_star"), nlohmann::json::array({5.0}));
  EXPECT_EQ(m.at("config").at("cutoff"), 3);

  const fs::path bad = dir_ / "bad.json";
  std::ofstream(bad) << R"({"command": "solve", "colour": "red"})";
  const Result r = cli({"--config", bad.string(), "--out", out()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
  EXPECT_EQ(cli({"--config", (dir_ / "missing.json").string()}).code, 2);
}

TEST_F(Cli, LoadFile) {
  const fs::path lf = dir_ / "load.json";
  std::ofstream(lf) << R"({"forces": [[1, 1, 0.5, -0.5]], "torques": [[2, 0, 1.0]]})";
  ASSERT_EQ(cli({"solve", "--n", "6", "--load-file", lf.string(), "--out", out()}).code, 0);
  const fs::path bad = dir_ / "bad.json";
  std::ofstream(bad) << R"({"forces": [], "extra": 1})";
  EXPECT_EQ(cli({"solve", "--load-file", bad.string(), "--out", out()}).code, 2);
}

TEST(RunConfigJson, RoundTrip) {
  RunConfig c = preset_config("paper-fig4");
  RunConfig d = command_defaults("err-maps");
  apply_json(d, to_json(c));
  EXPECT_EQ(to_json(c), to_json(d));
  EXPECT_THROW(apply_json(d, nlohmann::json::array()), ConfigError);
}
