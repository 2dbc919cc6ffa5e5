#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/report.hpp"
#include "cli/run.hpp"
#include "cli/verify.hpp"
#include "dqm/lattice.hpp"
#include "dqm/sampling.hpp"

namespace {

using namespace dqm::cli;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_command_line(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dqm_cli_test_" + name);
}

TEST(Report, EmptyReportIsHeaderOnly) {
  EXPECT_EQ(export_report(VerificationReport{}, Format::Csv), "check,params,residual,tolerance,status\n");
  EXPECT_TRUE(VerificationReport{}.passed());
}

TEST(Report, PassingRow) {
  VerificationReport r;
  r.add_bound("a", "N=1", 1e-14, 1e-12);
  const auto rows = csv_rows(export_report(r, Format::Csv));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].back(), "pass");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(exit_status(r), kExitOk);
}

TEST(Report, MixedRowsFail) {
  VerificationReport r;
  r.add_bound("a", "", 1e-14, 1e-12);
  r.add_bound("b", "", 1.0, 1e-12);
  r.add_info("c", "", 5.0, 1e-12);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(exit_status(r), kExitChecksFailed);
  const auto doc = nlohmann::json::parse(export_report(r, Format::Json));
  EXPECT_EQ(doc.at("status"), "fail");
  ASSERT_EQ(doc.at("rows").size(), 3u);
  EXPECT_EQ(doc.at("rows")[1].at("status"), "fail");
  EXPECT_EQ(doc.at("rows")[2].at("status"), "info");
  EXPECT_EQ(doc.at("rows")[0].at("check"), "a");
  EXPECT_EQ(doc.at("rows")[0].at("tolerance"), 1e-12);
}

TEST(Report, InfoRowsDoNotFail) {
  VerificationReport r;
  r.add_info("c", "", 5.0, 1e-12);
  r.add_minimum("order", "", 1.05, 0.9);
  EXPECT_TRUE(r.passed());
  r.add_minimum("order", "", 0.5, 0.9);
  EXPECT_FALSE(r.passed());
}

TEST(Report, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng) * std::pow(10.0, i % 40 - 20);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Report, UnwritablePathThrows) {
  std::ostringstream sink;
  EXPECT_THROW(write_artifact("x", "/nonexistent-dir/out.csv", sink), std::runtime_error);
}

TEST(Cli, SpectrumEnergyExample) {
  const auto r = invoke({"spectrum", "--N", "2", "--p", "0.5", "--what", "energy"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "n,value\n0,1\n1,2\n2,1\n");
}

TEST(Cli, SpectrumPositionAndCommutator) {
  const auto pos = csv_rows(invoke({"spectrum", "--N", "2", "--what", "position"}).out);
  ASSERT_EQ(pos.size(), 4u);
  EXPECT_EQ(pos[0], (std::vector<std::string>{"m_prime", "value"}));
  EXPECT_NEAR(std::stod(pos[1][1]), -1.0, 1e-14);
  EXPECT_NEAR(std::stod(pos[3][1]), 1.0, 1e-14);
  const auto comm = csv_rows(invoke({"spectrum", "--N", "4", "--what", "commutator"}).out);
  ASSERT_EQ(comm.size(), 6u);
  for (int n = 0; n <= 4; ++n) EXPECT_NEAR(std::stod(comm[n + 1][1]), 1.0 - n / 2.0, 1e-14);
}

TEST(Cli, ConvergeExampleDecreases) {
  const auto r = invoke({"converge", "--n", "0", "--N-list", "16,32"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "max_error"}));
  EXPECT_EQ(rows[1][0], "16");
  EXPECT_GT(std::stod(rows[1][1]), std::stod(rows[2][1]));
}

TEST(Cli, VerifyAllIsDeterministicAndPasses) {
  const auto a = invoke({"verify-all", "--seed", "7"});
  const auto b = invoke({"verify-all", "--seed", "7"});
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("check,params,residual,tolerance,status\n", 0), 0u);
  const auto json_a = invoke({"verify-all", "--seed", "7", "--format", "json"});
  const auto json_b = invoke({"verify-all", "--seed", "7", "--format", "json"});
  EXPECT_EQ(json_a.out, json_b.out);
  EXPECT_EQ(nlohmann::json::parse(json_a.out).at("status"), "pass");
}

TEST(Cli, BasisTable) {
  const auto r = invoke({"basis", "--N", "4", "--epsilon", "1"});
  ASSERT_EQ(r.status, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"m", "k_m"}));
  EXPECT_EQ(rows[3][1], "inf");
  EXPECT_NEAR(std::stod(rows[2][1]), 2.0, 1e-14);
  const auto full = invoke({"basis", "--N", "3", "--table", "--format", "json"});
  const auto doc = nlohmann::json::parse(full.out);
  EXPECT_EQ(doc.at("basis").at("rows").size(), 9u);
}

TEST(Cli, EvolveWithStateFileAndOutputFile) {
  std::mt19937_64 rng(3);
  const dqm::LatticeState state = dqm::random_state(2, 1.0, rng);
  const auto state_path = temp_path("state.json");
  const auto out_path = temp_path("trace.csv");
  std::ofstream(state_path) << dqm::to_json(state);
  const auto r = invoke({"evolve", "--hamiltonian", "sigma_y", "--tau", "0.1", "--steps", "3", "--state",
                         state_path.string(), "--output", out_path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  const auto rows = csv_rows(text.str());
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "norm", "re_0", "im_0", "re_1", "im_1"}));
  // Row 0 re-reads the initial state exactly.
  EXPECT_EQ(std::stod(rows[1][2]), state[0].real());
  EXPECT_EQ(std::stod(rows[1][3]), state[0].imag());
  EXPECT_EQ(std::stod(rows[1][5]), state[1].imag());
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_NEAR(std::stod(rows[k][1]), state.norm(), 1e-12);
  std::filesystem::remove(state_path);
  std::filesystem::remove(out_path);
}

TEST(Cli, EvolveMatrixFile) {
  const auto h_path = temp_path("h.json");
  std::ofstream(h_path) << R"({"re": [[1, 0, 0], [0, 2, 0], [0, 0, 3]]})";
  const auto r = invoke({"evolve", "--hamiltonian", h_path.string(), "--tau", "0.5", "--steps", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(csv_rows(r.out)[0].size(), 8u);
  std::ofstream(h_path) << R"({"re": [[0, 1], [0, 0]]})";
  const auto bad = invoke({"evolve", "--hamiltonian", h_path.string(), "--tau", "0.5"});
  EXPECT_EQ(bad.status, kExitUsage);
  EXPECT_NE(bad.err.find("--hamiltonian"), std::string::npos);
  std::filesystem::remove(h_path);
}

TEST(Cli, EvolveStateSizeMismatchNamesParameter) {
  const auto state_path = temp_path("state3.json");
  std::ofstream(state_path) << R"({"re": [1, 0, 0]})";
  const auto r = invoke({"evolve", "--hamiltonian", "sigma_x", "--tau", "0.1", "--state", state_path.string()});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("--state"), std::string::npos);
  std::filesystem::remove(state_path);
}

TEST(Cli, HeisenbergCheckPassesForPauli) {
  const auto r = invoke({"heisenberg-check", "--hamiltonian", "sigma_x", "--observable", "sigma_z", "--tau", "0.2",
                         "--n", "2"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("second_difference"), std::string::npos);
  EXPECT_NE(r.out.find("central_derived"), std::string::npos);
}

TEST(Cli, WignerChecks) {
  const auto r = invoke({"wigner", "--N", "20", "--beta", "0.3"});
  ASSERT_EQ(r.status, 0) << r.out;
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"check", "value"}));
  EXPECT_EQ(rows.size(), 6u);
  const auto sym = csv_rows(invoke({"wigner", "--N", "5", "--beta", "1", "--check", "symmetry"}).out);
  ASSERT_EQ(sym.size(), 2u);
  EXPECT_EQ(sym[1][0], "symmetry");
}

TEST(Cli, HermiteSamples) {
  const auto r = invoke({"hermite", "--n", "2", "--s-min", "0", "--s-max", "1", "--samples", "3"});
  ASSERT_EQ(r.status, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"s", "psi"}));
  EXPECT_NEAR(std::stod(rows[1][1]), -1.0 / (std::sqrt(2.0) * std::pow(M_PI, 0.25)), 1e-15);
}

TEST(Cli, JsonTableFormat) {
  const auto r = invoke({"spectrum", "--N", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("columns"), (nlohmann::json{"n", "value"}));
  EXPECT_EQ(doc.at("rows")[1][1], 2);
}

TEST(Cli, UnknownSubcommand) {
  const auto r = invoke({"frobnicate"});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("unknown subcommand"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_NE(invoke({}).status, 0);
}

TEST(Cli, InvalidParametersAreNamed) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"spectrum", "--N", "0"}, "--N"},
      {{"spectrum", "--N", "3", "--p", "1.5"}, "--p"},
      {{"spectrum", "--N", "3", "--what", "mass"}, "--what"},
      {{"basis", "--N", "4", "--epsilon", "-1"}, "--epsilon"},
      {{"basis", "--N", "four"}, "--N"},
      {{"basis"}, "--N"},
      {{"wigner", "--N", "4", "--beta", "3.5"}, "--beta"},
      {{"converge", "--N-list", "16,x"}, "--N-list"},
      {{"hermite", "--n", "2", "--s-min", "1", "--s-max", "0"}, "--s-max"},
      {{"evolve", "--hamiltonian", "sigma_x", "--tau", "0"}, "--tau"},
      {{"verify-all", "--seed", "-3"}, "--seed"},
      {{"spectrum", "--N", "2", "--format", "xml"}, "--format"},
  };
  for (const auto& [args, name] : cases) {
    const auto r = invoke(args);
    EXPECT_EQ(r.status, kExitUsage) << args.front();
    EXPECT_NE(r.err.find(name), std::string::npos) << r.err;
  }
}

TEST(Cli, UnwritableOutput) {
  const auto r = invoke({"spectrum", "--N", "2", "--output", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.status, kExitIo);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("verify-all"), std::string::npos);
}

TEST(Cli, ConfigBuiltInCode) {
  RunConfig cfg;
  cfg.subcommand = "spectrum";
  cfg.parameters = {{"N", "2"}};
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), 0);
  EXPECT_EQ(out.str(), "n,value\n0,1\n1,2\n2,1\n");
  cfg.subcommand = "nope";
  EXPECT_NE(run(cfg, out, err), 0);
}

}  // namespace
