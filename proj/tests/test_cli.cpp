#include "hahnosc/app/commands.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

using namespace hahnosc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = app::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, SpectrumExamples) {
  auto r = cli({"spectrum", "--j", "1", "--alpha", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"k", "q_k"}));
  EXPECT_NEAR(std::stod(rows[1][1]), -std::sqrt(2.0), 1e-15);
  EXPECT_EQ(rows[2][1], "0");
  EXPECT_NEAR(std::stod(rows[3][1]), std::sqrt(2.0), 1e-15);

  rows = csv_rows(cli({"spectrum", "--j", "3", "--alpha", "-0.5"}).out);
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(std::stod(rows[k + 4][1]), k);

  r = cli({"spectrum", "--j", "0", "--alpha", "1"});
  rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"0", "0"}));
}

TEST(Cli, SpectrumCompare) {
  const auto r = cli({"spectrum", "--j", "2", "--alpha", "0", "--compare"});
  ASSERT_EQ(r.code, 0);
  std::map<std::string, std::vector<double>> panels;
  for (const auto& row : csv_rows(r.out)) {
    if (row[0] == "panel") continue;
    panels[row[0]].push_back(std::stod(row[2]));
  }
  EXPECT_EQ(panels["su2"], (std::vector<double>{-2, -1, 0, 1, 2}));
  EXPECT_EQ(panels["u2alpha"], (std::vector<double>{-3, -2, -1, 1, 2, 3}));
  EXPECT_EQ(panels["su2alpha"].size(), 5u);
}

TEST(Cli, JsonSchema) {
  const auto r = cli({"spectrum", "--j", "2", "--alpha", "0.5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"j", "alpha", "route", "tolerance"}) EXPECT_TRUE(doc["meta"].contains(key)) << key;
  EXPECT_EQ(doc["meta"]["j"], 2);
  EXPECT_EQ(doc["data"].size(), 5u);
  EXPECT_EQ(doc["data"][0]["k"], -2);
}

TEST(Cli, ConfigErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"spectrum", "--j", "-2"},
           {"spectrum", "--alpha", "-1"},
           {"spectrum", "--alpha", "abc"},
           {"spectrum", "--format", "xml"},
           {"fourier", "--route", "sideways"},
           {"wavefn", "--j", "3", "--n", "9"},
           {"verify", "--mode", "exact", "--alpha", "0.25"},
           {"limit", "--j-list", "200,50"},
           {"identity", "--identity", "nonsense"},
           {"spectrum", "--tol", "-1"},
           {"spectrum", "--mode", "exact"},
           {},
       }) {
    const auto r = cli(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]) << " " << r.err;
  }
  const auto r = cli({"spectrum", "--j", "-2"});
  EXPECT_NE(r.err.find("j"), std::string::npos);
  EXPECT_NE(cli({"wavefn", "--j", "3", "--n", "9"}).err.find("n:"), std::string::npos);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("HAHNOSC_TOL", "garbage", 1);
  EXPECT_EQ(cli({"fourier", "--j", "2"}).code, 2);
  ::setenv("HAHNOSC_TOL", "1e-30", 1);
  EXPECT_EQ(cli({"fourier", "--j", "6", "--alpha", "0.3", "--route", "all"}).code, 3);
  EXPECT_EQ(cli({"fourier", "--j", "6", "--alpha", "0.3", "--route", "all", "--tol", "1e-9"}).code, 0);
  ::unsetenv("HAHNOSC_TOL");
  const auto doc = nlohmann::json::parse(cli({"fourier", "--j", "6", "--format", "json"}).out);
  EXPECT_EQ(doc["meta"]["tolerance"], 1e-10);
}

TEST(Cli, FourierExamples) {
  auto rows = csv_rows(cli({"fourier", "--j", "0", "--alpha", "2"}).out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"row", "col", "re", "im"}));
  EXPECT_EQ(std::stod(rows[1][3]), -1.0);
  EXPECT_NEAR(std::stod(rows[1][2]), 0.0, 1e-15);

  const auto all = cli({"fourier", "--j", "4", "--alpha", "0.5", "--route", "all", "--format", "json"});
  ASSERT_EQ(all.code, 0);
  EXPECT_LE(nlohmann::json::parse(all.out)["meta"]["max_deviation"].get<double>(), 1e-10);

  std::map<std::pair<int, int>, std::string> entries;
  for (const auto& row : csv_rows(cli({"fourier", "--j", "2", "--route", "direct"}).out))
    if (row[0] != "row") entries[{std::stoi(row[0]), std::stoi(row[1])}] = row[2] + "," + row[3];
  for (const auto& [key, v] : entries) EXPECT_EQ(v, (entries.at({key.second, key.first})));
}

TEST(Cli, WavefnRowsAreNormalized) {
  const auto r = cli({"wavefn", "--j", "5", "--alpha", "1.5", "--kind", "momentum"});
  ASSERT_EQ(r.code, 0);
  std::map<int, double> norm;
  for (const auto& row : csv_rows(r.out))
    if (row[0] != "alpha") norm[std::stoi(row[1])] += std::pow(std::stod(row[4]), 2) + std::pow(std::stod(row[5]), 2);
  EXPECT_EQ(norm.size(), 11u);
  for (const auto& [n, v] : norm) EXPECT_NEAR(v, 1.0, 1e-10) << n;
}

TEST(Cli, WavefnDefaultIsFig2Preset) {
  const auto r = cli({"wavefn", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["meta"]["preset"], "fig2");
  EXPECT_EQ(doc["data"].size(), 3u * 4u * 61u);
  EXPECT_LE(doc["meta"]["max_norm_deviation"].get<double>(), 1e-10);
}

TEST(Cli, KrawtchoukGroundState) {
  // at a = -1/2 the ground state is sqrt(C(2j, j+k)) / 2^j
  for (const auto& row : csv_rows(cli({"wavefn", "--j", "30", "--alpha", "-0.5", "--n", "0"}).out)) {
    if (row[0] == "alpha") continue;
    const int k = std::stoi(row[2]);
    const double expect = std::exp(0.5 * (std::lgamma(61.0) - std::lgamma(31.0 + k) - std::lgamma(31.0 - k)) - 30 * std::log(2.0));
    EXPECT_NEAR(std::stod(row[4]), expect, 1e-13) << k;
  }
}

TEST(Cli, TopLevelAlternates) {
  double prev = 0;
  for (const auto& row : csv_rows(cli({"wavefn", "--j", "30", "--alpha", "2", "--n", "60"}).out)) {
    if (row[0] == "alpha") continue;
    const double v = std::stod(row[4]);
    if (prev != 0) {
      EXPECT_LT(v * prev, 0.0) << row[2];
    }
    prev = v;
  }
}

TEST(Cli, VerifyDefaultGridPasses) {
  const auto r = cli({"verify", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["meta"]["failed"], 0);
  EXPECT_GT(doc["meta"]["checks"].get<int>(), 13 * 4 * 10);
}

TEST(Cli, VerifyInjectedFault) {
  const auto r = cli({"verify", "--j", "3", "--alpha", "0.4", "--inject-fault"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAIL U_orthogonal"), std::string::npos);
}

TEST(Cli, VerifyExact) {
  const auto r = cli({"verify", "--mode", "exact", "--alpha", "1/3", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["meta"]["alpha"], "1/3");
  EXPECT_EQ(doc["data"].size(), 18u);
  for (const auto& rec : doc["data"]) EXPECT_EQ(rec["residual"], 0.0);
}

TEST(Cli, LimitSweep) {
  const auto r = cli({"limit", "--alpha", "2", "--n", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["meta"]["wave_monotone_decreasing"].get<bool>());
  EXPECT_EQ(doc["data"].size(), 3u);
  const auto odd = nlohmann::json::parse(cli({"limit", "--j-list", "51,101", "--format", "json"}).out);
  EXPECT_TRUE(odd["data"][0]["kernel_error"].is_null());
}

TEST(Cli, IdentitySuite) {
  auto r = cli({"identity", "--seed", "42", "--count", "500"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][1], "500") << rows[i][0];
    EXPECT_EQ(rows[i][3], "0") << rows[i][0];
  }
  r = cli({"identity", "--count", "20", "--perturb", "--identity", "bilinear_sum_transformed"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("rhs_scale=1001/1000"), std::string::npos);
  EXPECT_NE(r.err.find("counterexample bilinear_sum_transformed"), std::string::npos);
}

TEST(Cli, DeterministicFiles) {
  const std::string a = ::testing::TempDir() + "hahnosc_a.json", b = ::testing::TempDir() + "hahnosc_b.json";
  for (const auto& path : {a, b})
    ASSERT_EQ(cli({"identity", "--seed", "7", "--count", "40", "--format", "json", "--out", path}).code, 0);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
  EXPECT_EQ(cli({"spectrum", "--out", "/nonexistent-dir/x.csv"}).code, 2);
}

TEST(Cli, CsvQuoting) {
  app::Table t;
  t.columns = {"a", "b"};
  t.add({std::string("x,y"), std::string("say \"hi\"")});
  std::ostringstream os;
  app::write_csv(t, os);
  EXPECT_EQ(os.str(), "a,b\r\n\"x,y\",\"say \"\"hi\"\"\"\r\n");
}

TEST(Cli, Help) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fourier"), std::string::npos);
}
