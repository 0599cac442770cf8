#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "sbi/expint.hpp"
#include "sbi_cli/app.hpp"
#include "sbi_cli/errata.hpp"
#include "sbi_cli/format.hpp"
#include "sbi_cli/grid.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sbi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sbi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliEval, DefiniteSineCube) {
  const auto r = run_cli({"eval", "--n", "0", "--m", "0", "--h", "0", "--k", "0", "--l", "0", "--alpha", "1",
                          "--beta", "1", "--mu", "1", "--definite"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "spec,value,method,err_estimate,status");
  EXPECT_NE(rows[1].find(",1.178097245096e+00,closed_form,"), std::string::npos) << rows[1];
  EXPECT_EQ(rows[1].substr(rows[1].size() - 3), ",ok");
}

TEST(CliEval, DifferenceMatchesCompare) {
  auto value = [](const std::string& x) {
    const auto r = run_cli({"eval", "--n", "3", "--m", "1", "--x", x, "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out)["value"].get<double>();
  };
  const double diff = value("2") - value("1");
  const auto c = run_cli({"compare", "--n", "3", "--m", "1", "--a", "1", "--b", "2", "--format", "json"});
  ASSERT_EQ(c.code, 0) << c.err;
  const json rows = json::parse(c.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["status"], "pass");
  EXPECT_NEAR(rows[0]["value"].get<double>(), diff, 1e-11);
  EXPECT_NEAR(rows[0]["oracle_value"].get<double>(), diff, 1e-8);
}

TEST(CliEval, JsonSchema) {
  const auto r = run_cli({"eval", "--n", "2", "--m", "1", "--definite", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_TRUE(j.is_object());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"spec", "value", "method", "err_estimate", "status"}));
  EXPECT_EQ(j["spec"]["n"].get<double>(), 2.0);
  EXPECT_EQ(j["method"], "closed_form");
  EXPECT_NEAR(j["value"].get<double>(), 0.276787179448522625754, 1e-11);
}

TEST(CliEval, ImaginaryDampingPrintsComplex) {
  const auto csv = run_cli({"eval", "--m", "i", "--n", "2", "--x", "1.3"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_NE(lines(csv.out)[1].find("m=i"), std::string::npos);
  EXPECT_NE(lines(csv.out)[1].find("i,closed_form"), std::string::npos);
  const auto js = run_cli({"eval", "--m", "i", "--n", "2", "--x", "1.3", "--format", "json"});
  const json j = json::parse(js.out);
  EXPECT_TRUE(j["value"].is_array());
  EXPECT_EQ(j["spec"]["m"], "i");
}

TEST(CliEval, ZeroFrequencyIsPreconditionError) {
  const auto r = run_cli({"eval", "--alpha", "0", "--x", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nonzero"), std::string::npos) << r.err;
}

TEST(CliEval, DivergenceNamesPrecondition) {
  const auto r = run_cli({"eval", "--n", "2", "--m", "0", "--definite"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n < 2"), std::string::npos) << r.err;
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(run_cli({"eval", "--bogus"}).code, 1);
  EXPECT_EQ(run_cli({"eval", "--n", "abc", "--x", "1"}).code, 1);
  EXPECT_EQ(run_cli({"eval", "--n", "0,1", "--x", "1"}).code, 1);
  EXPECT_EQ(run_cli({"eval"}).code, 1);
  EXPECT_EQ(run_cli({"eval", "--x", "1", "--definite"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"eval", "--x", "1", "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({"sweep", "--n", "0:1:0", "--definite"}).code, 1);
}

TEST(CliCompare, ThreePassingRows) {
  const auto r = run_cli({"compare", "--n", "0,1,2", "--m", "1", "--definite"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "spec,value,method,err_estimate,status,oracle_value,oracle_err,abs_diff");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NE(rows[i].find(",pass,"), std::string::npos) << rows[i];
}

TEST(CliCompare, DivergentRowStatus) {
  const auto r = run_cli({"compare", "--n", "1,2", "--m", "0", "--definite", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["status"], "pass");
  EXPECT_EQ(rows[1]["status"], "divergent-precondition");
  EXPECT_TRUE(rows[1]["value"].is_null());
}

TEST(CliCompare, EmptyGridIsHeaderOnly) {
  const auto r = run_cli({"compare", "--n", "", "--definite"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "spec,value,method,err_estimate,status,oracle_value,oracle_err,abs_diff\n");
  const auto j = run_cli({"compare", "--n", "", "--definite", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(json::parse(j.out), json::array());
}

TEST(CliCompare, FailingToleranceGivesNonzeroExit) {
  const auto r = run_cli({"compare", "--n", "1", "--m", "1", "--definite", "--cmp-tol", "1e-30",
                          "--abs-tol", "1e-4", "--rel-tol", "1e-4"});
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find(",fail,"), std::string::npos);
}

TEST(CliCompare, TailPolicyOption) {
  const auto r = run_cli({"compare", "--n", "0", "--m", "0", "--definite", "--tail-policy", "period"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliSweep, RangeGridInOrder) {
  const auto r = run_cli({"sweep", "--n", "0:2:3", "--m", "0.5,1", "--x", "1.5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 6u);
  std::vector<std::pair<double, double>> seen;
  for (const auto& row : rows) seen.emplace_back(row["spec"]["n"].get<double>(), row["spec"]["m"].get<double>());
  for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_LT(seen[i - 1], seen[i]);
}

TEST(CliDeterminism, ByteIdenticalOutput) {
  const std::vector<std::string> args = {"compare", "--n", "0,0.5,1", "--m", "0.5,2", "--h", "0,1", "--definite"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliEiTable, GridAndValues) {
  const auto r = run_cli({"ei-table", "--x-min", "-4", "--x-max", "4", "--count", "161"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 161u);
  EXPECT_EQ(rows[0], "x,ei");
  double previous = -INFINITY;
  bool saw_one = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].find(',');
    const double x = std::stod(rows[i].substr(0, comma));
    const double v = std::stod(rows[i].substr(comma + 1));
    EXPECT_GT(x, previous);
    previous = x;
    if (x < 0.0) EXPECT_LT(v, 0.0);
    EXPECT_EQ(rows[i].substr(comma + 1), sbi::cli::format_double(sbi::expint::ei(x)));
    if (std::abs(x - 1.0) < 1e-12) {
      saw_one = true;
      EXPECT_NEAR(v, 1.8951178, 1e-7);
    }
  }
  EXPECT_TRUE(saw_one);
}

TEST(CliEiTable, MissingArgumentsAndEmptyRange) {
  EXPECT_EQ(run_cli({"ei-table", "--x-min", "-4", "--x-max", "4"}).code, 1);
  EXPECT_EQ(run_cli({"ei-table", "--x-min", "4", "--x-max", "-4", "--count", "10"}).code, 1);
}

TEST(CliErrata, EntriesDemonstrateDiscrepancies) {
  const auto r = run_cli({"errata", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json rows = json::parse(r.out);
  EXPECT_GE(rows.size(), 8u);
  bool trig = false, n0 = false;
  for (const auto& row : rows) {
    EXPECT_TRUE(row["corrected_matches"].get<bool>()) << row["id"];
    EXPECT_FALSE(row["printed_matches"].get<bool>()) << row["id"];
    trig = trig || row["id"] == "trig-identity";
    n0 = n0 || row["id"] == "n0-sign";
  }
  EXPECT_TRUE(trig);
  EXPECT_TRUE(n0);
}

TEST(CliErrata, TrigIdentityResidual) {
  for (const auto& e : sbi::cli::errata_entries()) {
    if (e.id != "trig-identity") continue;
    EXPECT_NEAR(std::abs(e.printed - e.oracle), 2.0, 1e-12);
    EXPECT_NEAR(std::abs(e.corrected - e.oracle), 0.0, 1e-12);
  }
}

TEST(CliOutput, RelativePathUsesEnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "sbi_cli_test_out";
  std::filesystem::remove_all(dir);
  ::setenv("SBI_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = run_cli({"eval", "--n", "0", "--definite", "--output", "sub/eval.csv"});
  ::unsetenv("SBI_OUTPUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "sub" / "eval.csv");
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_NE(contents.str().find("1.178097245096e+00"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(CliConfig, KeyValueFile) {
  const auto path = std::filesystem::temp_directory_path() / "sbi_cli_test.conf";
  {
    std::ofstream f(path);
    f << "n=2\nm=1\nformat=json\n";
  }
  const auto r = run_cli({"--config", path.string(), "eval", "--definite"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["value"].get<double>(), 0.276787179448522625754, 1e-11);
}

TEST(Format, FixedScientific) {
  EXPECT_EQ(sbi::cli::format_double(1.0), "1.000000000000e+00");
  EXPECT_EQ(sbi::cli::format_double(-2.5e-7), "-2.500000000000e-07");
  EXPECT_EQ(sbi::cli::format_complex({1.0, -2.0}), "1.000000000000e+00-2.000000000000e+00i");
  EXPECT_EQ(sbi::cli::csv_escape("a,b"), "\"a,b\"");
}

TEST(Grid, ParsesListsAndRanges) {
  EXPECT_EQ(sbi::cli::parse_values("1,2,5"), (std::vector<double>{1, 2, 5}));
  EXPECT_EQ(sbi::cli::parse_values("0:1:3"), (std::vector<double>{0, 0.5, 1}));
  EXPECT_TRUE(sbi::cli::parse_values("").empty());
  EXPECT_THROW(sbi::cli::parse_values("2:1:3"), std::invalid_argument);
  EXPECT_THROW(sbi::cli::parse_values("0:1:0"), std::invalid_argument);
}

}  // namespace
