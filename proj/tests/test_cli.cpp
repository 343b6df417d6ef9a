#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grmlab_cli/commands.hpp"

using namespace grmlab::cli;

namespace {

std::string data(const std::string& name) { return std::string(GRMLAB_DATA_DIR) + "/" + name; }

RunConfig config(std::string command, std::string algebra, std::string module = "", std::string weights = "") {
  RunConfig c;
  c.command = std::move(command);
  c.algebra = std::move(algebra);
  c.module = std::move(module);
  c.weights = std::move(weights);
  return c;
}

json strings(std::initializer_list<const char*> xs) {
  json j = json::array();
  for (const auto* x : xs) j.push_back(x);
  return j;
}

}  // namespace

TEST(Run, MeasureExamples) {
  auto r = run(config("measure", data("lambda1.json"), "P:1", "1,1"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["measure"], strings({"1/1", "2/1", "4/1"}));
  EXPECT_EQ(r.report["witness"].size(), 3u);

  r = run(config("measure", "lambda1", "S:1", "3,1"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["measure"], strings({"3/1"}));
}

TEST(Run, CertifyGeneratorCogenerator) {
  auto r = run(config("certify", data("lambda2.json"), "Lambda+DLambda", "1,1"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["ell"], 5);
  EXPECT_EQ(r.report["labels"].size(), 7u);
  EXPECT_EQ(r.report["verdict"], "left-strongly-quasihereditary");
  for (const auto& l : r.report["labels"]) {
    EXPECT_TRUE(l["checks"]["a"].get<bool>());
    EXPECT_TRUE(l["checks"]["b"].get<bool>());
    EXPECT_TRUE(l["checks"]["strong"].get<bool>());
  }
}

TEST(Run, ChainAndGldim) {
  auto r = run(config("chain", "lambda1", "P:1", "2,1"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["ell"], 4);
  r = run(config("gldim", "lambda1", "P:1", "1,2"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_LE(r.report["gldim"].get<int>(), 3);
}

TEST(Run, Decompose) {
  auto r = run(config("decompose", "lambda1", "P:1+P:1+S:2"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["count"], 3);
  EXPECT_EQ(r.report["summands"].size(), 2u);
}

TEST(Run, KroneckerControlIsNotRejective) {
  auto c = config("verify-chain", data("kronecker.json"));
  c.chain_file = data("kronecker_control.json");
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(r.report["prerejective"].get<bool>());
  EXPECT_FALSE(r.report["rejective"].get<bool>());
}

TEST(Run, VerifyGrChainPasses) {
  auto c = config("verify-chain", "lambda1", "P:1", "1,1");
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.report["rejective"].get<bool>());
  c.kind = "iyama";
  r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.report["dualized"].get<bool>());
}

TEST(Run, InputErrorsExitTwo) {
  for (const auto& c : {config("measure", "/nonexistent.json", "P:1"), config("measure", "lambda1", "Q:1"),
                        config("measure", "lambda1", "P:7"), config("measure", "lambda1", "P:1", "1"),
                        config("measure", "lambda1", "P:1", "1,-1"), config("measure", "lambda1", ""),
                        config("bogus", "lambda1", "P:1")}) {
    auto r = run(c);
    EXPECT_EQ(r.exit_code, 2) << c.algebra << " " << c.module << " " << c.weights;
    EXPECT_TRUE(r.report.contains("error"));
  }
  auto c = config("measure", "lambda1", R"({"dims": {"1": 1, "2": 1}, "arrows": {"β": [[1, 1]]}})");
  EXPECT_EQ(run(c).exit_code, 2);
}

TEST(Run, CapExceededExitsTwo) {
  auto c = config("measure", "lambda2", "Lambda+DLambda", "1,1");
  c.caps.max_submodules = 3;
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["type"], "cap");
}

TEST(Run, ModuleJson) {
  auto c = config("measure", "lambda1", R"({"dims": {"1": 1, "2": 1}, "arrows": {"β": [[1]]}})", "1,2");
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["measure"], strings({"2/1", "3/1"}));
}

TEST(Report, EmbedsConfigAndReparses) {
  auto c = config("certify", "lambda1", "P:1", "1,1");
  auto r = run(c);
  auto back = json::parse(r.text);
  EXPECT_EQ(back, r.report);
  EXPECT_EQ(back["config"], config_to_json(c));
}

TEST(Report, RerunIsByteIdentical) {
  auto c = config("certify", "lambda2", "Lambda+DLambda", "1,2");
  EXPECT_EQ(run(c).text, run(c).text);
  c.command = "measure";
  EXPECT_EQ(run(c).text, run(c).text);
}

TEST(Report, TsvCarriesTheJsonValues) {
  auto c = config("certify", "lambda1", "P:1", "1,2");
  const auto j = run(c).report;
  c.format = "tsv";
  const auto tsv = run(c).text;
  std::istringstream in(tsv);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos);
    std::string path = line.substr(0, tab), value = line.substr(tab + 1);
    std::string pointer;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] == '.') {
        pointer += '/';
      } else if (path[i] == '[') {
        pointer += '/';
      } else if (path[i] != ']') {
        pointer += path[i];
      }
    }
    // the config format differs between the two runs
    if (pointer == "config/format") continue;
    const auto& v = j.at(json::json_pointer("/" + pointer));
    EXPECT_EQ(v.is_string() ? v.get<std::string>() : v.dump(), value) << path;
    ++n;
  }
  EXPECT_GT(n, 20u);
}

TEST(Report, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "grmlab_cli_report.json";
  auto c = config("measure", "lambda1", "P:1", "1,1");
  c.output = path.string();
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), r.text);
  std::filesystem::remove(path);
}

TEST(Environment, SeedOverride) {
  RunConfig c;
  ::setenv("GRMLAB_SEED", "7", 1);
  apply_environment(c);
  EXPECT_EQ(c.caps.seed, 7u);
  ::setenv("GRMLAB_SEED", "x", 1);
  EXPECT_ANY_THROW(apply_environment(c));
  ::unsetenv("GRMLAB_SEED");
}
