#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chernkit_tools/cli.hpp"
#include "chernkit_tools/report.hpp"

namespace chernkit::tools {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "chernkit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Outcome r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, CatalogListAndShow) {
  const Outcome list = run({"catalog", "list"});
  EXPECT_EQ(list.code, kSuccess);
  EXPECT_NE(list.out.find("hopf-2  dim 2"), std::string::npos);
  const Outcome show = run({"catalog", "show", "hopf-2"});
  EXPECT_EQ(show.code, kSuccess);
  EXPECT_NE(show.out.find("domain annulus"), std::string::npos);
  EXPECT_EQ(run({"catalog", "show", "nope"}).code, kInputError);
}

TEST(Cli, EvalIsDeterministicJson) {
  const std::vector<std::string> args{"eval", "-m", "hopf-3", "-n", "3", "-s", "9", "-a", "1", "-b", "-3"};
  const Outcome a = run(args);
  ASSERT_EQ(a.code, kSuccess) << a.err;
  EXPECT_EQ(a.out, run(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"-j", "3"});
  EXPECT_EQ(a.out, run(threaded).out);
  const Json doc = Json::parse(a.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["command"], "eval");
  EXPECT_EQ(doc["dim"], 3);
  ASSERT_EQ(doc["records"].size(), 3u);
  for (const Json& r : doc["records"]) {
    EXPECT_EQ(r["status"], "ok");
    EXPECT_NEAR(r["u"].get<double>(), 6.0, 1e-10);
    EXPECT_NEAR(r["v"].get<double>(), 2.0, 1e-10);
    EXPECT_NEAR(r["mixed"][0]["spread"].get<double>(), 0.0, 1e-8);
    EXPECT_NEAR(r["mixed"][0]["sphere_average"].get<double>(), 0.0, 1e-10);
  }
  EXPECT_NE(a.out, run({"eval", "-m", "hopf-3", "-n", "3", "-s", "10", "-a", "1", "-b", "-3"}).out);
}

TEST(Cli, ExtremizeHopfSurface) {
  const Outcome table = run({"extremize", "-m", "hopf-2", "--at", "1,0", "-a", "0", "-b", "1"});
  ASSERT_EQ(table.code, kSuccess) << table.err;
  EXPECT_NE(table.out.find("spread"), std::string::npos);
  const Outcome json = run({"extremize", "-m", "hopf-2", "--at", "1,0", "--at", "0.3+0.4i,1", "-a", "0", "-b", "1",
                        "--format", "json"});
  ASSERT_EQ(json.code, kSuccess);
  const Json doc = Json::parse(json.out);
  ASSERT_EQ(doc["records"].size(), 2u);
  for (const Json& r : doc["records"]) {
    const Json& e = r["extrema"][0];
    EXPECT_NEAR(e["min"].get<double>(), 0.0, 1e-10);
    EXPECT_NEAR(e["max"].get<double>(), 1.0, 1e-10);
    EXPECT_TRUE(e["converged"].get<bool>());
  }
}

TEST(Cli, ConformalOption) {
  const Outcome r = run({"eval", "-m", "euclidean-2", "--at", "1,0", "--conformal", "-0.5*log(abs2(z))"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_NEAR(doc["records"][0]["u"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(doc["records"][0]["v"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, kInputError);
  EXPECT_EQ(run({"eval"}).code, kInputError);
  EXPECT_EQ(run({"eval", "-m", "no-such-metric"}).code, kInputError);
  EXPECT_EQ(run({"eval", "-m", "hopf-2", "--at", "1"}).code, kInputError);
  EXPECT_EQ(run({"eval", "-m", "hopf-2", "--at", "1,zz"}).code, kInputError);
  EXPECT_EQ(run({"eval", "-m", "hopf-2", "-a", "1"}).code, kInputError);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kInputError);
  EXPECT_EQ(run({"verify", "--tol", "-1"}).code, kInputError);
  const Outcome outside = run({"eval", "-m", "hopf-2", "--at", "0,0"});
  EXPECT_EQ(outside.code, kInputError);
  EXPECT_NE(outside.out.find("\"status\": \"error\""), std::string::npos);
}

TEST(Cli, ParseErrorsCarryPositions) {
  const auto path = write_temp("chernkit_cli_bad.metric", "dim 2\ng[1,1] = 1 +* z1\n");
  const Outcome r = run({"eval", "-m", path.string()});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, MetricFilesLoad) {
  const Outcome r = run({"eval", "-m", std::string(CHERNKIT_DATA_DIR) + "/metrics/fubini-study-2.metric", "-n", "2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["records"][1]["u"].get<double>(), 6.0, 1e-10);
}

TEST(Cli, VerifySuites) {
  const Outcome surface = run({"verify", "--suite", "surface"});
  EXPECT_EQ(surface.code, kSuccess);
  std::istringstream lines(surface.out);
  std::string line;
  int checks = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("ok ", 0) == 0 || line.rfind("FAIL", 0) == 0) {
      ++checks;
      EXPECT_NE(line.find("surface."), std::string::npos) << line;
    }
  }
  EXPECT_GT(checks, 0);
  EXPECT_EQ(run({"verify", "--suite", "surface", "--tol", "1e-30"}).code, kVerificationFailed);
}

TEST(Cli, VerifyAllWritesJson) {
  const auto path = std::filesystem::temp_directory_path() / "chernkit_cli_verify.json";
  const Outcome r = run({"verify", "--out", path.string()});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  std::ifstream in(path);
  const Json doc = Json::parse(in);
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_GE(doc["checks"].size(), 60u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace chernkit::tools
