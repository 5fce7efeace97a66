#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" LEIBNIZ_CLI "' " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string data(const std::string& name) { return std::string(LEIBNIZ_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, CheckNullFiliform) {
  const CliRun r = run("check NF@4");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "leibniz: true"));
  EXPECT_TRUE(has(r.out, "lie: false"));
  EXPECT_TRUE(has(r.out, "nilpotent: true"));
  EXPECT_TRUE(has(r.out, "lcs_dims: [4,3,2,1,0]"));
  EXPECT_TRUE(has(r.out, "status: OK"));
}

TEST(Cli, CheckAbelianAndSolvable) {
  const CliRun a = run("check abelian@3");
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(has(a.out, "der_dim: 9"));
  EXPECT_TRUE(has(a.out, "orbit_dim: 0"));
  EXPECT_TRUE(has(a.out, "lcs_dims: [3,0]"));
  const CliRun b = run("check RNF@4");
  EXPECT_TRUE(has(b.out, "solvable: true"));
  EXPECT_TRUE(has(b.out, "nilpotent: false"));
}

TEST(Cli, CheckReportsNonLeibnizInput) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / "leibniz_cli_bad.json";
  std::ofstream(p) << R"({"dim": 3, "field": "Q", "table": [{"i": 2, "j": 1, "k": 3, "c": "1"},)"
                   << R"({"i": 1, "j": 1, "k": 2, "c": "1"}, {"i": 1, "j": 2, "k": 1, "c": "1"}]})";
  const CliRun r = run("check " + p.string());
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(has(r.out, "leibniz: false"));
  EXPECT_TRUE(has(r.out, "first_defect:"));
  std::filesystem::remove(p);
}

TEST(Cli, Degenerate) {
  for (const char* fam : {"paper:r3-n3", "named:r3-n3", "diag:1/t,1/t,t^-2"}) {
    const CliRun r = run(std::string("degenerate --source r3 --family ") + fam + " --target n3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "verdict: VERIFIED")) << fam;
  }
  const CliRun id = run("degenerate --source n3 --family identity --target n3");
  EXPECT_EQ(id.code, 0);
  const CliRun bad = run("degenerate --source n2+a1 --family diag:1/t,1/t,1/t --target p3plus");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "LIMIT_MISMATCH(1,2,2)"));
  EXPECT_TRUE(has(bad.out, "[e1,e1] = t*e2"));
}

TEST(Cli, DegenerateFromFiles) {
  const CliRun r = run("degenerate --source r2 --family " + data("r2_family.json") + " --target " + data("n2.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "[e2,e1] = t*e2"));
  EXPECT_TRUE(has(r.out, "VERIFIED"));
}

TEST(Cli, SplitFamily) {
  const CliRun r = run("degenerate --source R3_4 --family split:1 --target lambda6+a1");
  EXPECT_EQ(r.code, 0) << r.out;
  const CliRun bad = run("degenerate --source n3 --family split:1 --target n3");
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Obstruct) {
  const CliRun r = run("obstruct --source n2+a1 --target n3plus");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "verdict: OBSTRUCTED"));
  EXPECT_TRUE(has(r.out, "der_dim"));
  const CliRun same = run("obstruct --source r5 --target r5");
  EXPECT_EQ(same.code, 0);
  EXPECT_TRUE(has(same.out, "NO_OBSTRUCTION"));
  EXPECT_FALSE(has(same.out, "OBSTRUCTED\n"));
}

TEST(Cli, StructuredOutput) {
  const CliRun r = run("--format structured obstruct --source n2+a2 --target p4plus");
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "obstruct");
  EXPECT_EQ(doc["status"], "FAIL");
  EXPECT_EQ(doc["inputs"]["source"]["dim"], 4);
  bool found = false;
  for (const auto& c : doc["results"]["checks"])
    if (c["name"] == "lcs[2]") {
      EXPECT_EQ(c["status"], "OBSTRUCTED");
      EXPECT_EQ(c["source"], "1");
      EXPECT_EQ(c["target"], "3");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, CatalogCommands) {
  const CliRun list = run("catalog list");
  EXPECT_EQ(list.code, 0);
  EXPECT_TRUE(has(list.out, "lambda4quarter"));
  const CliRun show = run("catalog show RNF@n=3");
  EXPECT_EQ(show.code, 0);
  EXPECT_TRUE(has(show.out, "[e3,e4] = -3*e3"));
  const CliRun exp = run("catalog export lambda4@alpha=-2");
  EXPECT_EQ(exp.code, 0);
  const auto doc = nlohmann::json::parse(exp.out);
  EXPECT_EQ(doc["dim"], 3);
  EXPECT_EQ(doc["field"], "Q");
}

TEST(Cli, ExportThenCheckFile) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / "leibniz_cli_r4.json";
  std::ofstream(p) << run("catalog export r4").out;
  const CliRun from_file = run("--format structured check " + p.string());
  const CliRun from_ref = run("--format structured check r4");
  auto a = nlohmann::json::parse(from_file.out), b = nlohmann::json::parse(from_ref.out);
  EXPECT_EQ(a["results"], b["results"]);
  std::filesystem::remove(p);
}

TEST(Cli, Der) {
  const CliRun r = run("der lambda6");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "der_dim: 3"));
  EXPECT_TRUE(has(r.out, "orbit_dim: 6"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("check nosuchalgebra").code, 2);
  EXPECT_EQ(run("check lambda4@alpha=0").code, 2);
  EXPECT_EQ(run("check NF@n=x").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("degenerate --source n3 --family diag:1,1 --target n3").code, 2);
  EXPECT_EQ(run("obstruct --source n3 --target n4").code, 2);
  const CliRun bad = run("check " + data("malformed.json"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(has(bad.out, "line 5, column"));
}

TEST(Cli, VerifySuiteIsDeterministic) {
  const CliRun a = run("verify-paper");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_TRUE(has(a.out, "status: OK"));
  const CliRun b = run("verify-paper", "LEIBNIZ_THREADS=3");
  EXPECT_EQ(a.out, b.out);
  const CliRun s1 = run("--format structured verify-paper");
  const CliRun s2 = run("--format structured verify-paper");
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(nlohmann::json::parse(s1.out)["results"]["failed"], 0);
}
