#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded unless `merge` is set.
Run cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string("\"") + MARKEDBASES_CLI + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return "\"" + mbtest::fixture(name).string() + "\""; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "markedbases_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CheckBasisAcceptsTheTwoVariableExample) {
  auto r = cli("check-basis " + fx("kx1x2.mset") + " --m 3");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, CheckBasisRejectsWithWitness) {
  auto r = cli("check-basis " + fx("x3x2sq.mset") + " --m 3");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("x3^2*x1 ->"), std::string::npos) << r.out;
}

TEST(Cli, ValidateReportsTheMove) {
  auto path = scratch("bad.ideal");
  std::ofstream(path) << R"({"ring": "R", "n": 2, "basis": ["x1*x2"]})";
  auto r = cli("validate \"" + path.string() + "\"");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("x2^2"), std::string::npos) << r.out;
  EXPECT_EQ(cli("validate " + fx("j541.ideal")).code, 0);
}

TEST(Cli, BadInputExitsWithTwo) {
  auto path = scratch("garbage.ideal");
  std::ofstream(path) << "{ not json";
  auto r = cli("reg \"" + path.string() + "\"", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("error"), std::string::npos) << r.out;
  EXPECT_EQ(cli("reg /nonexistent/file.ideal").code, 2);
  EXPECT_EQ(cli("no-such-command").code, 2);
  EXPECT_EQ(cli("reduce " + fx("kx1x2.mset") + " \"x1 +\"").code, 2);
}

TEST(Cli, ReduceAndNormalForm) {
  auto r = cli("reduce " + fx("kx1x2.mset") + " \"x2^3\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("9*x1^3 - 21*x1^2 + 7*x1 + 10"), std::string::npos) << r.out;
  auto n = cli("nf " + fx("kx1x2.mset") + " \"x2^3\"");
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("9*x1^3 - 21*x1^2 + 7*x1 + 10"), std::string::npos) << n.out;
}

TEST(Cli, IdealInvariants) {
  EXPECT_NE(cli("reg " + fx("jlex16.ideal")).out.find("16"), std::string::npos);
  EXPECT_NE(cli("sat " + fx("gin5.ideal")).out.find("4"), std::string::npos);
  auto h = cli("hilbert --affine " + fx("x3x2sq.ideal"));
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("2*t + 1"), std::string::npos) << h.out;
  EXPECT_EQ(cli("segment " + fx("j541.ideal") + " --m 3").code, 0);
}

TEST(Cli, JsonReportIsIndependentOfWorkers) {
  auto a = cli("--format json --workers 1 check-basis " + fx("x3x2sq.mset") + " --m 3");
  auto b = cli("--format json --workers 4 check-basis " + fx("x3x2sq.mset") + " --m 3");
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  auto j = mb::Json::parse(a.out);
  EXPECT_EQ(j["command"], "check-basis");
  EXPECT_EQ(j["exit"], 1);
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST(Cli, SchemePointTangentPipeline) {
  auto scheme = scratch("k.scheme");
  auto point = scratch("k.point");
  auto ideal = scratch("k.ideal");
  auto mset = scratch("k.mset");
  std::ofstream(ideal) << R"({"ring": "R", "n": 2, "basis": ["x2", "x1^2"]})";
  std::ofstream(mset) << R"({"ideal": "k.ideal", "m": 1, "polys": [)"
                      << R"({"head": "x2", "poly": "x2 - 3*x1 - 1"}, {"head": "x1^2", "poly": "x1^2 + x1 - 2"}]})";
  ASSERT_EQ(cli("scheme \"" + ideal.string() + "\" --m 1 --out \"" + scheme.string() + "\"").code, 0);
  ASSERT_EQ(cli("point \"" + scheme.string() + "\" \"" + mset.string() + "\" --out \"" + point.string() + "\"").code, 0);
  auto t = cli("tangent \"" + scheme.string() + "\" \"" + point.string() + "\"");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("4"), std::string::npos) << t.out;
}

TEST(Cli, FixtureList) {
  auto r = cli("fixtures list");
  EXPECT_EQ(r.code, 0);
  for (auto name : {"kx1x2_completion", "x3x2sq_negative", "scheme_j541", "tangent_g0", "hilbert_p7"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, FixtureRun) {
  EXPECT_EQ(cli("fixtures run kx1x2_completion").code, 0);
  EXPECT_EQ(cli("fixtures run x3x2sq_border_subset").code, 1);
  EXPECT_EQ(cli("fixtures run no_such_check").code, 2);
}
