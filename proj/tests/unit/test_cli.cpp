#include "json.hpp"
#include <sstream>

#include "test_support.hpp"
#include "tmahler/cli.hpp"

namespace tmahler::cli {
namespace {

using nlohmann::json;

struct Run {
  int status;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, MahlerSmyth) {
  const auto r = run_cli({"mahler", "--poly", "x+y+1", "--radii", "1,1", "--tol", "1e-6"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto d = r.doc();
  EXPECT_NEAR(d["value"].get<double>(), 0.323066, 1e-6);
  EXPECT_LE(d["abs_error"].get<double>(), 1e-6);
}

TEST(Cli, MahlerUnivariate) {
  const auto r = run_cli({"mahler", "--poly", "x - 3", "--radii", "1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NEAR(r.doc()["value"].get<double>(), std::log(3.0), 1e-12);
}

TEST(Cli, PathClassify) {
  const auto r = run_cli({"path", "classify", "--family", "S", "--a", "2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto d = r.doc();
  EXPECT_EQ(d["minus"], "AlwaysOutside");
  EXPECT_EQ(d["plus"], "Indeterminate");
}

TEST(Cli, PathSweepCsv) {
  const auto r = run_cli({"path", "classify", "--family", "R", "--sweep", "0.5:1.0:0.25", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  std::getline(lines, line);
  EXPECT_NE(line.find("minus"), std::string::npos);
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3);
}

TEST(Cli, PathPeriodAndWinding) {
  auto r = run_cli({"path", "period", "--family", "R", "--a", "1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NEAR(r.doc()["im"].get<double>(), test::kPeriodIm, 1e-8);
  r = run_cli({"path", "winding", "--family", "S", "--a", "1.2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NEAR(r.doc()["value"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, LFunction) {
  auto r = run_cli({"lfunction", "--curve", "e20", "--what", "all"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NEAR(r.doc()["lprime0"].get<double>(), test::kLprimeE20, 1e-12);
  r = run_cli({"lfunction", "--curve", "custom", "--coeffs", "0,0,1,-1,0", "--conductor", "37",
               "--bad-ap", "37:-1", "--what", "all"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.doc()["root_number"], -1);
  EXPECT_TRUE(r.doc()["lprime0"].is_null());
}

TEST(Cli, Dilogs) {
  auto r = run_cli({"dilog", "--z", "0,1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NEAR(r.doc()["bloch_wigner"].get<double>(), 0.915965594177219, 1e-12);
  r = run_cli({"elliptic-dilog", "--divisor", "(P) + (2P)"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NEAR(std::abs(r.doc()["value"].get<double>()), 1.25527719101371, 1e-12);
}

TEST(Cli, VerifyExitMatchesReports) {
  for (const char* suite : {"theorem1", "theorem1-s", "prop4", "windings", "smyth"}) {
    const auto r = run_cli({"verify", "--suite", suite});
    const auto d = r.doc();
    bool all = true;
    for (const auto& c : d["cases"]) {
      const bool pass = c["pass"].get<bool>();
      all = all && pass;
      if (c["abs_diff"].is_number()) {
        EXPECT_EQ(pass, c["abs_diff"].get<double>() <= c["tolerance"].get<double>()) << c.dump();
      }
    }
    EXPECT_EQ(r.status, all ? kExitOk : kExitFailure) << suite;
    EXPECT_EQ(d["failed"].get<int>() == 0, all);
  }
}

TEST(Cli, VerifyDeterministic) {
  const std::vector<std::string> args{"verify", "--suite", "maillot", "--seed", "77"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  const auto other = run_cli({"verify", "--suite", "maillot", "--seed", "78"});
  EXPECT_NE(run_cli(args).out, other.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, kExitUsage);
  EXPECT_EQ(run_cli({"mahler", "--bogus", "1"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"path", "classify", "--family", "Q", "--a", "1"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"mahler", "--poly", "x", "--format", "xml"}).status, kExitUsage);
}

TEST(Cli, ModuleErrorsCarryCode) {
  const auto r = run_cli({"path", "period", "--family", "S", "--a", "3"});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_EQ(r.doc()["error"]["code"], "PathNotClosed");
  const auto p = run_cli({"mahler", "--poly", "x+"});
  EXPECT_EQ(p.status, kExitFailure);
  EXPECT_EQ(p.doc()["error"]["code"], "ParseError");
}

TEST(Suites, Registry) {
  const auto names = suite_names();
  for (const char* s : {"smyth", "maillot", "theorem1", "prop4", "periods", "windings", "all"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), s), names.end()) << s;
  }
  EXPECT_EQ(default_tolerance("smyth"), 1e-6);
  EXPECT_EQ(default_tolerance("theorem1"), 1e-4);
  EXPECT_EQ(default_tolerance("periods"), 1e-8);
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, SerialEqualsParallel) {
  SuiteOptions serial;
  serial.parallel = false;
  const auto a = run_suite("maillot", serial);
  const auto b = run_suite("maillot");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].case_id, b[i].case_id);
    EXPECT_EQ(a[i].lhs, b[i].lhs);
  }
}

}  // namespace
}  // namespace tmahler::cli
