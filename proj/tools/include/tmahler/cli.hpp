#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tmahler::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed verification or module error
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Writes one JSON or CSV
// document to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerificationReport {
  std::string case_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
  double runtime_s = 0.0;
  std::string note;  // error message or a short description
};

struct SuiteOptions {
  std::optional<double> tol;  // unset: the suite's own default
  std::uint64_t seed = 20;
  bool parallel = true;
};

std::vector<std::string> suite_names();
double default_tolerance(const std::string& suite);

// Throws std::invalid_argument for an unknown suite.
std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options = {});

}  // namespace tmahler::cli
