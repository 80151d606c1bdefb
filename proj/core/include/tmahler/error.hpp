#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmahler {

enum class ErrorCode {
  InvalidArgument,
  InvalidInterval,
  NonConvergence,
  DivergentModulus,
  PointNotOnCurve,
  BadReduction,
  UnknownRootNumber,
  DegreeNonZero,
  RootFindingFailure,
  SliceDegeneracy,
  PathNotClosed,
  ExceptionalPoint,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Base for every error raised by the library. The code is stable and is what
// the CLI reports; the message carries the context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when an integrator exhausts its evaluation budget. The best estimate
// reached so far is kept so callers can decide whether it is usable.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, double value_re, double value_im,
                      double abs_error)
      : Error(ErrorCode::NonConvergence, message),
        value_re_(value_re), value_im_(value_im), abs_error_(abs_error) {}

  double best_real() const noexcept { return value_re_; }
  double best_imag() const noexcept { return value_im_; }
  double best_abs_error() const noexcept { return abs_error_; }

 private:
  double value_re_;
  double value_im_;
  double abs_error_;
};

}  // namespace tmahler
