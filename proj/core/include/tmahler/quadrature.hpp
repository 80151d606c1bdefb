#pragma once

// Adaptive one-dimensional quadrature with error estimates.
//
// Regular stretches are handled by a globally adaptive Gauss-Kronrod (7/15)
// bisection scheme. Stretches that end at a declared singularity are handled
// by a tanh-sinh (double-exponential) substitution, which absorbs integrable
// endpoint singularities of logarithmic or algebraic type.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace tmahler {

template <class T>
struct QuadEstimate {
  T value{};
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

using RealEstimate = QuadEstimate<double>;
using ComplexEstimate = QuadEstimate<std::complex<double>>;

enum class SingularityKind { None, Logarithmic };

// Points where the integrand may blow up (integrably) or lose smoothness.
// Locations are kept sorted and pairwise distinct.
class SingularitySpec {
 public:
  SingularitySpec() = default;
  SingularitySpec(std::vector<double> locations, SingularityKind kind);

  static SingularitySpec none() { return {}; }
  static SingularitySpec logarithmic(std::vector<double> locations) {
    return {std::move(locations), SingularityKind::Logarithmic};
  }

  const std::vector<double>& locations() const { return locations_; }
  SingularityKind kind() const { return kind_; }
  bool empty() const { return locations_.empty(); }

 private:
  std::vector<double> locations_;
  SingularityKind kind_ = SingularityKind::None;
};

// Evaluation budget per integral: 10^6 unless TORUS_MAHLER_BUDGET is set.
std::size_t default_budget();

struct QuadOptions {
  std::size_t max_evaluations = default_budget();
  // Deepest tanh-sinh level before falling back to Gauss-Kronrod bisection.
  int max_de_level = 9;
};

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Integrates f over [lo, hi] to absolute tolerance tol.
// Throws Error(InvalidInterval) when lo >= hi and NonConvergenceError when the
// evaluation budget runs out first.
RealEstimate integrate_adaptive(const RealIntegrand& f, double lo, double hi,
                                const SingularitySpec& sing, double tol,
                                const QuadOptions& options = {});

ComplexEstimate integrate_adaptive_complex(const ComplexIntegrand& f, double lo, double hi,
                                           const SingularitySpec& sing, double tol,
                                           const QuadOptions& options = {});

// Normalized circle average (1/2pi) * integral of g over [-pi, pi).
// tol and the returned error refer to the normalized value.
ComplexEstimate integrate_circle(const ComplexIntegrand& g, double tol,
                                 const SingularitySpec& sing = {},
                                 const QuadOptions& options = {});

}  // namespace tmahler
