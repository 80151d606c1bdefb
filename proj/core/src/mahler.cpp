#include "tmahler/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tmahler/error.hpp"
#include "tmahler/roots.hpp"
#include "tmahler/specfun.hpp"

namespace tmahler {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kScanPoints = 2048;

// Folds an angle into [-pi, pi).
double fold(double t) {
  t = std::remainder(t, kTwoPi);
  return t >= kPi ? t - kTwoPi : t;
}

int outside_count(const LaurentPolynomial& p, double a, double b, double t) {
  std::vector<cplx> c = p.slice_in_y(std::polar(a, t));
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return 0;
  int n = 0;
  for (const cplx& r : polynomial_roots(c)) n += std::abs(r) > b ? 1 : 0;
  return n;
}

// Evaluates f at t, nudging t if the slice there is degenerate.
template <class F>
auto robust(F&& f, double t) -> decltype(f(t)) {
  constexpr double kShift = 1e-9;
  try {
    return f(t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SliceDegeneracy && e.code() != ErrorCode::RootFindingFailure) throw;
  }
  try {
    return f(t + kShift);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SliceDegeneracy && e.code() != ErrorCode::RootFindingFailure) throw;
  }
  return f(t - kShift);
}

// Breakpoints in [-pi, pi) plus the endpoint pi when -pi is one of them, so
// that both ends of the periodic interval are treated as singular.
SingularitySpec circle_singularities(std::vector<double> angles) {
  std::vector<double> locs;
  for (double t : angles) {
    const double f = fold(t);
    locs.push_back(f);
    if (std::abs(f + kPi) < 1e-13) locs.push_back(kPi);
  }
  return SingularitySpec::logarithmic(std::move(locs));
}

}  // namespace

TorusRadii::TorusRadii(std::vector<double> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw Error(ErrorCode::InvalidArgument, "torus needs at least one radius");
  for (double r : radii_) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::InvalidArgument, "torus radii must be positive and finite");
    }
  }
}

double jensen_measure(const std::vector<cplx>& coeffs, int low, double a) {
  std::vector<cplx> c = coeffs;
  while (!c.empty() && c.back() == cplx(0.0, 0.0)) c.pop_back();
  if (c.empty()) throw Error(ErrorCode::SliceDegeneracy, "polynomial vanishes identically");
  const double log_a = std::log(a);
  double m = std::log(std::abs(c.back())) + static_cast<double>(low) * log_a;
  if (c.size() == 1) return m;
  for (const cplx& r : polynomial_roots(c)) m += std::max(std::log(std::abs(r)), log_a);
  return m;
}

double mahler_univariate(const LaurentPolynomial& p, double a) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "Mahler measure of the zero polynomial");
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  return jensen_measure(p.coefficients_in_x(), p.min_degree(0), a);
}

std::vector<double> slice_breakpoints(const LaurentPolynomial& p, double a, double b) {
  std::vector<double> out;

  // Zeros of the leading y-coefficient on |x| = a.
  const int top = p.max_degree(1);
  std::map<Exponent, cplx> lead_terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] == top) lead_terms[{e[0], 0}] = c;
  }
  const LaurentPolynomial lead(1, lead_terms);
  std::vector<cplx> lc = lead.coefficients_in_x();
  if (lc.size() > 1) {
    for (const cplx& r : polynomial_roots(lc)) {
      if (std::abs(std::abs(r) - a) <= 1e-8 * a) out.push_back(fold(std::arg(r)));
    }
  }

  if (p.max_degree(1) > p.min_degree(1)) {
    auto count = [&](double t) { return robust([&](double s) { return outside_count(p, a, b, s); }, t); };
    std::vector<int> counts(kScanPoints + 1);
    const double h = kTwoPi / kScanPoints;
    for (int k = 0; k <= kScanPoints; ++k) counts[k] = k < kScanPoints ? count(-kPi + k * h) : counts[0];
    for (int k = 0; k < kScanPoints; ++k) {
      if (counts[k] == counts[k + 1]) continue;
      double lo = -kPi + k * h;
      double hi = lo + h;
      const int c_lo = counts[k];
      for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count(mid) == c_lo) lo = mid;
        else hi = mid;
      }
      out.push_back(fold(0.5 * (lo + hi)));
    }
  }

  std::sort(out.begin(), out.end());
  std::vector<double> merged;
  for (double t : out) {
    if (merged.empty() || t - merged.back() > 1e-12) merged.push_back(t);
  }
  return merged;
}

RealEstimate mahler_torus_2d(const LaurentPolynomial& p, const TorusRadii& radii, double tol,
                             const QuadOptions& options) {
  if (radii.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "mahler_torus_2d needs exactly two radii");
  }
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "Mahler measure of the zero polynomial");
  const double a = radii[0];
  const double b = radii[1];
  const int low = p.min_degree(1);

  auto slice = [&](double t) { return jensen_measure(p.slice_in_y(std::polar(a, t)), low, b); };
  auto integrand = [&](double t) { return robust(slice, t); };

  const SingularitySpec sing = circle_singularities(slice_breakpoints(p, a, b));
  RealEstimate r = integrate_adaptive(integrand, -kPi, kPi, sing, tol * kTwoPi, options);
  r.value /= kTwoPi;
  r.abs_error /= kTwoPi;
  return r;
}

double TorusDecomposition::total() const {
  const double log_b = std::log(b);
  return leading_term + log_b_term + eta_terms[0] + eta_terms[1] + darg_terms[0] + darg_terms[1] -
         (arc_fraction[0] + arc_fraction[1]) * log_b;
}

TorusDecomposition decompose_quadratic_y(const LaurentPolynomial& p, double a, double b, double tol,
                                         const QuadOptions& options) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorCode::InvalidArgument, "radii must be positive");
  const int low = p.min_degree(1);
  if (p.max_degree(1) - low != 2) {
    throw Error(ErrorCode::InvalidArgument, "decomposition needs P of degree exactly 2 in y");
  }

  TorusDecomposition d;
  d.a = a;
  d.b = b;
  const double log_a = std::log(a);
  const double log_b = std::log(b);

  std::map<Exponent, cplx> lead_terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] == low + 2) lead_terms[{e[0], 0}] = c;
  }
  d.leading_term = mahler_univariate(LaurentPolynomial(1, lead_terms), a) + low * log_b;
  d.log_b_term = 2.0 * log_b;

  // Branch values and d arg y / dt at x = a e^{it}, sorted by modulus.
  struct Branches {
    std::array<cplx, 2> y;
    std::array<double, 2> darg;
  };
  auto branches = [&](double t) {
    const cplx x = std::polar(a, t);
    const std::vector<cplx> c = p.slice_in_y(x);
    if (c[2] == cplx(0.0, 0.0)) throw Error(ErrorCode::SliceDegeneracy, "leading coefficient vanishes");
    std::vector<cplx> r = polynomial_roots(c);
    if (r.size() != 2) throw Error(ErrorCode::SliceDegeneracy, "slice lost a root");
    if (std::abs(r[0]) < std::abs(r[1])) std::swap(r[0], r[1]);
    Branches out{};
    for (int i = 0; i < 2; ++i) {
      const cplx y = r[static_cast<std::size_t>(i)];
      cplx px = 0.0;
      for (const auto& [e, coef] : p.terms()) {
        if (e[0] != 0) {
          px += coef * static_cast<double>(e[0]) * std::pow(x, e[0] - 1) * std::pow(y, e[1] - low);
        }
      }
      const cplx py = 2.0 * c[2] * y + c[1];
      if (std::abs(py) < 1e-300 || y == cplx(0.0, 0.0)) {
        throw Error(ErrorCode::SliceDegeneracy, "branch point on the path");
      }
      out.y[static_cast<std::size_t>(i)] = y;
      out.darg[static_cast<std::size_t>(i)] = (x * (-px / py) / y).real();
    }
    return out;
  };

  const std::vector<double> breaks = slice_breakpoints(p, a, b);
  const SingularitySpec sing = circle_singularities(breaks);

  // Arc fractions follow exactly from the breakpoints.
  std::vector<double> cuts{-kPi};
  for (double t : breaks) {
    if (t > -kPi) cuts.push_back(t);
  }
  cuts.push_back(kPi);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    const Branches br = robust(branches, mid);
    for (int i = 0; i < 2; ++i) {
      if (std::abs(br.y[static_cast<std::size_t>(i)]) >= b) {
        d.arc_fraction[static_cast<std::size_t>(i)] += (cuts[k + 1] - cuts[k]) / kTwoPi;
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    const double f = d.arc_fraction[static_cast<std::size_t>(i)];
    d.crossing[static_cast<std::size_t>(i)] = f > 1e-12 && f < 1.0 - 1e-12;
  }

  for (std::size_t i = 0; i < 2; ++i) {
    if (d.arc_fraction[i] == 0.0) continue;
    // Real part: log|y_i|; imaginary part: d arg y_i / dt, both on {|y_i| >= b}.
    auto integrand = [&](double t) -> cplx {
      const Branches br = robust(branches, t);
      if (std::abs(br.y[i]) < b) return 0.0;
      return {std::log(std::abs(br.y[i])), br.darg[i]};
    };
    const ComplexEstimate r =
        integrate_adaptive_complex(integrand, -kPi, kPi, sing, 0.5 * tol * kTwoPi, options);
    const double log_mod = r.value.real() / kTwoPi;
    d.winding[i] = r.value.imag() / kTwoPi;
    d.darg_terms[i] = log_a * d.winding[i];
    d.eta_terms[i] = log_mod - d.darg_terms[i];
    d.abs_error += r.abs_error / kTwoPi * (1.0 + std::abs(log_a));
  }
  return d;
}

double maillot(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "maillot needs positive a, b, c");
  }
  constexpr double kSlack = 1e-12;
  const double s = std::max({a, b, c}) * kSlack;
  const bool triangle = a + s < b + c && b + s < a + c && c + s < a + b;
  if (!triangle) return std::log(std::max({a, b, c}));
  auto angle = [](double opp, double u, double v) {
    return std::acos(std::clamp((u * u + v * v - opp * opp) / (2.0 * u * v), -1.0, 1.0));
  };
  const double alpha = angle(a, b, c);
  const double beta = angle(b, a, c);
  const double gamma = kPi - alpha - beta;
  return (alpha * std::log(a) + beta * std::log(b) + gamma * std::log(c) +
          bloch_wigner(std::polar(a / b, gamma))) /
         kPi;
}

}  // namespace tmahler
