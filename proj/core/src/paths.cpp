#include "tmahler/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "tmahler/roots.hpp"
#include "tmahler/specfun.hpp"

namespace tmahler {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
const double kSqrt5 = std::sqrt(5.0);

// Relative slack when comparing sampled moduli against the radius.
constexpr double kSampleSlack = 1e-9;

struct Sqrt {
  cplx value;
  bool on_cut;
};

Sqrt principal_sqrt(cplx r) {
  const bool on_cut = r.real() <= 0.0 && std::abs(r.imag()) <= 1e-14 * std::abs(r);
  if (on_cut) return {std::sqrt(cplx(r.real(), 0.0)), true};
  return {std::sqrt(r), false};
}

double sign_of(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

// Point on the path at angle t: X for S, x1 for R.
cplx on_circle(double a, double t) { return std::polar(a, t); }

// u0 e^{i d} - u0 without cancellation for small d.
cplx rotation_offset(cplx u0, double d) {
  return u0 * cplx(0.0, 2.0 * std::sin(0.5 * d)) * std::polar(1.0, 0.5 * d);
}

// Radicand at u = u0 + du, expanded around u0 so that a zero at u0 is exact
// and the difference carries no cancellation.
cplx radicand(Family f, cplx u0, cplx du) {
  constexpr double kSnap = 1e-13;
  const cplx u = u0 + du;
  if (f == Family::S) {
    cplx r0 = u0 + 1.0 - 1.0 / u0;
    if (std::abs(r0) <= kSnap * (1.0 + std::abs(u0) + 1.0 / std::abs(u0))) r0 = 0.0;
    return r0 + du * (1.0 + 1.0 / (u0 * u));
  }
  const cplx s0 = u0 + 1.0 / u0;
  const cplx s02 = s0 * s0;
  cplx r0 = 4.0 + s02 * s02;
  if (std::abs(r0) <= kSnap * (4.0 + std::norm(s02))) r0 = 0.0;
  const cplx ds = du * (1.0 - 1.0 / (u0 * u));
  const cplx s = s0 + ds;
  return r0 + ds * (s + s0) * (s * s + s02);
}

BranchValue branch_at(const BranchId& id, cplx u0, cplx du) {
  const double sg = sign_of(id.sign);
  const cplx u = u0 + du;
  const Sqrt q = principal_sqrt(radicand(id.family, u0, du));
  if (id.family == Family::S) return {u * (-1.0 + sg * q.value), q.on_cut};
  const cplx s = u + 1.0 / u;
  return {u * (-(2.0 + s * s) + sg * q.value) / (2.0 * s), q.on_cut};
}

// (x, y) on the curve for the branch; for R, x = x1^2.
struct CurvePoint {
  cplx x;
  cplx y;
};

CurvePoint curve_point(const BranchId& id, cplx u0, cplx du) {
  const cplx u = u0 + du;
  return {id.family == Family::S ? u : u * u, branch_at(id, u0, du).value};
}

// d arg y / dt at u = a e^{it}. The chain rule gives Re(x y'(x) / y) times the
// speed of arg x in t, which is 1 for S and 2 for R.
double darg(const BranchId& id, cplx u0, cplx du) {
  const CurvePoint p = curve_point(id, u0, du);
  const double speed = id.family == Family::S ? 1.0 : 2.0;
  const cplx py = partial_y(id.family, p.x, p.y);
  if (std::abs(py) >= 1e-10) {
    return speed * (p.x * (-partial_x(id.family, p.x, p.y) / py) / p.y).real();
  }
  constexpr double h = 1e-6;
  const cplx u = u0 + du;
  const cplx ratio = curve_point(id, u, rotation_offset(u, h)).y / curve_point(id, u, rotation_offset(u, -h)).y;
  return std::arg(ratio) / (2.0 * h);
}

// Unit vectors of the angles where the path integrands lose smoothness: branch
// points, poles and zeros of the branches. Sorted by angle in (-pi, pi].
std::vector<cplx> anchors(Family f, double a) {
  std::vector<cplx> out{1.0, -1.0, cplx(0.0, 1.0), cplx(0.0, -1.0)};
  if (f == Family::R) {
    // 4 x1^4 + (x1^2 + 1)^4, the radicand times x1^4.
    const std::vector<cplx> radicand{1.0, 0.0, 4.0, 0.0, 10.0, 0.0, 4.0, 0.0, 1.0};
    for (const cplx& r : polynomial_roots(radicand)) {
      if (std::abs(std::abs(r) - a) <= 1e-9 * a) out.push_back(r / std::abs(r));
    }
  }
  std::sort(out.begin(), out.end(), [](cplx p, cplx q) { return std::arg(p) < std::arg(q); });
  return out;
}

// Integral of g(a e^{it}) dt over a full turn. Each arc between neighbouring
// anchors is split at its middle and each half is parametrized by the exact
// distance d from its anchor, so endpoint singularities sit at d = 0.
using PathIntegrand = std::function<cplx(cplx u0, cplx du)>;

ComplexEstimate integrate_path(const PathIntegrand& g, double a, const std::vector<cplx>& anchor,
                               double tol, const QuadOptions& options) {
  ComplexEstimate total;
  const std::size_t n = anchor.size();
  const double piece_tol = tol / static_cast<double>(2 * n);
  const SingularitySpec at_zero = SingularitySpec::logarithmic({0.0});
  for (std::size_t k = 0; k < n; ++k) {
    const cplx from = anchor[k];
    const cplx to = anchor[(k + 1) % n];
    double len = std::arg(to / from);
    if (len <= 0.0) len += kTwoPi;
    for (const auto& [base, dir] : {std::pair{from, 1.0}, std::pair{to, -1.0}}) {
      const cplx u0 = a * base;
      auto h = [&, u0, dir = dir](double d) { return g(u0, rotation_offset(u0, dir * d)); };
      const ComplexEstimate r = integrate_adaptive_complex(h, 0.0, 0.5 * len, at_zero, piece_tol, options);
      total.value += r.value;
      total.abs_error += r.abs_error;
      total.evaluations += r.evaluations;
    }
  }
  return total;
}

bool closed(const PathClass& c, Sign s) {
  const Closure k = c.of(s);
  return k == Closure::AlwaysOutside || k == Closure::AlwaysInside;
}

SampledModuli sample(Family f, Sign s, double a, int n) {
  SampledModuli m{std::numeric_limits<double>::infinity(), 0.0};
  const BranchId id{f, s};
  for (int k = 0; k < n; ++k) {
    const double t = -kPi + kTwoPi * (k + 0.5) / n;
    const double r = std::abs(branch_eval(id, on_circle(a, t)).value) / a;
    m.min_ratio = std::min(m.min_ratio, r);
    m.max_ratio = std::max(m.max_ratio, r);
  }
  return m;
}

bool agrees(Closure c, const SampledModuli& m) {
  if (c == Closure::AlwaysOutside) return m.min_ratio >= 1.0 - kSampleSlack;
  if (c == Closure::AlwaysInside) return m.max_ratio <= 1.0 + kSampleSlack;
  return true;
}

void finish(PathClass& c, int samples) {
  if (samples <= 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  c.minus_sampled = sample(c.family, Sign::Minus, c.a, samples);
  c.plus_sampled = sample(c.family, Sign::Plus, c.a, samples);
  c.consistent = agrees(c.minus_branch, c.minus_sampled) && agrees(c.plus_branch, c.plus_sampled);
}

void require_radius(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::S ? "S" : "R"; }
std::string_view to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

std::string_view to_string(Closure c) {
  switch (c) {
    case Closure::AlwaysOutside: return "AlwaysOutside";
    case Closure::AlwaysInside: return "AlwaysInside";
    case Closure::Crossing: return "Crossing";
    case Closure::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

BranchValue branch_eval(const BranchId& id, cplx point) { return branch_at(id, point, 0.0); }

cplx partial_x(Family f, cplx x, cplx y) {
  if (f == Family::S) return 2.0 * y - 3.0 * x * x + 1.0;
  return y * y + (2.0 * x + 4.0) * y + 2.0 * x + 1.0;
}

cplx partial_y(Family f, cplx x, cplx y) {
  if (f == Family::S) return 2.0 * y + 2.0 * x;
  return 2.0 * (x + 1.0) * y + x * x + 4.0 * x + 1.0;
}

Interval golden_interval() { return {(kSqrt5 - 1.0) / 2.0, (1.0 + kSqrt5) / 2.0}; }
double s_upper_threshold() { return (3.0 + std::sqrt(13.0)) / 2.0; }
double s_lower_threshold() { return (-3.0 + std::sqrt(13.0)) / 2.0; }

Interval r_interval() {
  const double w = std::sqrt(2.0 * kSqrt5 + 2.0);
  return {std::sqrt((1.0 + kSqrt5 - w) / 2.0), std::sqrt((1.0 + kSqrt5 + w) / 2.0)};
}

PathClass classify_S(double a, int samples) {
  require_radius(a);
  PathClass c;
  c.family = Family::S;
  c.a = a;
  c.parameter = a - 1.0 / a;
  const double t = std::abs(c.parameter);
  // Y_- stays outside for every t; Y_+ only at the two ends.
  c.minus_branch = Closure::AlwaysOutside;
  if (t <= 1.0) c.plus_branch = Closure::AlwaysInside;
  else if (t >= 3.0) c.plus_branch = Closure::AlwaysOutside;
  else c.plus_branch = Closure::Indeterminate;
  finish(c, samples);
  return c;
}

PathClass classify_R(double a, int samples) {
  require_radius(a);
  PathClass c;
  c.family = Family::R;
  c.a = a;
  c.parameter = a;
  if (r_interval().contains(a, 0.0)) {
    c.minus_branch = Closure::AlwaysOutside;
    c.plus_branch = Closure::AlwaysInside;
  }
  finish(c, samples);
  return c;
}

PathClass classify(Family f, double a, int samples) {
  return f == Family::S ? classify_S(a, samples) : classify_R(a, samples);
}

double winding(const BranchId& id, double a) {
  require_radius(a);
  // Zeros and poles of the branches meet the circle only at a = 1 (X = +-1 for
  // S, x1 = +-i for R). Within rounding of that radius the tracked increment is
  // meaningless, so those radii get the principal value at a = 1.
  if (std::abs(a - 1.0) <= 1e-12) a = 1.0;
  if (!closed(classify(id.family, a, 64), id.sign)) {
    throw Error(ErrorCode::PathNotClosed, "path of this branch is not closed at this radius");
  }
  auto value = [&](double t) {
    cplx y = branch_eval(id, on_circle(a, t)).value;
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) y = branch_eval(id, on_circle(a, t + 1e-12)).value;
    return y;
  };
  constexpr double kBaseStep = kTwoPi / 2048.0;
  constexpr double kMinStep = 1e-14;
  constexpr double kHuge = 1e7;
  // Start away from the real axis, where the cut of S touches the circle.
  const double t0 = -kPi + 0.1234;
  const double t1 = t0 + kTwoPi;
  const cplx y_start = value(t0);
  cplx y_prev = y_start;
  double t = t0;
  double h = kBaseStep;
  double total = 0.0;
  while (t < t1) {
    double step = std::min(h, t1 - t);
    cplx y_next = value(t + step);
    double d = std::arg(y_next / y_prev);
    while (std::abs(d) >= 0.5 * kPi && step > kMinStep) {
      step *= 0.5;
      y_next = value(t + step);
      d = std::arg(y_next / y_prev);
    }
    if (std::abs(d) >= 0.5 * kPi) {
      const double lo = std::min(std::abs(y_prev), std::abs(y_next));
      const double hi = std::max(std::abs(y_prev), std::abs(y_next));
      if (hi < kHuge * a && lo > a / kHuge) {
        throw Error(ErrorCode::PathNotClosed, "branch jumps across the cut");
      }
      d = 0.0;  // pole or zero on the path
    }
    total += d;
    t += step;
    y_prev = y_next;
    h = std::min(kBaseStep, 2.0 * step);
  }
  if (std::abs(y_prev - y_start) > 1e-8 * std::max(1.0, std::abs(y_start))) {
    throw Error(ErrorCode::PathNotClosed, "branch does not return to its starting value");
  }
  // R: the x1-circle covers |x| = a^2 twice.
  return total / (id.family == Family::S ? kTwoPi : 2.0 * kTwoPi);
}

RealEstimate eta_integral(const BranchId& id, double a, double tol, const QuadOptions& options) {
  require_radius(a);
  const PathClass c = classify(id.family, a, 64);
  if (!closed(c, id.sign)) throw Error(ErrorCode::PathNotClosed, "path of this branch is not closed at this radius");
  if (c.of(id.sign) == Closure::AlwaysInside) return {};
  const double log_a = std::log(a);
  // In the path parameter t both families reduce to log a * d arg y - log|y|.
  auto f = [&](cplx u0, cplx du) {
    const double ly = std::log(std::abs(curve_point(id, u0, du).y));
    return cplx((log_a == 0.0 ? 0.0 : log_a * darg(id, u0, du)) - ly, 0.0);
  };
  const ComplexEstimate r = integrate_path(f, a, anchors(id.family, a), tol * kTwoPi, options);
  return {-r.value.real() / kTwoPi, r.abs_error / kTwoPi, r.evaluations};
}

ComplexEstimate period_integral(const BranchId& id, double a, double tol, const QuadOptions& options) {
  require_radius(a);
  if (id.sign != Sign::Minus) throw Error(ErrorCode::InvalidArgument, "periods are taken along the minus branch");
  const Interval iv = id.family == Family::S ? golden_interval() : r_interval();
  if (!iv.contains(a)) throw Error(ErrorCode::PathNotClosed, "radius outside the closed interval");
  const cplx minus_i(0.0, -1.0);
  auto f = [&](cplx u0, cplx du) -> cplx {
    const cplx q = principal_sqrt(radicand(id.family, u0, du)).value;
    return id.family == Family::S ? minus_i / (2.0 * q) : minus_i / q;
  };
  return integrate_path(f, a, anchors(id.family, a), tol, options);
}

cplx period_reference() {
  const double g = (kSqrt5 - 1.0) / 2.0;
  return cplx(0.0, -2.0 * std::sqrt(g)) * ellipk(EllipticModulus(cplx(0.0, g)));
}

cplx small_arc_integral(double eps, double tol) {
  if (!(eps > 0.0) || eps >= 0.5) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 0.5)");
  const double g = (kSqrt5 - 1.0) / 2.0;
  auto f = [&](double phi) -> cplx {
    const cplx w = std::polar(eps, phi);
    const cplx X = g + w;
    return -cplx(0.0, 1.0) * w / (2.0 * X * principal_sqrt(radicand(Family::S, g, w)).value);
  };
  return integrate_adaptive_complex(f, 0.0, kPi, SingularitySpec::none(), tol).value;
}

}  // namespace tmahler
