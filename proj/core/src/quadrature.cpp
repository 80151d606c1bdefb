#include "tmahler/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

#include "tmahler/error.hpp"

namespace tmahler {

SingularitySpec::SingularitySpec(std::vector<double> locations, SingularityKind kind)
    : locations_(std::move(locations)), kind_(kind) {
  std::sort(locations_.begin(), locations_.end());
  locations_.erase(std::unique(locations_.begin(), locations_.end()), locations_.end());
  if (locations_.empty()) kind_ = SingularityKind::None;
}

std::size_t default_budget() {
  constexpr std::size_t kDefault = 1'000'000;
  const char* env = std::getenv("TORUS_MAHLER_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::size_t>(v);
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double magnitude(double v) { return std::abs(v); }
double magnitude(const std::complex<double>& v) { return std::abs(v); }
double real_part(double v) { return v; }
double real_part(const std::complex<double>& v) { return v.real(); }
double imag_part(double) { return 0.0; }
double imag_part(const std::complex<double>& v) { return v.imag(); }
bool finite(double v) { return std::isfinite(v); }
bool finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class T>
class Integrator {
 public:
  using Fn = std::function<T(double)>;

  Integrator(const Fn& f, const QuadOptions& options) : f_(f), options_(options) {}

  std::size_t evaluations() const { return evaluations_; }

  T eval(double x) {
    if (evaluations_ >= options_.max_evaluations) {
      throw NonConvergenceError("evaluation budget exhausted", 0.0, 0.0,
                                std::numeric_limits<double>::infinity());
    }
    ++evaluations_;
    T v = f_(x);
    if (!finite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "integrand is not finite at x = " << x;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    return v;
  }

  struct Segment {
    double a;
    double b;
    T value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
  };

  Segment kronrod(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T fc = eval(center);
    T resk = fc * kWgk[7];
    T resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
      const double dx = half * kXgk[j];
      const T f1 = eval(center - dx);
      const T f2 = eval(center + dx);
      resk += (f1 + f2) * kWgk[j];
      if (j % 2 == 1) resg += (f1 + f2) * kWg[j / 2];
    }
    resk *= half;
    resg *= half;
    return {a, b, resk, magnitude(resk - resg)};
  }

  // Globally adaptive bisection over a set of regular pieces.
  QuadEstimate<T> gauss_kronrod(const std::vector<std::pair<double, double>>& pieces,
                                double tol) {
    std::priority_queue<Segment> queue;
    std::vector<Segment> frozen;
    T total{};
    double error = 0.0;
    for (const auto& [a, b] : pieces) {
      Segment s = kronrod(a, b);
      total += s.value;
      error += s.error;
      queue.push(s);
    }
    while (error > tol) {
      if (queue.empty()) {
        throw NonConvergenceError("segments cannot be refined further", real_part(total),
                                  imag_part(total), error);
      }
      Segment worst = queue.top();
      queue.pop();
      const double mid = 0.5 * (worst.a + worst.b);
      const double width = worst.b - worst.a;
      if (width <= 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::max(std::abs(worst.a), std::abs(worst.b)))) {
        frozen.push_back(worst);
        continue;
      }
      Segment left{};
      Segment right{};
      try {
        left = kronrod(worst.a, mid);
        right = kronrod(mid, worst.b);
      } catch (const NonConvergenceError&) {
        throw NonConvergenceError("evaluation budget exhausted", real_part(total),
                                  imag_part(total), error);
      }
      total += left.value + right.value - worst.value;
      error += left.error + right.error - worst.error;
      queue.push(left);
      queue.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    T sum{};
    double err = 0.0;
    while (!queue.empty()) {
      sum += queue.top().value;
      err += queue.top().error;
      queue.pop();
    }
    for (const auto& s : frozen) {
      sum += s.value;
      err += s.error;
    }
    return {sum, err, 0};
  }

  // tanh-sinh on [a, b]; nodes are generated by their distance to the nearer
  // endpoint so that points next to a singular endpoint keep full precision.
  bool double_exponential(double a, double b, double tol, QuadEstimate<T>& out) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kTmax = 4.0;
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);

    auto term = [&](double t) -> T {
      const double u = kHalfPi * std::sinh(std::abs(t));
      const double e = std::exp(-2.0 * u);
      const double dist = half * 2.0 * e / (1.0 + e);
      const double cu = std::cosh(u);
      const double w = half * kHalfPi * std::cosh(t) / (cu * cu);
      if (!(dist > 0.0) || !(w > 0.0)) return T{};
      const double x = t >= 0.0 ? b - dist : a + dist;
      if (x <= a || x >= b) return T{};
      if (dist < 1e-12 * half) {
        // Deep in the endpoint layer: tolerate blow-up from an undeclared
        // endpoint singularity by dropping the (negligible-weight) node.
        if (evaluations_ >= options_.max_evaluations) {
          throw NonConvergenceError("evaluation budget exhausted", 0.0, 0.0,
                                    std::numeric_limits<double>::infinity());
        }
        ++evaluations_;
        const T v = f_(x);
        return finite(v) ? v * w : T{};
      }
      return eval(x) * w;
    };

    double step = 1.0;
    T sum = eval(center) * (half * kHalfPi);
    for (double t = step; t <= kTmax; t += step) sum += term(t) + term(-t);
    T estimate = sum * step;
    for (int level = 1; level <= options_.max_de_level; ++level) {
      step *= 0.5;
      for (double t = step; t <= kTmax; t += 2.0 * step) sum += term(t) + term(-t);
      const T next = sum * step;
      const double diff = magnitude(next - estimate);
      estimate = next;
      if (level >= 3 && diff <= tol) {
        out.value = estimate;
        out.abs_error = diff;
        return true;
      }
    }
    return false;
  }

 private:
  const Fn& f_;
  QuadOptions options_;
  std::size_t evaluations_ = 0;
};

template <class T>
QuadEstimate<T> adaptive(const std::function<T(double)>& f, double lo, double hi,
                         const SingularitySpec& sing, double tol,
                         const QuadOptions& options) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::InvalidInterval, "integration interval requires lo < hi");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  const double snap = 1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  bool lo_singular = false;
  bool hi_singular = false;
  std::vector<double> cuts{lo};
  for (double s : sing.locations()) {
    if (std::abs(s - lo) <= snap) {
      lo_singular = true;
    } else if (std::abs(s - hi) <= snap) {
      hi_singular = true;
    } else if (s > lo && s < hi && s - cuts.back() > snap) {
      cuts.push_back(s);
    }
  }
  cuts.push_back(hi);

  struct Piece {
    double a, b;
    bool singular;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool left = i == 0 ? lo_singular : true;
    const bool right = i + 2 == cuts.size() ? hi_singular : true;
    pieces.push_back({cuts[i], cuts[i + 1], left || right});
  }

  Integrator<T> integrator(f, options);
  QuadEstimate<T> result;
  double used_error = 0.0;
  std::vector<std::pair<double, double>> regular;
  const double length = hi - lo;
  try {
    for (const auto& p : pieces) {
      if (!p.singular) {
        regular.emplace_back(p.a, p.b);
        continue;
      }
      const double share = tol * (p.b - p.a) / length;
      QuadEstimate<T> part;
      if (integrator.double_exponential(p.a, p.b, share, part)) {
        result.value += part.value;
        used_error += part.abs_error;
      } else {
        regular.emplace_back(p.a, p.b);
      }
    }
    if (!regular.empty()) {
      const double remaining = std::max(tol - used_error, 0.5 * tol * 1e-3);
      QuadEstimate<T> part = integrator.gauss_kronrod(regular, remaining);
      result.value += part.value;
      used_error += part.abs_error;
    }
  } catch (const NonConvergenceError& e) {
    std::ostringstream os;
    os << "integration over [" << lo << ", " << hi << "] did not reach tol " << tol
       << " within " << options.max_evaluations << " evaluations (" << e.what() << ")";
    throw NonConvergenceError(os.str(), e.best_real() + real_part(result.value),
                              e.best_imag() + imag_part(result.value),
                              e.best_abs_error() + used_error);
  }
  result.abs_error = used_error;
  result.evaluations = integrator.evaluations();
  return result;
}

}  // namespace

RealEstimate integrate_adaptive(const RealIntegrand& f, double lo, double hi,
                                const SingularitySpec& sing, double tol,
                                const QuadOptions& options) {
  return adaptive<double>(f, lo, hi, sing, tol, options);
}

ComplexEstimate integrate_adaptive_complex(const ComplexIntegrand& f, double lo, double hi,
                                           const SingularitySpec& sing, double tol,
                                           const QuadOptions& options) {
  return adaptive<std::complex<double>>(f, lo, hi, sing, tol, options);
}

ComplexEstimate integrate_circle(const ComplexIntegrand& g, double tol,
                                 const SingularitySpec& sing, const QuadOptions& options) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  ComplexEstimate raw =
      integrate_adaptive_complex(g, -std::numbers::pi, std::numbers::pi, sing, tol * kTwoPi, options);
  raw.value /= kTwoPi;
  raw.abs_error /= kTwoPi;
  return raw;
}

}  // namespace tmahler
