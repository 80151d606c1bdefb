#pragma once

// Branches of the two model curves and the paths they trace over a circle.
//
//   S(X, Y) = Y^2 + 2XY - X^3 + X,      Y_+- = X (-1 +- sqrt(X + 1 - 1/X))
//   R(x, y) = (x+1) y^2 + (x^2+4x+1) y + x^2 + x
//
// R is handled on the double cover x = x1^2, where
//   y_+- = x1 (-(2 + s^2) +- sqrt(4 + s^4)) / (2 s),   s = x1 + 1/x1.
// Square roots are principal, cut along (-inf, 0].

#include <complex>
#include <string_view>

#include "tmahler/curve.hpp"
#include "tmahler/error.hpp"
#include "tmahler/quadrature.hpp"

namespace tmahler {

enum class Family { S, R };
enum class Sign { Plus, Minus };

struct BranchId {
  Family family = Family::S;
  Sign sign = Sign::Minus;

  friend bool operator==(const BranchId&, const BranchId&) = default;
};

std::string_view to_string(Family f);
std::string_view to_string(Sign s);

struct BranchValue {
  cplx value;
  // Radicand on (-inf, 0]; value is then the limit from the upper half-plane.
  bool on_cut = false;
};

// point is X on |X| = a for S, x1 on |x1| = a for R.
BranchValue branch_eval(const BranchId& id, cplx point);

// S: P_X, P_Y at (X, Y). R: P_x, P_y at (x, y) with x = x1^2.
cplx partial_x(Family f, cplx x, cplx y);
cplx partial_y(Family f, cplx x, cplx y);

enum class Closure { AlwaysOutside, AlwaysInside, Crossing, Indeterminate };
std::string_view to_string(Closure c);

struct SampledModuli {
  // min and max over the sampled angles of |branch| / a
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct PathClass {
  Family family = Family::S;
  double a = 1.0;
  double parameter = 0.0;  // t = a - 1/a for S, a for R
  Closure minus_branch = Closure::Indeterminate;
  Closure plus_branch = Closure::Indeterminate;
  SampledModuli minus_sampled;
  SampledModuli plus_sampled;
  // No sampled angle contradicts the stated classification.
  bool consistent = true;

  Closure of(Sign s) const { return s == Sign::Minus ? minus_branch : plus_branch; }
};

inline constexpr int kClassifySamples = 1000;

PathClass classify_S(double a, int samples = kClassifySamples);
PathClass classify_R(double a, int samples = kClassifySamples);
PathClass classify(Family f, double a, int samples = kClassifySamples);

// Closed intervals and thresholds where the paths above are known to be closed.
struct Interval {
  double lo;
  double hi;
  bool contains(double a, double slack = 1e-12) const { return a >= lo - slack && a <= hi + slack; }
  double mid() const { return 0.5 * (lo + hi); }
};
Interval golden_interval();   // S: |a - 1/a| <= 1
double s_upper_threshold();   // S: a - 1/a = 3
double s_lower_threshold();   // S: a - 1/a = -3
Interval r_interval();

// (1/2pi) times the total increment of arg of the branch along its path: the
// circle |X| = a for S, the circle |x| = a^2 for R (traced as half of the
// x1-circle |x1| = a). Tracked by continuous unwrapping; a jump through a pole
// or zero lying on the path is dropped, i.e. the principal value is returned.
// Throws PathNotClosed if the path is not closed at radius a or if the branch
// jumps across the cut.
double winding(const BranchId& id, double a);

// -(1/2pi) times the integral of eta(x, y) = log|x| d arg y - log|y| d arg x
// over the closed path. Zero when the branch stays inside.
RealEstimate eta_integral(const BranchId& id, double a, double tol = 1e-8,
                          const QuadOptions& options = {});

// Integral of the holomorphic differential along the minus-branch path:
//   S: -dX / (2 X sqrt(X + 1 - 1/X)) over |X| = a
//   R: -dx1 / (x1 sqrt(4 + s^4)) over |x1| = a
// Throws PathNotClosed outside the closed interval of the family.
ComplexEstimate period_integral(const BranchId& id, double a, double tol = 1e-10,
                                const QuadOptions& options = {});

// -2i sqrt(g) K(i g) with g = (sqrt 5 - 1)/2.
cplx period_reference();

// Integral of -dX / (2 X sqrt(X + 1 - 1/X)) over the upper half of the circle of
// radius eps around the branch point X = g.
cplx small_arc_integral(double eps, double tol = 1e-13);

// The birational map between R(x, y) = 0 and Y^2 + 2XY = X^3 - X.
template <class F>
Point<F> phi_map(const Point<F>& p) {
  if (p.infinity) throw Error(ErrorCode::ExceptionalPoint, "phi is not defined at infinity");
  const F d = p.x + p.y + F(2);
  if (d == F(0)) throw Error(ErrorCode::ExceptionalPoint, "x + y + 2 = 0");
  return Point<F>::affine(-(p.x + p.y) / d, F(2) * p.x / d);
}

template <class F>
Point<F> phi_inverse(const Point<F>& q) {
  if (q.infinity) throw Error(ErrorCode::ExceptionalPoint, "phi^-1 is not defined at infinity");
  const F d = q.x + F(1);
  if (d == F(0)) throw Error(ErrorCode::ExceptionalPoint, "X + 1 = 0");
  return Point<F>::affine(q.y / d, -(F(2) * q.x + q.y) / d);
}

}  // namespace tmahler
