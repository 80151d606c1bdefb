#pragma once

// Mahler measures over arbitrary tori |x| = a, |y| = b.

#include <array>
#include <vector>

#include "tmahler/polynomial.hpp"
#include "tmahler/quadrature.hpp"

namespace tmahler {

class TorusRadii {
 public:
  // Throws Error(InvalidArgument) unless every radius is finite and > 0.
  explicit TorusRadii(std::vector<double> radii);
  TorusRadii(std::initializer_list<double> radii) : TorusRadii(std::vector<double>(radii)) {}

  std::size_t size() const { return radii_.size(); }
  double operator[](std::size_t i) const { return radii_[i]; }
  const std::vector<double>& values() const { return radii_; }

 private:
  std::vector<double> radii_;
};

// Jensen's formula for one univariate Laurent polynomial given by ascending
// coefficients starting at z^low: log|lead| + sum log max(|r|, a) + low log a.
// Throws SliceDegeneracy when every coefficient is zero.
double jensen_measure(const std::vector<cplx>& coeffs, int low, double a);

// m_a(p) for p in x only, from its roots. No quadrature.
double mahler_univariate(const LaurentPolynomial& p, double a);

// m_{a,b}(P): adaptive outer integral over arg x of the exact Jensen value of
// each slice y -> P(a e^{it}, y). abs_error bounds the outer quadrature error.
RealEstimate mahler_torus_2d(const LaurentPolynomial& p, const TorusRadii& radii, double tol,
                             const QuadOptions& options = {});

// Angles t in [-pi, pi) where the slice at x = a e^{it} changes the number of
// roots outside |y| = b, or where its leading coefficient vanishes.
std::vector<double> slice_breakpoints(const LaurentPolynomial& p, double a, double b);

// Splitting of m_{a,b}(P) for P quadratic in y into per-branch pieces.
// Branch 0 is the root of larger modulus at each angle, branch 1 the other.
//   leading_term    m_{a,b}(A(x) y^low) with A the coefficient of the top power
//   log_b_term      2 log b
//   eta_terms[i]    -(1/2pi) int over {|y_i| >= b} of eta(x, y_i)
//   darg_terms[i]   log a * (1/2pi) int over {|y_i| >= b} of d arg y_i
//   arc_fraction[i] measure of {|y_i| >= b} divided by 2 pi
// total() = leading + log_b + sum(eta) + sum(darg) - sum(arc_fraction) log b,
// which equals m_{a,b}(P). On a closed path each arc fraction is 0 or 1 and the
// last sum is the number of branches outside |y| = b.
struct TorusDecomposition {
  double a = 1.0;
  double b = 1.0;
  double leading_term = 0.0;
  double log_b_term = 0.0;
  std::array<double, 2> eta_terms{};
  std::array<double, 2> darg_terms{};
  std::array<double, 2> winding{};
  std::array<double, 2> arc_fraction{};
  std::array<bool, 2> crossing{};
  double abs_error = 0.0;

  bool any_crossing() const { return crossing[0] || crossing[1]; }
  double total() const;
};

// Throws InvalidArgument unless deg_y P is exactly 2 (after removing y^low).
// Branch crossings are reported through the crossing flags, not thrown.
TorusDecomposition decompose_quadratic_y(const LaurentPolynomial& p, double a, double b,
                                         double tol = 1e-8, const QuadOptions& options = {});

struct SidePolynomial {
  Exponent from{};
  Exponent to{};
  std::vector<cplx> coefficients;  // ascending along the edge
  double measure = 0.0;
  bool cyclotomic = false;  // integral and a unit times a product of cyclotomics
};

struct TemperednessReport {
  std::vector<Exponent> vertices;  // counter-clockwise hull of the support
  std::vector<SidePolynomial> sides;
  bool tempered = false;
};

TemperednessReport temperedness(const LaurentPolynomial& p);

// m_{a,b,c}(x + y + z) in closed form: the triangle case uses the angles
// opposite a, b, c and the Bloch-Wigner function, otherwise log max(a, b, c).
double maillot(double a, double b, double c);

}  // namespace tmahler
