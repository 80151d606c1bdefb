#pragma once

// Dilogarithms, complete and incomplete elliptic integrals of the first kind
// with complex modulus, and the chi_{-3} values behind m(x + y + 1).
//
// Branches: principal log and principal square root throughout.

#include <complex>

namespace tmahler {

using cplx = std::complex<double>;

// Li_2(z) on the principal branch. On the cut (1, inf) the value is the limit
// from the lower half plane, the one principal log(1 - x) gives.
cplx dilog(cplx z);

// D(z) = Im Li_2(z) + arg(1 - z) log|z|, extended by 0 at z = 0 and z = 1.
double bloch_wigner(cplx z);

class EllipticModulus {
 public:
  // Throws Error(DivergentModulus) when k^2 = 1.
  explicit EllipticModulus(cplx k);
  cplx k() const { return k_; }

 private:
  cplx k_;
};

// Arithmetic-geometric mean with the "right" choice of square root at each
// step (the one closer to the arithmetic mean).
cplx agm(cplx a, cplx b);

// K(k) = integral_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t).
// Throws DivergentModulus when k^2 is real and >= 1.
cplx ellipk(const EllipticModulus& k);

// F(phi, k) = integral_0^phi dt / sqrt(1 - k^2 sin^2 t), principal branch of
// the square root along the path, continued past pi/2 by F(phi + pi) = F(phi) + 2K.
cplx ellipf(double phi, const EllipticModulus& k);

// Carlson's symmetric R_F for complex arguments (at most one may be zero).
cplx carlson_rf(cplx x, cplx y, cplx z);

// Hurwitz zeta zeta(s, a) for real s > 1 and a > 0.
double hurwitz_zeta(double s, double a);

struct Chi3Values {
  double L2;             // L(chi_{-3}, 2)
  double Lprime_minus1;  // L'(chi_{-3}, -1) = (3 sqrt 3 / 4 pi) L(chi_{-3}, 2)
};

Chi3Values chi3_values();

}  // namespace tmahler
