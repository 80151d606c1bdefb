#pragma once

#include <array>

#include "tmahler/curve.hpp"
#include "tmahler/divisor.hpp"

namespace tmahler {

// Period lattice Z omega1 + Z omega2 of the invariant differential
// dx / (2y + a1 x + a3), normalised to tau = omega2 / omega1 with Im tau > 0.
struct PeriodData {
  double omega1 = 0.0;  // real period
  cplx omega2;
  cplx tau;
  cplx q;  // e^{2 pi i tau}
  // Roots of 4x^3 + b2 x^2 + 2 b4 x + b6; for a positive discriminant they are
  // real with e1 > e2 > e3, otherwise e1 is the real one.
  std::array<cplx, 3> roots;
};

PeriodData periods(const WeierstrassCurve& e);

// Elliptic logarithm normalised by omega1: returns u with 0 <= Re u < 1 and
// 0 <= Im u < Im tau whose image in C / (Z + tau Z) corresponds to P.
// Uses Carlson's R_F on the differences x - e_i; points on a bounded real
// component are first translated by the 2-torsion point (e2, .).
// Throws PointNotOnCurve; P = O gives 0.
cplx elliptic_log(const ComplexPoint& p, const WeierstrassCurve& e);
cplx elliptic_log(const ComplexPoint& p, const WeierstrassCurve& e, const PeriodData& lattice);

// Bloch's elliptic dilogarithm D^E(P) = sum_{n in Z} D(q^n z), z = e^{2 pi i u(P)}.
double elliptic_dilog(const ComplexPoint& p, const WeierstrassCurve& e, const PeriodData& lattice);
// Linear extension to a formal divisor; D^E(O) = 0.
double elliptic_dilog(const FormalDivisor& d, const WeierstrassCurve& e);

}  // namespace tmahler
