#include "tmahler/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tmahler/roots.hpp"
#include "tmahler/specfun.hpp"

namespace tmahler {

namespace {

constexpr double kPi = std::numbers::pi;

double to_double(const Rational& r) { return static_cast<double>(r); }

// Principal-branch R_F representative with the sign fixed by eta = 2y + a1 x + a3:
// integral from x to infinity of dx / eta along the sheet containing P.
cplx carlson_log(cplx x, cplx eta, const std::array<cplx, 3>& e) {
  const cplx d1 = x - e[0];
  const cplx d2 = x - e[1];
  const cplx d3 = x - e[2];
  const cplx z = carlson_rf(d1, d2, d3);
  const cplx s = std::sqrt(d1) * std::sqrt(d2) * std::sqrt(d3);
  return std::abs(eta + 2.0 * s) <= std::abs(eta - 2.0 * s) ? z : -z;
}

cplx reduce(cplx u, cplx tau) {
  const double n = std::floor(u.imag() / tau.imag());
  u -= n * tau;
  u -= std::floor(u.real());
  // Guard against values that land a rounding error below the upper edges.
  if (u.real() >= 1.0 - 1e-14) u -= 1.0;
  if (u.real() < 0.0 && u.real() > -1e-14) u = cplx(0.0, u.imag());
  if (u.imag() >= tau.imag() * (1.0 - 1e-14)) u -= tau;
  if (u.real() < -1e-14) u += 1.0;
  return u;
}

}  // namespace

PeriodData periods(const WeierstrassCurve& e) {
  const double b2 = to_double(e.b2());
  const double b4 = to_double(e.b4());
  const double b6 = to_double(e.b6());
  std::vector<cplx> r = polynomial_roots({b6, 2.0 * b4, b2, 4.0});
  PeriodData out;
  if (e.discriminant() > 0) {
    std::array<double, 3> re{r[0].real(), r[1].real(), r[2].real()};
    std::sort(re.begin(), re.end(), std::greater<>());
    const double e1 = re[0];
    const double e2 = re[1];
    const double e3 = re[2];
    out.roots = {e1, e2, e3};
    out.omega1 = kPi / agm(std::sqrt(e1 - e3), std::sqrt(e1 - e2)).real();
    out.omega2 = cplx(0.0, kPi / agm(std::sqrt(e1 - e3), std::sqrt(e2 - e3)).real());
  } else {
    std::sort(r.begin(), r.end(), [](cplx u, cplx v) { return std::abs(u.imag()) < std::abs(v.imag()); });
    const double e1 = r[0].real();
    cplx e2 = r[1];
    cplx e3 = r[2];
    if (e2.imag() < 0.0) std::swap(e2, e3);
    out.roots = {e1, e2, e3};
    const double a = 3.0 * e1 + b2 / 4.0;
    const double b = std::sqrt(3.0 * e1 * e1 + b2 * e1 / 2.0 + b4 / 2.0);
    out.omega1 = 2.0 * kPi / agm(2.0 * std::sqrt(b), std::sqrt(2.0 * b + a)).real();
    out.omega2 = -out.omega1 / 2.0 + cplx(0.0, kPi / agm(2.0 * std::sqrt(b), std::sqrt(2.0 * b - a)).real());
  }
  out.tau = out.omega2 / out.omega1;
  if (out.tau.imag() < 0.0) {
    out.omega2 = -out.omega2;
    out.tau = -out.tau;
  }
  out.q = std::exp(cplx(0.0, 2.0 * kPi) * out.tau);
  return out;
}

cplx elliptic_log(const ComplexPoint& p, const WeierstrassCurve& e) {
  return elliptic_log(p, e, periods(e));
}

cplx elliptic_log(const ComplexPoint& p, const WeierstrassCurve& e, const PeriodData& lattice) {
  if (p.infinity) return 0.0;
  if (!e.contains(p, 1e-9)) throw Error(ErrorCode::PointNotOnCurve, "point is not on the curve");
  const auto& roots = lattice.roots;
  const cplx x = p.x;
  const bool on_egg = e.discriminant() > 0 && std::abs(x.imag()) <= 1e-12 * (1.0 + std::abs(x)) &&
                      x.real() < roots[0].real() - 1e-12 * (1.0 + std::abs(x));
  cplx z;
  if (on_egg) {
    // Move to the unbounded component with the 2-torsion point T = (e2, .),
    // whose logarithm is (omega1 + omega2) / 2.
    const double a1 = to_double(e.a1());
    const double a3 = to_double(e.a3());
    const ComplexPoint t = ComplexPoint::affine(roots[1], -(a1 * roots[1] + a3) / 2.0);
    const ComplexPoint moved = e.add(p, t);
    if (moved.infinity) {
      z = 0.5 * (lattice.omega1 + lattice.omega2);
    } else {
      z = carlson_log(moved.x, e.eta(moved), roots) - 0.5 * (lattice.omega1 + lattice.omega2);
    }
  } else {
    z = carlson_log(x, e.eta(p), roots);
  }
  return reduce(z / lattice.omega1, lattice.tau);
}

double elliptic_dilog(const ComplexPoint& p, const WeierstrassCurve& e, const PeriodData& lattice) {
  if (p.infinity) return 0.0;
  const cplx u = elliptic_log(p, e, lattice);
  const cplx z = std::exp(cplx(0.0, 2.0 * kPi) * u);
  const double aq = std::abs(lattice.q);
  double sum = bloch_wigner(z);
  // D(q^{-n} z) = -D(q^n / z) folds the negative half of the orbit.
  cplx qn = 1.0;
  const double spread = std::max(std::abs(z), 1.0 / std::abs(z));
  for (int n = 1; n < 10000; ++n) {
    qn *= lattice.q;
    sum += bloch_wigner(qn * z) - bloch_wigner(qn / z);
    if (std::pow(aq, n) * spread * static_cast<double>(n + 1) < 1e-16) break;
  }
  return sum;
}

double elliptic_dilog(const FormalDivisor& d, const WeierstrassCurve& e) {
  const PeriodData lattice = periods(e);
  double sum = 0.0;
  for (const auto& [pt, m] : d.terms()) {
    if (pt.infinity || m == 0) continue;
    sum += static_cast<double>(m) * elliptic_dilog(to_complex(pt), e, lattice);
  }
  return sum;
}

}  // namespace tmahler
