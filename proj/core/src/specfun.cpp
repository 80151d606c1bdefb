#include "tmahler/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tmahler/error.hpp"

namespace tmahler {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

// B_{2k} / (2k+1)!, k = 1..15.
constexpr std::array<double, 15> kDilogCoeff = {
    2.77777777777777777778e-2,  -2.77777777777777777778e-4, 4.72411186696900982615e-6,
    -9.18577307466196355085e-8, 1.8978869988970999072e-9,   -4.06476164514422552681e-11,
    8.92169102045645255522e-13, -1.99392958607210756872e-14, 4.51898002961991819165e-16,
    -1.03565176121812470145e-17, 2.39521862102618674574e-19, -5.58178587432500933628e-21,
    1.30915075541832128581e-22, -3.08741980242674029324e-24, 7.31597565270220342036e-26};

// Li_2 for |z| <= 1, Re z <= 1/2, where |log(1 - z)| < 1.1.
cplx dilog_core(cplx z) {
  const cplx u = -std::log(1.0 - z);
  const cplx u2 = u * u;
  cplx sum = u - 0.25 * u2;
  cplx power = u;
  for (double c : kDilogCoeff) {
    power *= u2;
    const cplx term = c * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

cplx dilog_mapped(cplx z) {
  if (std::abs(z) > 1.0) {
    // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2.
    const cplx l = std::log(-z);
    return -dilog_mapped(1.0 / z) - kZeta2 - 0.5 * l * l;
  }
  if (z.real() > 0.5) {
    // Reflection: Li2(z) = -Li2(1 - z) + pi^2/6 - log z log(1 - z).
    return -dilog_core(1.0 - z) + kZeta2 - std::log(z) * std::log(1.0 - z);
  }
  return dilog_core(z);
}

// Euler-Maclaurin weights B_{2j} / (2j)!, j = 1..10.
constexpr std::array<double, 10> kEulerMaclaurin = {
    1.0 / 12.0,           -1.0 / 720.0,          1.0 / 30240.0,
    -1.0 / 1209600.0,     1.0 / 47900160.0,      -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,  -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0, -174611.0 / 802857662698291200000.0};

}  // namespace

cplx dilog(cplx z) {
  if (z == cplx(0.0, 0.0)) return 0.0;
  if (z == cplx(1.0, 0.0)) return kZeta2;
  if (z.imag() == 0.0 && z.real() > 1.0) {
    // On the cut take the limit from below, so Im Li2(x) = -pi log x.
    const double x = z.real();
    const double re = kZeta2 + kZeta2 - 0.5 * std::log(x) * std::log(x) -
                      dilog_mapped(cplx(1.0 / x, 0.0)).real();
    return {re, -kPi * std::log(x)};
  }
  return dilog_mapped(z);
}

double bloch_wigner(cplx z) {
  if (z.imag() == 0.0) return 0.0;
  return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

EllipticModulus::EllipticModulus(cplx k) : k_(k) {
  const cplx k2 = k * k;
  if (std::abs(k2 - 1.0) <= 1e-15) {
    throw Error(ErrorCode::DivergentModulus, "elliptic modulus with k^2 = 1");
  }
}

cplx agm(cplx a, cplx b) {
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    const cplx mean = 0.5 * (a + b);
    cplx geo = std::sqrt(a * b);
    if (std::abs(mean - geo) > std::abs(mean + geo)) geo = -geo;
    a = mean;
    b = geo;
  }
  return 0.5 * (a + b);
}

cplx ellipk(const EllipticModulus& modulus) {
  const cplx k = modulus.k();
  if (k.real() == 0.0 && k.imag() != 0.0) {
    // Imaginary modulus k = i m: K(i m) = K(m / sqrt(1 + m^2)) / sqrt(1 + m^2).
    const double m = k.imag();
    const double s = std::sqrt(1.0 + m * m);
    return ellipk(EllipticModulus(cplx(std::abs(m) / s, 0.0))) / s;
  }
  const cplx k2 = k * k;
  if (k2.imag() == 0.0 && k2.real() >= 1.0) {
    throw Error(ErrorCode::DivergentModulus, "K(k) requires k^2 outside [1, inf)");
  }
  const cplx kp = std::sqrt(1.0 - k2);
  return kPi / (2.0 * agm(1.0, kp));
}

cplx carlson_rf(cplx x, cplx y, cplx z) {
  constexpr double kErrTol = 1.5e-3;
  cplx a = (x + y + z) / 3.0;
  for (int i = 0; i < 200; ++i) {
    const double dx = std::abs(1.0 - x / a);
    const double dy = std::abs(1.0 - y / a);
    const double dz = std::abs(1.0 - z / a);
    if (std::max({dx, dy, dz}) < kErrTol) break;
    const cplx sx = std::sqrt(x);
    const cplx sy = std::sqrt(y);
    const cplx sz = std::sqrt(z);
    const cplx lambda = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = (x + y + z) / 3.0;
  }
  const cplx X = 1.0 - x / a;
  const cplx Y = 1.0 - y / a;
  const cplx Z = -(X + Y);
  const cplx e2 = X * Y - Z * Z;
  const cplx e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

cplx ellipf(double phi, const EllipticModulus& modulus) {
  const cplx k = modulus.k();
  const cplx k2 = k * k;
  if (phi == 0.0) return 0.0;
  // Shift phi into [-pi/2, pi/2]; each half turn adds 2K.
  const double n = std::round(phi / kPi);
  const double psi = phi - n * kPi;
  if (k2.imag() == 0.0 && k2.real() >= 1.0) {
    const double reach = std::abs(n) > 0 ? 1.0 : std::sin(std::abs(psi));
    if (k2.real() * reach * reach >= 1.0) {
      throw Error(ErrorCode::DivergentModulus, "1 - k^2 sin^2 vanishes on [0, phi]");
    }
  }
  const double s = std::sin(psi);
  const double c = std::cos(psi);
  cplx value = s * carlson_rf(c * c, 1.0 - k2 * s * s, 1.0);
  if (n != 0.0) value += 2.0 * n * ellipk(modulus);
  return value;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "hurwitz_zeta requires s > 1 and a > 0");
  }
  constexpr int kN = 20;
  double sum = 0.0;
  for (int k = 0; k < kN; ++k) sum += std::pow(a + k, -s);
  const double x = a + kN;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // Rising factorial s (s+1) ... (s+2j-2) times x^{-s-2j+1}.
  double rising = s;
  double xp = std::pow(x, -s - 1.0);
  for (std::size_t j = 0; j < kEulerMaclaurin.size(); ++j) {
    sum += kEulerMaclaurin[j] * rising * xp;
    const double m = 2.0 * static_cast<double>(j) + 1.0;
    rising *= (s + m) * (s + m + 1.0);
    xp /= x * x;
  }
  return sum;
}

Chi3Values chi3_values() {
  const double l2 = (hurwitz_zeta(2.0, 1.0 / 3.0) - hurwitz_zeta(2.0, 2.0 / 3.0)) / 9.0;
  return {l2, 3.0 * std::sqrt(3.0) / (4.0 * kPi) * l2};
}

}  // namespace tmahler
