#include "tmahler/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tmahler/error.hpp"

namespace tmahler {

namespace {

using cplx = std::complex<double>;

void horner(const std::vector<cplx>& c, cplx z, cplx& p, cplx& dp) {
  p = c.back();
  dp = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

double abs_horner(const std::vector<cplx>& c, double r) {
  double s = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * r + std::abs(c[i]);
  return s;
}

std::vector<cplx> aberth(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  // Start on a circle of radius |c0/cn|^(1/n), rotated off the axes.
  const double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n));
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < 800; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      cplx p;
      cplx dp;
      horner(c, z[k], p, dp);
      const double scale = abs_horner(c, std::abs(z[k]));
      if (std::abs(p) <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
        done[k] = true;
        continue;
      }
      cplx repulse = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulse += 1.0 / (z[k] - z[j]);
      }
      const cplx ratio = p / dp;
      const cplx step = ratio / (1.0 - ratio * repulse);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        z[k] += std::polar(1e-8 * std::max(1.0, std::abs(z[k])), 0.7 * static_cast<double>(k + 1));
        all_done = false;
        continue;
      }
      z[k] -= step;
      if (std::abs(step) <= 1e-15 * std::max(std::abs(z[k]), 1e-300)) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return z;
  }
  // Multiple roots converge slowly; accept what passes the residual check.
  return z;
}

}  // namespace

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
  std::vector<cplx> c = coeffs;
  while (!c.empty() && c.back() == cplx(0.0, 0.0)) c.pop_back();
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no roots");

  std::vector<cplx> roots;
  std::size_t low = 0;
  while (c[low] == cplx(0.0, 0.0)) ++low;
  roots.assign(low, cplx(0.0, 0.0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  const std::size_t n = c.size() - 1;

  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  if (n == 2) {
    const cplx a = c[2];
    const cplx b = c[1];
    cplx s = std::sqrt(b * b - 4.0 * a * c[0]);
    if ((std::conj(b) * s).real() < 0.0) s = -s;
    const cplx q = -0.5 * (b + s);
    roots.push_back(q / a);
    roots.push_back(c[0] / q);
    return roots;
  }
  if (n == 0) return roots;

  std::vector<cplx> found = aberth(c);
  for (const cplx& r : found) {
    cplx p;
    cplx dp;
    horner(c, r, p, dp);
    const double scale = abs_horner(c, std::abs(r));
    if (!std::isfinite(std::abs(r)) || std::abs(p) > 1e-9 * scale) {
      throw Error(ErrorCode::RootFindingFailure,
                  "root iteration did not converge for a degree " + std::to_string(n) +
                      " polynomial");
    }
    roots.push_back(r);
  }
  return roots;
}

}  // namespace tmahler
