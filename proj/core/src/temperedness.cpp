#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "tmahler/error.hpp"
#include "tmahler/mahler.hpp"

namespace tmahler {

namespace {

using Poly = std::vector<std::int64_t>;  // ascending coefficients

std::int64_t cross(const Exponent& o, const Exponent& a, const Exponent& b) {
  return static_cast<std::int64_t>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<std::int64_t>(a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; collinear points are dropped, output is CCW.
std::vector<Exponent> convex_hull(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Exponent> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; returns false if b does not divide a over Z.
bool divide(const Poly& a, const Poly& b, Poly& q) {
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return false;
  q.assign(r.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const std::int64_t top = r[i + b.size() - 1];
    if (top % b.back() != 0) return false;
    const std::int64_t c = top / b.back();
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  trim(r);
  return r.empty();
}

// Phi_n from t^n - 1 = prod_{d | n} Phi_d.
Poly cyclotomic(int n, const std::vector<Poly>& known) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q;
    divide(p, known[static_cast<std::size_t>(d)], q);
    p = q;
  }
  return p;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// True when p = +-t^k * (product of cyclotomic polynomials).
bool is_cyclotomic_product(const std::vector<cplx>& coeffs) {
  Poly p;
  for (const cplx& c : coeffs) {
    const double r = std::round(c.real());
    if (std::abs(c.imag()) > 1e-12 || std::abs(c.real() - r) > 1e-12 || std::abs(r) > 1e12) {
      return false;
    }
    p.push_back(static_cast<std::int64_t>(r));
  }
  trim(p);
  while (!p.empty() && p.front() == 0) p.erase(p.begin());
  if (p.empty()) return false;
  const int deg = static_cast<int>(p.size()) - 1;
  // phi(n) <= deg forces n <= 2 deg^2 + 2 comfortably.
  const int max_n = std::max(2, 2 * deg * deg + 2);
  std::vector<Poly> phi(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) phi[static_cast<std::size_t>(n)] = cyclotomic(n, phi);
  for (int n = 1; n <= max_n && p.size() > 1; ++n) {
    if (euler_phi(n) > static_cast<int>(p.size()) - 1) continue;
    Poly q;
    while (p.size() > 1 && divide(p, phi[static_cast<std::size_t>(n)], q)) p = q;
  }
  return p.size() == 1 && (p[0] == 1 || p[0] == -1);
}

}  // namespace

TemperednessReport temperedness(const LaurentPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "temperedness of the zero polynomial");
  std::vector<Exponent> support;
  for (const auto& [e, c] : p.terms()) support.push_back(e);

  TemperednessReport report;
  report.vertices = convex_hull(support);
  const std::size_t nv = report.vertices.size();
  if (nv >= 2) {
    // A segment hull is walked both ways; a proper polygon once around.
    const std::size_t nsides = nv == 2 ? 2 : nv;
    for (std::size_t k = 0; k < nsides; ++k) {
      const Exponent from = report.vertices[k];
      const Exponent to = report.vertices[(k + 1) % nv];
      const int dx = to[0] - from[0];
      const int dy = to[1] - from[1];
      const int g = std::gcd(std::abs(dx), std::abs(dy));
      SidePolynomial side;
      side.from = from;
      side.to = to;
      for (int j = 0; j <= g; ++j) {
        side.coefficients.push_back(p.coefficient(from[0] + j * dx / g, from[1] + j * dy / g));
      }
      side.measure = jensen_measure(side.coefficients, 0, 1.0);
      side.cyclotomic = is_cyclotomic_product(side.coefficients);
      report.sides.push_back(std::move(side));
    }
  }
  report.tempered = std::all_of(report.sides.begin(), report.sides.end(), [](const SidePolynomial& s) {
    return s.cyclotomic || std::abs(s.measure) <= 1e-10;
  });
  return report;
}

}  // namespace tmahler
