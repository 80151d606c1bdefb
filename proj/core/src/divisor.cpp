#include "tmahler/divisor.hpp"

#include <cmath>
#include <sstream>

#include "tmahler/roots.hpp"

namespace tmahler {

namespace {

using boost::multiprecision::cpp_int;

bool rational_sqrt(const Rational& v, Rational& out) {
  if (v < 0) return false;
  const cpp_int num = boost::multiprecision::numerator(v);
  const cpp_int den = boost::multiprecision::denominator(v);
  const cpp_int sn = boost::multiprecision::sqrt(num);
  const cpp_int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  out = Rational(sn, sd);
  return true;
}

// Rational roots with multiplicity of x^3 - A x^2 - B x - C.
std::vector<Rational> rational_roots_monic_cubic(const Rational& A, const Rational& B, const Rational& C) {
  // x = X / D turns it into X^3 - (A D) X^2 - (B D^2) X - C D^3 over Z.
  cpp_int d = boost::multiprecision::lcm(boost::multiprecision::lcm(boost::multiprecision::denominator(A), boost::multiprecision::denominator(B)),
                  boost::multiprecision::denominator(C));
  const Rational dr(d);
  const Rational c0 = C * dr * dr * dr;
  const Rational c1 = B * dr * dr;
  const Rational c2 = A * dr;
  std::vector<cpp_int> c = {-boost::multiprecision::numerator(c0), -boost::multiprecision::numerator(c1),
                            -boost::multiprecision::numerator(c2), 1};
  std::vector<Rational> roots;
  auto deflate = [&](const cpp_int& r) {
    // Synthetic division by (X - r).
    std::vector<cpp_int> q(c.size() - 1);
    cpp_int carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * r;
      q[i - 1] = carry;
    }
    c = q;
  };
  auto value = [&](const cpp_int& r) {
    cpp_int s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * r + c[i];
    return s;
  };
  while (c.size() > 1 && c[0] == 0) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  while (c.size() > 1) {
    const cpp_int c0 = boost::multiprecision::abs(c[0]);
    bool found = false;
    for (cpp_int k = 1; k * k <= c0 && !found; ++k) {
      if (c0 % k != 0) continue;
      for (const cpp_int& cand : {k, cpp_int(-k), cpp_int(c0 / k), cpp_int(-(c0 / k))}) {
        if (value(cand) == 0) {
          roots.emplace_back(cand, d);
          deflate(cand);
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  return roots;
}

}  // namespace

FormalDivisor FormalDivisor::point(const RationalPoint& p, long m) {
  FormalDivisor d;
  d.add(p, m);
  return d;
}

long FormalDivisor::coefficient(const RationalPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

long FormalDivisor::degree() const {
  long s = 0;
  for (const auto& [p, m] : terms_) s += m;
  return s;
}

FormalDivisor& FormalDivisor::add(const RationalPoint& p, long m) {
  if (m == 0) return *this;
  long& slot = terms_[p];
  slot += m;
  if (slot == 0) terms_.erase(p);
  return *this;
}

FormalDivisor& FormalDivisor::operator+=(const FormalDivisor& other) {
  for (const auto& [p, m] : other.terms_) add(p, m);
  return *this;
}

FormalDivisor& FormalDivisor::operator-=(const FormalDivisor& other) {
  for (const auto& [p, m] : other.terms_) add(p, -m);
  return *this;
}

FormalDivisor& FormalDivisor::operator*=(long k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, m] : terms_) m *= k;
  return *this;
}

FormalDivisor FormalDivisor::minus_part(const WeierstrassCurve& e) const {
  FormalDivisor out;
  for (const auto& [p, m] : terms_) {
    if (p.infinity) {
      out.add(p, m);
      continue;
    }
    const Rational eta = e.eta(p);
    if (eta < 0) out.add(e.negate(p), -m);
    else out.add(p, m);
  }
  FormalDivisor reduced;
  for (const auto& [p, m] : out.terms_) {
    const bool self_inverse = p.infinity || e.eta(p) == 0;
    reduced.add(p, self_inverse ? ((m % 2) + 2) % 2 : m);
  }
  return reduced;
}

std::string FormalDivisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : terms_) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    first = false;
    const long a = m < 0 ? -m : m;
    if (a != 1) os << a;
    os << tmahler::to_string(p);
  }
  return os.str();
}

FormalDivisor operator+(FormalDivisor a, const FormalDivisor& b) { return a += b; }
FormalDivisor operator-(FormalDivisor a, const FormalDivisor& b) { return a -= b; }
FormalDivisor operator*(long k, FormalDivisor a) { return a *= k; }

FormalDivisor divisor_of_line(const WeierstrassCurve& e, const Rational& l, const Rational& m,
                              const Rational& n) {
  FormalDivisor d;
  const RationalPoint origin = RationalPoint::at_infinity();
  if (m != 0) {
    const Rational alpha = -l / m;
    const Rational beta = -n / m;
    const Rational A = alpha * alpha + e.a1() * alpha - e.a2();
    const Rational B = 2 * alpha * beta + e.a1() * beta + e.a3() * alpha - e.a4();
    const Rational C = beta * beta + e.a3() * beta - e.a6();
    const std::vector<Rational> xs = rational_roots_monic_cubic(A, B, C);
    if (xs.size() != 3) {
      throw Error(ErrorCode::InvalidArgument, "line meets the curve in non-rational points");
    }
    for (const Rational& x : xs) d.add(RationalPoint::affine(x, alpha * x + beta), 1);
    d.add(origin, -3);
    return d;
  }
  if (l != 0) {
    const Rational x = -n / l;
    const Rational lin = e.a1() * x + e.a3();
    const Rational f = x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
    Rational s;
    if (!rational_sqrt(lin * lin + 4 * f, s)) {
      throw Error(ErrorCode::InvalidArgument, "vertical line meets the curve in non-rational points");
    }
    d.add(RationalPoint::affine(x, (-lin + s) / 2), 1);
    d.add(RationalPoint::affine(x, (-lin - s) / 2), 1);
    d.add(origin, -2);
    return d;
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "the zero function has no divisor");
  return d;
}

FormalDivisor diamond(const FormalDivisor& f, const FormalDivisor& g, const WeierstrassCurve& e) {
  if (f.degree() != 0 || g.degree() != 0) {
    throw Error(ErrorCode::DegreeNonZero, "diamond is defined on degree-zero divisors");
  }
  FormalDivisor out;
  for (const auto& [s, m] : f.terms()) {
    for (const auto& [t, n] : g.terms()) out.add(e.add(s, e.negate(t)), m * n);
  }
  return out.minus_part(e);
}

int order_at(const CurveFunction& f, const RationalPoint& p, const WeierstrassCurve& e) {
  const cplx a1 = e.coeff<cplx>(0);
  const cplx a2 = e.coeff<cplx>(1);
  const cplx a3 = e.coeff<cplx>(2);
  const cplx a4 = e.coeff<cplx>(3);
  const cplx a6 = e.coeff<cplx>(4);
  const ComplexPoint base = to_complex(p);

  // A curve point at local-parameter distance t from p, and |t| itself.
  auto nearby = [&](double scale) -> std::pair<ComplexPoint, double> {
    const cplx t = std::polar(scale, 0.3);
    if (p.infinity) {
      const cplx x = 1.0 / (t * t);
      const std::vector<cplx> ys = polynomial_roots({-(x * x * x + a2 * x * x + a4 * x + a6), a1 * x + a3, 1.0});
      const cplx y = std::abs(ys[0]) > std::abs(ys[1]) ? ys[0] : ys[1];
      return {ComplexPoint::affine(x, y), std::abs(x / y)};
    }
    if (e.eta(p) != 0) {
      const cplx x = base.x + t;
      const std::vector<cplx> ys = polynomial_roots({-(x * x * x + a2 * x * x + a4 * x + a6), a1 * x + a3, 1.0});
      const cplx y = std::abs(ys[0] - base.y) < std::abs(ys[1] - base.y) ? ys[0] : ys[1];
      return {ComplexPoint::affine(x, y), scale};
    }
    const cplx y = base.y + t;
    const std::vector<cplx> xs = polynomial_roots({a6 - y * y - a3 * y, a4 - a1 * y, a2, 1.0});
    cplx x = xs[0];
    for (const cplx& c : xs) {
      if (std::abs(c - base.x) < std::abs(x - base.x)) x = c;
    }
    return {ComplexPoint::affine(x, y), scale};
  };
  const auto [p1, t1] = nearby(1e-3);
  const auto [p2, t2] = nearby(1e-5);
  const double slope = (std::log(std::abs(f(p1.x, p1.y))) - std::log(std::abs(f(p2.x, p2.y)))) /
                       (std::log(t1) - std::log(t2));
  return static_cast<int>(std::lround(slope));
}

}  // namespace tmahler
