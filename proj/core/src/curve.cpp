#include "tmahler/curve.hpp"

#include <cmath>
#include <sstream>

namespace tmahler {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t mod(const cpp_int& v, std::int64_t p) {
  cpp_int r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t result = 1;
  std::int64_t base = b % m;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

// r mod p for a rational whose denominator is prime to p.
std::int64_t reduce(const Rational& r, std::int64_t p) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const std::int64_t d = mod(den, p);
  if (d == 0) {
    throw Error(ErrorCode::BadReduction, "model is not integral at p = " + std::to_string(p));
  }
  return static_cast<std::int64_t>(static_cast<std::int64_t>(mod(num, p)) * inverse_mod(d, p) % p);
}

}  // namespace

bool operator<(const RationalPoint& p, const RationalPoint& q) {
  if (p.infinity != q.infinity) return p.infinity;
  if (p.infinity) return false;
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

std::string to_string(const RationalPoint& p) {
  if (p.infinity) return "O";
  std::ostringstream os;
  os << "(" << p.x << "," << p.y << ")";
  return os.str();
}

ComplexPoint to_complex(const RationalPoint& p) {
  if (p.infinity) return ComplexPoint::at_infinity();
  return ComplexPoint::affine(cplx(static_cast<double>(p.x), 0.0), cplx(static_cast<double>(p.y), 0.0));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

WeierstrassCurve::WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
                                   std::int64_t conductor, std::map<std::int64_t, int> bad_ap)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      conductor_(conductor),
      bad_ap_(std::move(bad_ap)) {
  const Rational b2v = b2();
  const Rational b4v = b4();
  const Rational b6v = b6();
  const Rational b8v = b8();
  disc_ = -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
  if (disc_ == 0) throw Error(ErrorCode::InvalidArgument, "singular curve: discriminant is zero");
  if (conductor_ < 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  if (conductor_ > 0) {
    const cpp_int num = boost::multiprecision::numerator(disc_);
    for (std::int64_t p : prime_factors(conductor_)) {
      if (num % p != 0) {
        throw Error(ErrorCode::InvalidArgument, "conductor prime " + std::to_string(p) +
                                                    " does not divide the discriminant");
      }
    }
  }
  for (const auto& [p, v] : bad_ap_) {
    if (conductor_ == 0 || conductor_ % p != 0) {
      throw Error(ErrorCode::InvalidArgument, "a_p override at a prime not dividing the conductor");
    }
    if (v < -1 || v > 1) throw Error(ErrorCode::InvalidArgument, "bad a_p must be 0 or +-1");
  }
}

WeierstrassCurve WeierstrassCurve::e20() { return {2, 0, 0, -1, 0, 20, {{2, 0}, {5, -1}}}; }

WeierstrassCurve WeierstrassCurve::e_alpha(const Rational& alpha) {
  return {2, alpha * alpha / 4 - alpha - 3, 0, alpha + 1, 0};
}

Rational WeierstrassCurve::b2() const { return a1() * a1() + 4 * a2(); }
Rational WeierstrassCurve::b4() const { return 2 * a4() + a1() * a3(); }
Rational WeierstrassCurve::b6() const { return a3() * a3() + 4 * a6(); }
Rational WeierstrassCurve::b8() const {
  return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}

bool WeierstrassCurve::contains(const RationalPoint& p) const { return residual(p) == 0; }

bool WeierstrassCurve::contains(const ComplexPoint& p, double tol) const {
  if (p.infinity) return true;
  const double scale = 1.0 + std::pow(std::abs(p.x), 3) + std::norm(p.y);
  return std::abs(residual(p)) <= tol * scale;
}

std::optional<int> WeierstrassCurve::order(const RationalPoint& p, int max_order) const {
  RationalPoint acc = p;
  for (int n = 1; n <= max_order; ++n) {
    if (acc.infinity) return n;
    acc = add(acc, p);
  }
  return std::nullopt;
}

std::int64_t WeierstrassCurve::count_points(std::int64_t p) const {
  const std::int64_t a1 = reduce(a_[0], p);
  const std::int64_t a2 = reduce(a_[1], p);
  const std::int64_t a3 = reduce(a_[2], p);
  const std::int64_t a4 = reduce(a_[3], p);
  const std::int64_t a6 = reduce(a_[4], p);
  std::int64_t count = 1;  // O
  if (p == 2) {
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        const std::int64_t lhs = y * y + a1 * x * y + a3 * y;
        const std::int64_t rhs = x * x * x + a2 * x * x + a4 * x + a6;
        if ((lhs - rhs) % 2 == 0) ++count;
      }
    }
    return count;
  }
  // y^2 + (a1 x + a3) y - f(x) = 0 has 1 + chi(disc) roots, disc = (a1 x + a3)^2 + 4 f(x).
  const bool table = p <= 50'000'000;
  std::vector<signed char> chi;
  if (table) {
    chi.assign(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y <= p / 2; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
  }
  // disc(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 is stepped by forward differences,
  // which keeps the loop free of divisions.
  auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto disc = [&](std::int64_t x) {
    const std::int64_t lin = mod(a1 * x + a3);
    const std::int64_t f = mod(mod(mod(mod(x + a2) * x + a4) * x) + a6);
    return mod(lin * lin + 4 * f);
  };
  const std::int64_t d0 = disc(0), d1 = disc(1), d2 = disc(2), d3 = disc(3);
  std::int64_t d = d0;
  std::int64_t s1 = mod(d1 - d0);
  std::int64_t s2 = mod(d2 - 2 * d1 + d0);
  const std::int64_t s3 = mod(d3 - 3 * d2 + 3 * d1 - d0);
  auto add = [p](std::int64_t& v, std::int64_t w) {
    v += w;
    if (v >= p) v -= p;
  };
  for (std::int64_t x = 0; x < p; ++x) {
    int c;
    if (table) {
      c = chi[static_cast<std::size_t>(d)];
    } else if (d == 0) {
      c = 0;
    } else {
      c = pow_mod(d, (p - 1) / 2, p) == 1 ? 1 : -1;
    }
    count += 1 + c;
    add(d, s1);
    add(s1, s2);
    add(s2, s3);
  }
  return count;
}

int WeierstrassCurve::ap(std::int64_t p) const {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) throw Error(ErrorCode::InvalidArgument, "p must be below 2^31");
  const bool divides_conductor = conductor_ > 0 && conductor_ % p == 0;
  const bool divides_disc = boost::multiprecision::numerator(disc_) % p == 0 &&
                            boost::multiprecision::denominator(disc_) % p != 0;
  if (divides_conductor || (conductor_ == 0 && divides_disc)) {
    throw Error(ErrorCode::BadReduction, "p = " + std::to_string(p) + " is a prime of bad reduction");
  }
  return static_cast<int>(p + 1 - count_points(p));
}

int WeierstrassCurve::bad_ap(std::int64_t p) const {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  auto it = bad_ap_.find(p);
  if (it != bad_ap_.end()) return it->second;
  return static_cast<int>(p + 1 - count_points(p));
}

}  // namespace tmahler
