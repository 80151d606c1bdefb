#pragma once

// Elliptic curves in long Weierstrass form
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with rational coefficients. The group law is generic over the coordinate
// field: exact rationals or complex doubles.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tmahler/error.hpp"

namespace tmahler {

using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

template <class F>
struct Point {
  bool infinity = true;
  F x{};
  F y{};

  static Point at_infinity() { return Point{}; }
  static Point affine(F px, F py) { return Point{false, std::move(px), std::move(py)}; }

  friend bool operator==(const Point&, const Point&) = default;
};

using RationalPoint = Point<Rational>;
using ComplexPoint = Point<cplx>;

// Total order for exact points so they can key a map: O first, then (x, y).
bool operator<(const RationalPoint& p, const RationalPoint& q);

std::string to_string(const RationalPoint& p);
ComplexPoint to_complex(const RationalPoint& p);

class WeierstrassCurve {
 public:
  // conductor 0 means "not declared"; L-series routines then refuse the curve.
  // bad_ap overrides a_p at primes dividing the conductor.
  WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
                   std::int64_t conductor = 0, std::map<std::int64_t, int> bad_ap = {});

  // Y^2 + 2XY = X^3 - X: conductor 20, a_2 = 0, a_5 = -1.
  static WeierstrassCurve e20();
  // E_alpha: Y^2 + 2XY = X^3 + (alpha^2/4 - alpha - 3) X^2 + (alpha + 1) X.
  static WeierstrassCurve e_alpha(const Rational& alpha);

  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  Rational b2() const;
  Rational b4() const;
  Rational b6() const;
  Rational b8() const;
  const Rational& discriminant() const { return disc_; }
  std::int64_t conductor() const { return conductor_; }
  const std::map<std::int64_t, int>& bad_ap_overrides() const { return bad_ap_; }

  template <class F>
  F coeff(int i) const;

  // Residual of the curve equation; zero exactly on the curve.
  template <class F>
  F residual(const Point<F>& p) const;
  bool contains(const RationalPoint& p) const;
  bool contains(const ComplexPoint& p, double tol = 1e-10) const;

  // 2y + a1 x + a3, the denominator of the invariant differential.
  template <class F>
  F eta(const Point<F>& p) const {
    return F(2) * p.y + coeff<F>(0) * p.x + coeff<F>(2);
  }

  template <class F>
  Point<F> negate(const Point<F>& p) const;
  // Chord and tangent law. Throws PointNotOnCurve for points off the curve.
  template <class F>
  Point<F> add(const Point<F>& p, const Point<F>& q) const;
  template <class F>
  Point<F> multiply(const Point<F>& p, std::int64_t n) const;
  // Smallest n in [1, max_order] with nP = O.
  std::optional<int> order(const RationalPoint& p, int max_order = 64) const;

  // a_p = p + 1 - #E(F_p) for a prime p of good reduction; throws BadReduction
  // when p divides the conductor (or the discriminant).
  int ap(std::int64_t p) const;
  // a_p at a bad prime: the configured override if present, otherwise the
  // point count of the reduced singular cubic, which gives 0 / +1 / -1 for a
  // model minimal at p.
  int bad_ap(std::int64_t p) const;

 private:
  std::int64_t count_points(std::int64_t p) const;

  Rational a_[5];
  Rational disc_;
  std::int64_t conductor_;
  std::map<std::int64_t, int> bad_ap_;
};

std::vector<std::int64_t> prime_factors(std::int64_t n);
bool is_prime(std::int64_t n);

// ---- templates -------------------------------------------------------------

namespace detail {
template <class F>
F from_rational(const Rational& r) {
  if constexpr (std::is_same_v<F, Rational>) {
    return r;
  } else {
    return F(static_cast<double>(r));
  }
}
inline bool same(const Rational& a, const Rational& b) { return a == b; }
inline bool same(const cplx& a, const cplx& b) {
  return std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a) + std::abs(b));
}
}  // namespace detail

template <class F>
F WeierstrassCurve::coeff(int i) const {
  return detail::from_rational<F>(a_[i]);
}

template <class F>
F WeierstrassCurve::residual(const Point<F>& p) const {
  if (p.infinity) return F(0);
  const F& x = p.x;
  const F& y = p.y;
  return y * y + coeff<F>(0) * x * y + coeff<F>(2) * y -
         (x * x * x + coeff<F>(1) * x * x + coeff<F>(3) * x + coeff<F>(4));
}

template <class F>
Point<F> WeierstrassCurve::negate(const Point<F>& p) const {
  if (p.infinity) return p;
  return Point<F>::affine(p.x, -p.y - coeff<F>(0) * p.x - coeff<F>(2));
}

template <class F>
Point<F> WeierstrassCurve::add(const Point<F>& p, const Point<F>& q) const {
  if (!contains(p) || !contains(q)) throw Error(ErrorCode::PointNotOnCurve, "point is not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  const F a1 = coeff<F>(0);
  const F a2 = coeff<F>(1);
  const F a3 = coeff<F>(2);
  const F a4 = coeff<F>(3);
  const F a6 = coeff<F>(4);
  F lambda;
  F nu;
  if (detail::same(p.x, q.x)) {
    if (detail::same(p.y, -q.y - a1 * q.x - a3) || !detail::same(p.y, q.y)) {
      return Point<F>::at_infinity();
    }
    const F denom = F(2) * p.y + a1 * p.x + a3;
    lambda = (F(3) * p.x * p.x + F(2) * a2 * p.x + a4 - a1 * p.y) / denom;
    nu = (-p.x * p.x * p.x + a4 * p.x + F(2) * a6 - a3 * p.y) / denom;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  }
  const F x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  const F y3 = -(lambda + a1) * x3 - nu - a3;
  return Point<F>::affine(x3, y3);
}

template <class F>
Point<F> WeierstrassCurve::multiply(const Point<F>& p, std::int64_t n) const {
  Point<F> base = n < 0 ? negate(p) : p;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Point<F> acc = Point<F>::at_infinity();
  while (k > 0) {
    if (k & 1U) acc = add(acc, base);
    k >>= 1U;
    if (k > 0) base = add(base, base);
  }
  return acc;
}

}  // namespace tmahler
