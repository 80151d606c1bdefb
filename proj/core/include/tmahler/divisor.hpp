#pragma once

#include <functional>
#include <map>
#include <string>

#include "tmahler/curve.hpp"

namespace tmahler {

// Integer formal sum of rational points. As built it is an ordinary divisor;
// minus_part() passes to Z[E]^- = Z[E] / ((P) + (-P)).
class FormalDivisor {
 public:
  FormalDivisor() = default;
  static FormalDivisor point(const RationalPoint& p, long m = 1);

  const std::map<RationalPoint, long>& terms() const { return terms_; }
  long coefficient(const RationalPoint& p) const;
  long degree() const;
  bool empty() const { return terms_.empty(); }

  FormalDivisor& add(const RationalPoint& p, long m);
  FormalDivisor& operator+=(const FormalDivisor& other);
  FormalDivisor& operator-=(const FormalDivisor& other);
  FormalDivisor& operator*=(long k);

  // Canonical Z[E]^- form: each pair {P, -P} is carried by the point with
  // 2y + a1 x + a3 > 0; points with P = -P (O and 2-torsion) keep their
  // coefficient mod 2.
  FormalDivisor minus_part(const WeierstrassCurve& e) const;

  std::string to_string() const;

  friend bool operator==(const FormalDivisor&, const FormalDivisor&) = default;

 private:
  std::map<RationalPoint, long> terms_;
};

FormalDivisor operator+(FormalDivisor a, const FormalDivisor& b);
FormalDivisor operator-(FormalDivisor a, const FormalDivisor& b);
FormalDivisor operator*(long k, FormalDivisor a);

// (f) for f = l x + m y + n, found exactly from the rational intersection
// points. Throws InvalidArgument if an intersection point is not rational.
FormalDivisor divisor_of_line(const WeierstrassCurve& e, const Rational& l, const Rational& m,
                              const Rational& n);

// (f) <> (g) = sum m_i n_j (S_i - T_j) in canonical Z[E]^- form.
// Throws DegreeNonZero unless both inputs have degree zero.
FormalDivisor diamond(const FormalDivisor& f, const FormalDivisor& g, const WeierstrassCurve& e);

// Numerical order of vanishing of f at P along the curve (negative for poles),
// from the slope of log|f| against log|t| for a local parameter t.
using CurveFunction = std::function<cplx(cplx x, cplx y)>;
int order_at(const CurveFunction& f, const RationalPoint& p, const WeierstrassCurve& e);

}  // namespace tmahler
