#include <random>

#include "test_support.hpp"
#include "tmahler/paths.hpp"
#include "tmahler/specfun.hpp"

namespace tmahler {
namespace {

using test::kLprimeE20;
using test::kPi;

constexpr BranchId kSm{Family::S, Sign::Minus};
constexpr BranchId kSp{Family::S, Sign::Plus};
constexpr BranchId kRm{Family::R, Sign::Minus};
constexpr BranchId kRp{Family::R, Sign::Plus};

TEST(Branch, SAtOne) {
  EXPECT_NEAR(std::abs(branch_eval(kSp, 1.0).value), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(branch_eval(kSm, 1.0).value - cplx(-2.0)), 0.0, 1e-15);
  EXPECT_FALSE(branch_eval(kSm, 1.0).on_cut);
}

TEST(Branch, SVieta) {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> th(-kPi, kPi);
  for (int k = 0; k < 100; ++k) {
    const cplx X = std::polar(1.2, th(rng));
    const cplx p = branch_eval(kSp, X).value, m = branch_eval(kSm, X).value;
    EXPECT_LE(std::abs(p * m - (-X * X * X + X)), 1e-12);
    EXPECT_LE(std::abs(p + m + 2.0 * X), 1e-12);
    EXPECT_LE(std::abs(m * m + 2.0 * X * m - X * X * X + X), 1e-12);
  }
}

TEST(Branch, RVieta) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> th(-kPi, kPi);
  for (int k = 0; k < 100; ++k) {
    const cplx x1 = std::polar(0.9, th(rng));
    const cplx x = x1 * x1;
    const cplx p = branch_eval(kRp, x1).value, m = branch_eval(kRm, x1).value;
    EXPECT_LE(std::abs(p * m - x), 1e-12);
    EXPECT_LE(std::abs((p + m) * (x + 1.0) + x * x + 4.0 * x + 1.0), 1e-11);
    const cplx res = (x + 1.0) * m * m + (x * x + 4.0 * x + 1.0) * m + x * x + x;
    EXPECT_LE(std::abs(res), 1e-11);
    EXPECT_LE(std::abs(partial_y(Family::R, x, m) - (2.0 * (x + 1.0) * m + x * x + 4.0 * x + 1.0)), 1e-11);
  }
}

TEST(Branch, CutFlag) {
  // X + 1 - 1/X = -1/2 at X = 1/2.
  const auto v = branch_eval(kSm, 0.5);
  EXPECT_TRUE(v.on_cut);
  EXPECT_NEAR(std::abs(v.value - 0.5 * cplx(-1.0, -std::sqrt(0.5))), 0.0, 1e-14);
}

TEST(Classify, SExamples) {
  auto c = classify_S(1.2);
  EXPECT_NEAR(c.parameter, 1.2 - 1 / 1.2, 1e-15);
  EXPECT_EQ(c.minus_branch, Closure::AlwaysOutside);
  EXPECT_EQ(c.plus_branch, Closure::AlwaysInside);
  EXPECT_TRUE(c.consistent);
  c = classify_S(4.0);
  EXPECT_EQ(c.minus_branch, Closure::AlwaysOutside);
  EXPECT_EQ(c.plus_branch, Closure::AlwaysOutside);
  c = classify_S(2.0);
  EXPECT_EQ(c.plus_branch, Closure::Indeterminate);
  EXPECT_EQ(c.minus_branch, Closure::AlwaysOutside);
  EXPECT_LT(c.plus_sampled.min_ratio, 1.0);
  EXPECT_GT(c.plus_sampled.max_ratio, 1.0);
  EXPECT_TM_ERROR(classify_S(0.0), ErrorCode::InvalidArgument);
}

TEST(Classify, RExamples) {
  auto c = classify_R(1.0);
  EXPECT_EQ(c.minus_branch, Closure::AlwaysOutside);
  EXPECT_EQ(c.plus_branch, Closure::AlwaysInside);
  EXPECT_EQ(classify_R(1.75).minus_branch, Closure::Indeterminate);
  EXPECT_EQ(classify_R(0.5).plus_branch, Closure::Indeterminate);
  EXPECT_NEAR(r_interval().lo, 0.588229835384, 1e-11);
  EXPECT_NEAR(r_interval().hi, 1.700015775887, 1e-11);
}

TEST(Classify, Thresholds) {
  const double g = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(golden_interval().lo, 1 / g, 1e-15);
  EXPECT_NEAR(golden_interval().hi, g, 1e-15);
  EXPECT_NEAR(s_upper_threshold(), (3 + std::sqrt(13.0)) / 2, 1e-15);
  EXPECT_NEAR(s_lower_threshold(), (-3 + std::sqrt(13.0)) / 2, 1e-15);
}

TEST(Classify, BranchModulusOracle) {
  int violations = 0;
  for (int k = 0; k < 1000; ++k) {
    const double a = 0.2 + 4.8 * (k + 0.5) / 1000;
    violations += !classify_S(a).consistent;
    violations += !classify_R(a).consistent;
  }
  EXPECT_EQ(violations, 0);
}

TEST(Classify, ThresholdSharpness) {
  const double th = s_upper_threshold();
  const auto above = classify_S(th + 1e-6);
  EXPECT_GT(above.plus_sampled.min_ratio, 1.0);
  EXPECT_GT(above.minus_sampled.min_ratio, 1.0);
  EXPECT_LT(classify_S(th - 1e-2).plus_sampled.min_ratio, 1.0);
  EXPECT_LT(classify_S(golden_interval().hi + 1e-2).plus_sampled.min_ratio, 1.0);
}

TEST(Winding, S) {
  EXPECT_NEAR(winding(kSm, 1.0), 1.0, 1e-9);
  EXPECT_NEAR(winding(kSm, 1.5), 1.0, 1e-9);
  for (int k = 0; k <= 20; ++k) {
    const auto iv = golden_interval();
    EXPECT_NEAR(winding(kSm, iv.lo + (iv.hi - iv.lo) * k / 20), 1.0, 1e-9);
  }
  // Y+ Y- = -X (X - 1)(X + 1): the zeros at X = +-1 count one half each.
  EXPECT_NEAR(winding(kSp, 1.0), 1.0, 1e-9);
  EXPECT_TM_ERROR(winding(kSp, 2.0), ErrorCode::PathNotClosed);
}

// On the R family the minus branch has a pole at x1 = +-i (x = -1), which lies
// on the path only at a = 1. The tracked increment is 1 below, 0 above, and
// the principal value 1/2 at a = 1.
TEST(Winding, RPrincipalValue) {
  EXPECT_NEAR(winding(kRm, 1.0), 0.5, 1e-9);
  EXPECT_NEAR(winding(kRm, 0.8), 1.0, 1e-9);
  EXPECT_NEAR(winding(kRm, 1.3), 0.0, 1e-9);
  EXPECT_NEAR(winding(kRm, 1.0 + 2e-16), 0.5, 1e-9);
  EXPECT_NEAR(winding(kRm, 1.0 - 1e-13), 0.5, 1e-9);
  EXPECT_TM_ERROR(winding(kRm, 1.75), ErrorCode::PathNotClosed);
}

TEST(Winding, HalfIntegers) {
  for (double a = 0.6; a <= 1.6; a += 0.05) {
    for (const auto& id : {kSm, kRm}) {
      try {
        const double w = winding(id, a);
        EXPECT_NEAR(2 * w, std::round(2 * w), 2e-9) << a;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PathNotClosed);
      }
    }
  }
}

TEST(Eta, Values) {
  EXPECT_NEAR(eta_integral(kSm, 1.0, 1e-10).value, 2 * kLprimeE20, 1e-8);
  EXPECT_NEAR(eta_integral(kRm, 1.0, 1e-10).value, 3 * kLprimeE20, 1e-8);
  const double tol = 1e-8;
  EXPECT_NEAR(eta_integral(kSm, 1.0, tol).value, eta_integral(kSm, 1.4, tol).value, 2 * tol);
  EXPECT_EQ(eta_integral(kSp, 1.0).value, 0.0);
  EXPECT_TM_ERROR(eta_integral(kRm, 0.4), ErrorCode::PathNotClosed);
}

TEST(Period, Reference) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  const cplx want = cplx(0.0, -2.0) * std::sqrt(g) * ellipk(EllipticModulus(cplx(0.0, g)));
  EXPECT_NEAR(std::abs(period_reference() - want), 0.0, 1e-14);
  EXPECT_NEAR(period_reference().imag(), test::kPeriodIm, 1e-13);
}

TEST(Period, AtOne) {
  EXPECT_LE(std::abs(period_integral(kSm, 1.0).value - period_reference()), 1e-8);
  EXPECT_LE(std::abs(period_integral(kRm, 1.0).value - period_reference()), 1e-8);
}

TEST(Period, ConstantAndImaginary) {
  for (const auto& [id, iv] : {std::pair{kSm, golden_interval()}, {kRm, r_interval()}}) {
    for (int k = 0; k <= 4; ++k) {
      const double a = iv.lo + (iv.hi - iv.lo) * k / 4;
      const cplx v = period_integral(id, a).value;
      EXPECT_LE(std::abs(v.real()), 1e-8) << a;
      EXPECT_NEAR(v.imag(), period_reference().imag(), 1e-8) << a;
    }
  }
}

TEST(Period, Errors) {
  EXPECT_TM_ERROR(period_integral(kSm, 2.0), ErrorCode::PathNotClosed);
  EXPECT_TM_ERROR(period_integral(kRm, 0.5), ErrorCode::PathNotClosed);
  EXPECT_TM_ERROR(period_integral(kSp, 1.0), ErrorCode::InvalidArgument);
}

TEST(Period, SmallArcScaling) {
  const double big = std::abs(small_arc_integral(1e-2));
  const double small = std::abs(small_arc_integral(1e-4));
  EXPECT_NEAR(big / small, 10.0, 0.05);
  EXPECT_TM_ERROR(small_arc_integral(0.0), ErrorCode::InvalidArgument);
}

TEST(Phi, RoundTrip) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> n;
  for (int k = 0; k < 100; ++k) {
    const ComplexPoint p = ComplexPoint::affine({n(rng), n(rng)}, {n(rng), n(rng)});
    const ComplexPoint back = phi_inverse(phi_map(p));
    EXPECT_LE(std::abs(back.x - p.x) + std::abs(back.y - p.y), 1e-10);
  }
}

TEST(Phi, MapsCurveToCurve) {
  const auto e = WeierstrassCurve::e20();
  for (double t = -kPi + 0.05; t < kPi; t += 0.3) {
    const cplx x1 = std::polar(1.1, t);
    for (const auto& id : {kRm, kRp}) {
      const ComplexPoint p = ComplexPoint::affine(x1 * x1, branch_eval(id, x1).value);
      EXPECT_LE(std::abs(e.residual(phi_map(p))), 1e-10);
    }
  }
  // R(0, y) = y^2 + y.
  const RationalPoint r = RationalPoint::affine(Rational(0), Rational(-1));
  EXPECT_EQ(e.residual(phi_map(r)), Rational(0));
}

TEST(Phi, Exceptional) {
  EXPECT_TM_ERROR(phi_map(ComplexPoint::affine(-1.0, -1.0)), ErrorCode::ExceptionalPoint);
  EXPECT_TM_ERROR(phi_inverse(RationalPoint::affine(Rational(-1), Rational(0))), ErrorCode::ExceptionalPoint);
  EXPECT_TM_ERROR(phi_map(RationalPoint::at_infinity()), ErrorCode::ExceptionalPoint);
}

}  // namespace
}  // namespace tmahler
