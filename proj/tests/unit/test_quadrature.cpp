#include <complex>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "test_support.hpp"
#include "tmahler/quadrature.hpp"

namespace tmahler {
namespace {

using test::kPi;
using cplx = std::complex<double>;

TEST(Quadrature, Constant) {
  const auto r = integrate_adaptive([](double) { return 1.0; }, 0.0, 2 * kPi, {}, 1e-12);
  EXPECT_NEAR(r.value, 2 * kPi, 1e-13);
  EXPECT_GE(r.abs_error, 0.0);
  EXPECT_GE(r.evaluations, 1u);
}

TEST(Quadrature, LogEndpoint) {
  const auto r = integrate_adaptive([](double t) { return std::log(t); }, 0.0, 1.0,
                                    SingularitySpec::logarithmic({0.0}), 1e-12);
  EXPECT_NEAR(r.value, -1.0, 1e-11);
  EXPECT_LE(std::abs(r.value + 1.0), 10 * r.abs_error + 1e-15);
}

TEST(Quadrature, JensenZero) {
  auto f = [](double t) { return std::log(std::abs(2 * std::sin(t / 2))); };
  const auto r = integrate_adaptive(f, 0.0, 2 * kPi, SingularitySpec::logarithmic({0.0, 2 * kPi}), 1e-10);
  EXPECT_NEAR(r.value, 0.0, 1e-9);
}

TEST(Quadrature, InteriorSingularity) {
  // log|t - 0.3| on [0, 1]
  auto f = [](double t) { return std::log(std::abs(t - 0.3)); };
  const double truth = 0.3 * std::log(0.3) + 0.7 * std::log(0.7) - 1.0;
  const auto r = integrate_adaptive(f, 0.0, 1.0, SingularitySpec::logarithmic({0.3}), 1e-11);
  EXPECT_NEAR(r.value, truth, 1e-10);
}

TEST(Quadrature, InvalidInterval) {
  EXPECT_TM_ERROR(integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0, {}, 1e-8),
                  ErrorCode::InvalidInterval);
  EXPECT_TM_ERROR(integrate_adaptive([](double) { return 1.0; }, 2.0, 1.0, {}, 1e-8),
                  ErrorCode::InvalidInterval);
}

TEST(Quadrature, BudgetExhaustion) {
  QuadOptions tight;
  tight.max_evaluations = 50;
  auto f = [](double t) { return std::sin(1.0 / (t + 1e-3)); };
  try {
    integrate_adaptive(f, 0.0, 1.0, {}, 1e-14, tight);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvergence);
    EXPECT_TRUE(std::isfinite(e.best_real()));
  }
}

TEST(Quadrature, SingularitySpecSorted) {
  const auto s = SingularitySpec::logarithmic({0.5, -1.0, 0.5, 0.2});
  ASSERT_EQ(s.locations().size(), 3u);
  EXPECT_DOUBLE_EQ(s.locations()[0], -1.0);
  EXPECT_DOUBLE_EQ(s.locations()[1], 0.2);
  EXPECT_DOUBLE_EQ(s.locations()[2], 0.5);
}

TEST(Circle, Orthogonality) {
  const auto r = integrate_circle([](double t) { return std::polar(1.0, t); }, 1e-12);
  EXPECT_LT(std::abs(r.value), 1e-12);
}

TEST(Circle, ConstantAverage) {
  const auto r = integrate_circle([](double) { return cplx(1.0, 0.0); }, 1e-12);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-13);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-13);
}

TEST(Circle, ResidueCount) {
  const cplx w(0.5, 0.0);
  auto g = [&](double t) {
    const cplx x = std::polar(1.0, t);
    return x / (x - w);
  };
  const auto r = integrate_circle(g, 1e-12);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-11);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-11);
}

// Random cubics: linearity, splitting and the 10x error-bound contract.
class QuadratureProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  std::uniform_real_distribution<double> coef{-3.0, 3.0};
};

TEST_F(QuadratureProperties, Linearity) {
  for (int trial = 0; trial < 50; ++trial) {
    const double a0 = coef(rng), a1 = coef(rng), a2 = coef(rng);
    const double b0 = coef(rng), b1 = coef(rng);
    const double al = coef(rng), be = coef(rng);
    auto f = [&](double t) { return a0 + a1 * t + a2 * std::cos(3 * t); };
    auto g = [&](double t) { return b0 * std::exp(t / 2) + b1 * t * t; };
    auto h = [&](double t) { return al * f(t) + be * g(t); };
    const auto F = integrate_adaptive(f, -1.0, 2.0, {}, 1e-11);
    const auto G = integrate_adaptive(g, -1.0, 2.0, {}, 1e-11);
    const auto H = integrate_adaptive(h, -1.0, 2.0, {}, 1e-11);
    const double bound = H.abs_error + std::abs(al) * F.abs_error + std::abs(be) * G.abs_error + 1e-13;
    EXPECT_NEAR(H.value, al * F.value + be * G.value, bound);
  }
}

TEST_F(QuadratureProperties, Splitting) {
  for (int trial = 0; trial < 50; ++trial) {
    const double c = coef(rng), d = coef(rng);
    auto f = [&](double t) { return std::sin(c * t) + d * t * t * t; };
    const auto whole = integrate_adaptive(f, -1.0, 3.0, {}, 1e-11);
    const auto left = integrate_adaptive(f, -1.0, 1.0, {}, 1e-11);
    const auto right = integrate_adaptive(f, 1.0, 3.0, {}, 1e-11);
    EXPECT_NEAR(whole.value, left.value + right.value,
                whole.abs_error + left.abs_error + right.abs_error + 1e-13);
  }
}

TEST_F(QuadratureProperties, ErrorBoundAndRefinement) {
  for (int trial = 0; trial < 30; ++trial) {
    const double c = 1.0 + std::abs(coef(rng)) * 3;
    auto f = [&](double t) { return std::cos(c * t); };
    const double truth = std::sin(c * 2.0) / c;
    double prev = std::numeric_limits<double>::infinity();
    for (double tol = 1e-4; tol >= 1e-12; tol /= 2) {
      const auto r = integrate_adaptive(f, 0.0, 2.0, {}, tol);
      const double err = std::abs(r.value - truth);
      EXPECT_LE(err, 10 * r.abs_error + 1e-14);
      EXPECT_LE(err, prev + r.abs_error + 1e-15);
      prev = err;
    }
  }
}

TEST(Quadrature, BudgetEnvironment) {
  const char* saved = std::getenv("TORUS_MAHLER_BUDGET");
  const std::string keep = saved ? saved : "";
  ::setenv("TORUS_MAHLER_BUDGET", "1234", 1);
  EXPECT_EQ(default_budget(), 1234u);
  ::setenv("TORUS_MAHLER_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), 1000000u);
  if (saved) {
    ::setenv("TORUS_MAHLER_BUDGET", keep.c_str(), 1);
  } else {
    ::unsetenv("TORUS_MAHLER_BUDGET");
  }
}

}  // namespace
}  // namespace tmahler
