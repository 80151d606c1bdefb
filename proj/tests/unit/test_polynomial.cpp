#include <random>

#include "test_support.hpp"
#include "tmahler/parse.hpp"
#include "tmahler/polynomial.hpp"
#include "tmahler/roots.hpp"

namespace tmahler {
namespace {

TEST(Roots, ClosedForms) {
  auto r = polynomial_roots({-2.0, 1.0});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(std::abs(r[0] - 2.0), 0.0, 1e-15);
  r = polynomial_roots({1.0, 0.0, 1.0});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0] * r[1] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r[0] + r[1]), 0.0, 1e-15);
}

TEST(Roots, ZeroRootsAndTrailing) {
  const auto r = polynomial_roots({0.0, 0.0, -1.0, 1.0, 0.0});
  ASSERT_EQ(r.size(), 3u);
  int zeros = 0;
  for (auto z : r) zeros += z == cplx(0.0);
  EXPECT_EQ(zeros, 2);
  EXPECT_TM_ERROR(polynomial_roots({0.0, 0.0}), ErrorCode::InvalidArgument);
}

TEST(Roots, RandomBackwardError) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 3 + trial % 12;
    std::vector<cplx> roots;
    for (int i = 0; i < deg; ++i) roots.emplace_back(n(rng), n(rng));
    std::vector<cplx> c{1.0};
    for (const auto& z : roots) {
      std::vector<cplx> next(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= z * c[i];
      }
      c = next;
    }
    const auto found = polynomial_roots(c);
    ASSERT_EQ(found.size(), roots.size());
    for (const auto& z : roots) {
      double best = 1e300;
      for (const auto& f : found) best = std::min(best, std::abs(f - z));
      EXPECT_LT(best, 1e-7) << "degree " << deg;
    }
  }
}

TEST(Roots, DoubleRoot) {
  const auto r = polynomial_roots({1.0, -2.0, 1.0});
  ASSERT_EQ(r.size(), 2u);
  for (auto z : r) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-7);
}

TEST(Polynomial, Canonical) {
  auto p = LaurentPolynomial::monomial(2.0, 1, 0) + LaurentPolynomial::monomial(-2.0, 1, 0);
  EXPECT_TRUE(p.is_zero());
  const auto x = LaurentPolynomial::variable(0);
  const auto y = LaurentPolynomial::variable(1);
  const auto q = (x + y + LaurentPolynomial::constant(1.0, 2)).pow(2);
  EXPECT_EQ(q.terms().size(), 6u);
  EXPECT_EQ(q.coefficient(1, 1), cplx(2.0));
  EXPECT_EQ(q.min_degree(0), 0);
  EXPECT_EQ(q.max_degree(1), 2);
}

TEST(Polynomial, Evaluation) {
  const auto p = parse_polynomial("x^2*y - 3*x^-1 + 2");
  const cplx x(0.3, 1.1), y(-0.7, 0.2);
  EXPECT_NEAR(std::abs(p(x, y) - (x * x * y - 3.0 / x + 2.0)), 0.0, 1e-14);
  const auto slice = p.slice_in_y(x);
  ASSERT_EQ(slice.size(), 2u);
  EXPECT_NEAR(std::abs(slice[1] - x * x), 0.0, 1e-15);
  const auto sc = p.scaled(2.0, 3.0);
  EXPECT_NEAR(std::abs(sc(x, y) - p(2.0 * x, 3.0 * y)), 0.0, 1e-13);
}

TEST(Polynomial, NegativePowerOfNonMonomial) {
  EXPECT_TM_ERROR((LaurentPolynomial::variable(0) + LaurentPolynomial::constant(1.0)).pow(-1),
                  ErrorCode::InvalidArgument);
  EXPECT_EQ(LaurentPolynomial::monomial(2.0, 1, 0).pow(-2), LaurentPolynomial::monomial(0.25, -2, 0));
}

TEST(Parse, Grammar) {
  const auto r = parse_polynomial("(1+x)(1+y)(x+y) + 2xy");
  EXPECT_EQ(r, parse_polynomial("(x+1)*y^2 + (x^2+4*x+1)*y + x^2 + x"));
  EXPECT_EQ(parse_polynomial("1/2*x - 0.5x"), LaurentPolynomial(1));
  EXPECT_EQ(parse_polynomial("X + Y").coefficient(0, 1), cplx(1.0));
  EXPECT_EQ(parse_polynomial("x^-2").coefficient(-2), cplx(1.0));
  EXPECT_EQ(parse_polynomial("x/x^3"), parse_polynomial("x^-2"));
  EXPECT_EQ(parse_polynomial("-(x - 1)^3").coefficient(0), cplx(1.0));
  EXPECT_EQ(parse_polynomial("2.5e1 x").coefficient(1), cplx(25.0));
  EXPECT_EQ(parse_polynomial("- -x").coefficient(1), cplx(1.0));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "x +", "x^y", "(x", "x)", "1/(x+1)", "(x+1)^-1", "z", "x^", "..", "2**x"}) {
    EXPECT_TM_ERROR(parse_polynomial(bad), ErrorCode::ParseError) << bad;
  }
}

TEST(Parse, RoundTripToString) {
  for (const char* s : {"x + y + 1", "y^2 + 2*x*y - x^3 + x", "(x+1)*y^2 + (x^2+4*x+1)*y + x^2 + x",
                        "3*x^-1*y^2 - 0.25", "x - 7"}) {
    const auto p = parse_polynomial(s);
    EXPECT_EQ(parse_polynomial(p.to_string()), p) << s << " -> " << p.to_string();
  }
}

}  // namespace
}  // namespace tmahler
