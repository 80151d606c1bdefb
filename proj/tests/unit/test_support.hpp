#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tmahler/error.hpp"

namespace tmahler::test {

inline constexpr double kPi = std::numbers::pi;

// Frozen values, computed once with mpmath at 30 digits.
inline constexpr double kLprimeE20 = 0.39956713980068237;  // L'(E20, 0)
inline constexpr double kL2E20 = 0.78871392030150034;      // L(E20, 2)
inline constexpr double kSmyth = 0.32306594721945051;      // m(x + y + 1)
inline constexpr double kPeriodIm = -2.2741651990410813;   // -2 sqrt(g) K(i g)

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no tmahler::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace tmahler::test

#define EXPECT_TM_ERROR(expr, code_value) \
  EXPECT_EQ(::tmahler::test::code_of([&] { (void)(expr); }), (code_value))
