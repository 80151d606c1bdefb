#pragma once

#include <cstdint>
#include <vector>

#include "tmahler/curve.hpp"

namespace tmahler {

// a_1 .. a_n (index 0 unused). Good primes by point counting, bad primes from
// WeierstrassCurve::bad_ap, prime powers by the Hecke recursion. Primes are
// counted on `threads` workers; the result does not depend on the split.
std::vector<std::int64_t> an_coefficients(const WeierstrassCurve& e, std::size_t n,
                                          unsigned threads = 0);

// Root number from the theta relation theta(1/t) = w t^2 theta(t) at t = 1.1.
// Throws UnknownRootNumber if the estimate is not within 1e-6 of +-1, which
// signals wrong bad-prime data or a wrong conductor.
int root_number(const WeierstrassCurve& e);

// L(E, 2) to absolute accuracy tol from the rapidly convergent series
//   L(E,2) = c^2 sum a_n [ (1 + cn) e^{-cn} / (cn)^2 + w E_1(cn) ],  c = 2 pi / sqrt N.
// Throws NonConvergence if more than 10^7 terms would be needed.
double l_value_2(const WeierstrassCurve& e, double tol = 1e-14);

// L'(E, 0) = N / (4 pi^2) L(E, 2); requires root number +1.
double l_derivative_0(const WeierstrassCurve& e, double tol = 1e-14);

// Truncated Dirichlet series sum_{n <= n_max} a_n / n^2, kept as an oracle.
double l_value_2_partial(const WeierstrassCurve& e, std::size_t n_max);

}  // namespace tmahler
