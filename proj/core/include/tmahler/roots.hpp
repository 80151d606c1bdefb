#pragma once

#include <complex>
#include <vector>

namespace tmahler {

// All complex roots, with multiplicity, of c[0] + c[1] z + ... + c[n] z^n.
// Trailing zero coefficients are dropped; factors of z give exact zero roots.
// Degree <= 2 uses closed forms, higher degree Aberth-Ehrlich iteration.
// Throws Error(RootFindingFailure) if the iteration stalls or a root fails the
// backward-error check, and Error(InvalidArgument) for the zero polynomial.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& c);

}  // namespace tmahler
