#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace tmahler {

using cplx = std::complex<double>;
using Exponent = std::array<int, 2>;

// Finitely supported sum of c * x^i * y^j with (i, j) in Z^2 and complex c.
// nvars is 1 (only x) or 2. Zero coefficients are never stored; the zero
// polynomial is representable (is_zero()) so that arithmetic is closed, but
// every measure routine rejects it.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int nvars);
  LaurentPolynomial(int nvars, const std::map<Exponent, cplx>& terms);

  static LaurentPolynomial constant(cplx c, int nvars = 1);
  // x (index 0) or y (index 1).
  static LaurentPolynomial variable(int index);
  static LaurentPolynomial monomial(cplx c, int i, int j = 0);

  int nvars() const { return nvars_; }
  const std::map<Exponent, cplx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  cplx coefficient(int i, int j = 0) const;

  // Smallest and largest exponent of variable var over the support.
  int min_degree(int var) const;
  int max_degree(int var) const;

  cplx operator()(cplx x) const;
  cplx operator()(cplx x, cplx y) const;

  // Coefficients of the univariate polynomial in y at fixed x, ascending from
  // y^{min_degree(1)}.
  std::vector<cplx> slice_in_y(cplx x) const;
  // Coefficients in x ascending from x^{min_degree(0)} (requires nvars() == 1
  // or no y in the support).
  std::vector<cplx> coefficients_in_x() const;

  // P(a x, b y).
  LaurentPolynomial scaled(double a, double b = 1.0) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(cplx c);

  // Integer power; negative exponents are allowed only for monomials.
  LaurentPolynomial pow(int e) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(const Exponent& e, cplx c);

  int nvars_ = 1;
  std::map<Exponent, cplx> terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a);
LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(cplx c, LaurentPolynomial a);

}  // namespace tmahler
