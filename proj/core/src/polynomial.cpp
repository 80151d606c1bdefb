#include "tmahler/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tmahler/error.hpp"

namespace tmahler {

LaurentPolynomial::LaurentPolynomial(int nvars) : nvars_(nvars) {
  if (nvars != 1 && nvars != 2) {
    throw Error(ErrorCode::InvalidArgument, "polynomials have 1 or 2 variables");
  }
}

LaurentPolynomial::LaurentPolynomial(int nvars, const std::map<Exponent, cplx>& terms)
    : LaurentPolynomial(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(cplx c, int nvars) {
  LaurentPolynomial p(nvars);
  p.add_term({0, 0}, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(int index) {
  if (index == 0) return monomial(1.0, 1, 0);
  if (index == 1) return monomial(1.0, 0, 1);
  throw Error(ErrorCode::InvalidArgument, "variable index must be 0 or 1");
}

LaurentPolynomial LaurentPolynomial::monomial(cplx c, int i, int j) {
  LaurentPolynomial p(j != 0 ? 2 : 1);
  p.add_term({i, j}, c);
  return p;
}

void LaurentPolynomial::add_term(const Exponent& e, cplx c) {
  if (e[1] != 0 && nvars_ < 2) nvars_ = 2;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != cplx(0.0, 0.0)) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == cplx(0.0, 0.0)) terms_.erase(it);
}

cplx LaurentPolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? cplx(0.0, 0.0) : it->second;
}

int LaurentPolynomial::min_degree(int var) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return terms_.empty() ? 0 : m;
}

int LaurentPolynomial::max_degree(int var) const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return terms_.empty() ? 0 : m;
}

cplx LaurentPolynomial::operator()(cplx x) const { return (*this)(x, 1.0); }

cplx LaurentPolynomial::operator()(cplx x, cplx y) const {
  cplx s = 0.0;
  for (const auto& [e, c] : terms_) s += c * std::pow(x, e[0]) * std::pow(y, e[1]);
  return s;
}

std::vector<cplx> LaurentPolynomial::slice_in_y(cplx x) const {
  const int lo = min_degree(1);
  std::vector<cplx> out(static_cast<std::size_t>(max_degree(1) - lo + 1), 0.0);
  for (const auto& [e, c] : terms_) {
    out[static_cast<std::size_t>(e[1] - lo)] += c * std::pow(x, e[0]);
  }
  return out;
}

std::vector<cplx> LaurentPolynomial::coefficients_in_x() const {
  const int lo = min_degree(0);
  std::vector<cplx> out(static_cast<std::size_t>(max_degree(0) - lo + 1), 0.0);
  for (const auto& [e, c] : terms_) {
    if (e[1] != 0) throw Error(ErrorCode::InvalidArgument, "polynomial depends on y");
    out[static_cast<std::size_t>(e[0] - lo)] += c;
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(double a, double b) const {
  LaurentPolynomial p(nvars_);
  for (const auto& [e, c] : terms_) p.add_term(e, c * std::pow(a, e[0]) * std::pow(b, e[1]));
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  nvars_ = std::max(nvars_, other.nvars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  nvars_ = std::max(nvars_, other.nvars_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial out(std::max(nvars_, other.nvars_));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(cplx c) {
  LaurentPolynomial out(nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  *this = std::move(out);
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) {
      throw Error(ErrorCode::InvalidArgument, "negative powers are only defined for monomials");
    }
    const auto& [ex, c] = *terms_.begin();
    LaurentPolynomial p(nvars_);
    p.add_term({ex[0] * e, ex[1] * e}, std::pow(c, e));
    return p;
  }
  LaurentPolynomial result = constant(1.0, nvars_);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  // Highest exponents first reads most naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string body;
    for (int v = 0; v < 2; ++v) {
      if (e[v] == 0) continue;
      if (!body.empty()) body += "*";
      body += v == 0 ? "x" : "y";
      if (e[v] != 1) body += "^" + std::to_string(e[v]);
    }
    if (c.imag() != 0.0) {
      os << (first ? "" : " + ") << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
      if (!body.empty()) os << "*" << body;
      first = false;
      continue;
    }
    const double m = std::abs(c.real());
    if (first) os << (c.real() < 0 ? "-" : "");
    else os << (c.real() < 0 ? " - " : " + ");
    first = false;
    if (body.empty()) os << m;
    else if (m == 1.0) os << body;
    else os << m << "*" << body;
  }
  return os.str();
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out = a;
  return out *= cplx(-1.0, 0.0);
}
LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
LaurentPolynomial operator*(cplx c, LaurentPolynomial a) { return a *= c; }

}  // namespace tmahler
