#include "tmahler/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "tmahler/error.hpp"

namespace tmahler {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPolynomial parse() {
    skip();
    if (pos_ >= text_.size()) fail("empty polynomial");
    LaurentPolynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'x' ||
           c == 'y' || c == 'X' || c == 'Y';
  }

  LaurentPolynomial expr() {
    LaurentPolynomial acc(1);
    bool first = true;
    for (;;) {
      const char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      LaurentPolynomial t = term();
      if (negate) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        LaurentPolynomial d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (!d.is_monomial()) {
          pos_ = at;
          fail("division by a non-monomial");
        }
        acc *= d.pow(-1);
      } else if (starts_primary(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPolynomial factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  LaurentPolynomial power() {
    LaurentPolynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
      skip();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    int e = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, e);
    if (ec != std::errc() || e > 10000) fail("exponent out of range");
    if (sign < 0 && !base.is_monomial()) fail("negative power of a non-monomial");
    return base.pow(sign * e);
  }

  LaurentPolynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPolynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return LaurentPolynomial::variable(0);
    }
    if (c == 'y' || c == 'Y') {
      ++pos_;
      return LaurentPolynomial::variable(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  LaurentPolynomial number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - s;
    };
    std::size_t n = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) fail("malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;
    }
    const std::string literal(text_.substr(start, pos_ - start));
    return LaurentPolynomial::constant(std::strtod(literal.c_str(), nullptr));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace tmahler
