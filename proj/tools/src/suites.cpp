#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tmahler/cli.hpp"
#include "tmahler/divisor.hpp"
#include "tmahler/error.hpp"
#include "tmahler/lseries.hpp"
#include "tmahler/mahler.hpp"
#include "tmahler/parse.hpp"
#include "tmahler/paths.hpp"
#include "tmahler/periods.hpp"
#include "tmahler/specfun.hpp"

namespace tmahler::cli {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr const char* kS = "y^2 + 2*x*y - x^3 + x";
constexpr const char* kR = "(x+1)*y^2 + (x^2+4*x+1)*y + x^2 + x";

struct Case {
  std::string id;
  std::function<std::pair<double, double>()> eval;  // (lhs, rhs)
  std::string note;
};

// L'(E_20, 0), computed once.
double lprime() {
  static const double v = l_derivative_0(WeierstrassCurve::e20());
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Quadrature target well inside the comparison tolerance.
double quad_tol(double tol) { return std::max(tol * 1e-2, 1e-12); }

double measure(const LaurentPolynomial& p, double a, double b, double tol) {
  return mahler_torus_2d(p, TorusRadii{a, b}, quad_tol(tol)).value;
}

// L1 norm of a formal divisor, used to compare divisors exactly.
double l1(const FormalDivisor& d) {
  long s = 0;
  for (const auto& [p, m] : d.terms()) s += std::labs(m);
  return static_cast<double>(s);
}

std::vector<Case> smyth(double tol) {
  return {{"m(x+y+1) = L'(chi_-3,-1)",
           [tol] {
             return std::pair{measure(parse_polynomial("x+y+1"), 1.0, 1.0, tol), chi3_values().Lprime_minus1};
           },
           ""}};
}

std::vector<Case> rogers_zudilin(double tol) {
  return {{"m(R) = 3L'(E,0)", [tol] { return std::pair{measure(parse_polynomial(kR), 1.0, 1.0, tol), 3.0 * lprime()}; },
           ""},
          {"m(R) = 15/pi^2 L(E,2)",
           [tol] {
             return std::pair{measure(parse_polynomial(kR), 1.0, 1.0, tol),
                              15.0 / (kPi * kPi) * l_value_2(WeierstrassCurve::e20())};
           },
           ""}};
}

std::vector<Case> theorem1(double tol, bool s_family, bool r_family) {
  std::vector<Case> out;
  if (s_family) {
    auto add = [&](double a, std::function<double(double)> rhs, std::string form) {
      out.push_back({"S a=" + fmt(a),
                     [a, rhs, tol] { return std::pair{measure(parse_polynomial(kS), a, a, tol), rhs(a)}; },
                     std::move(form)});
    };
    for (double a : {0.7, 1.0, 1.3}) add(a, [](double t) { return 2.0 * std::log(t) + 2.0 * lprime(); }, "2 log a + 2 L'");
    for (double a : {3.5, 5.0}) add(a, [](double t) { return 3.0 * std::log(t); }, "3 log a");
    for (double a : {0.2, 0.3}) add(a, [](double t) { return std::log(t); }, "log a");
  }
  if (r_family) {
    auto add = [&](double a, std::function<double(double)> rhs, std::string form) {
      out.push_back({"R a=" + fmt(a),
                     [a, rhs, tol] { return std::pair{measure(parse_polynomial(kR), a * a, a, tol), rhs(a)}; },
                     std::move(form)});
    };
    for (double a : {1.0, 1.1, 1.5}) add(a, [](double t) { return 4.0 * std::log(t) + 3.0 * lprime(); }, "4 log a + 3 L'");
    for (double a : {0.7, 0.9}) add(a, [](double t) { return 2.0 * std::log(t) + 3.0 * lprime(); }, "2 log a + 3 L'");
  }
  return out;
}

std::vector<Case> corollary(double tol) {
  std::vector<Case> out;
  auto poly = [](double a) {
    LaurentPolynomial p(2);
    p += LaurentPolynomial::monomial(1.0, 0, 2);
    p += LaurentPolynomial::monomial(2.0, 1, 1);
    p += LaurentPolynomial::monomial(-a, 3, 0);
    p += LaurentPolynomial::monomial(1.0 / a, 1, 0);
    return p;
  };
  for (double a : {0.7, 1.0, 1.3}) {
    out.push_back({"a=" + fmt(a), [=] { return std::pair{measure(poly(a), 1.0, 1.0, tol), 2.0 * lprime()}; }, "2 L'"});
  }
  out.push_back({"a=4", [=] { return std::pair{measure(poly(4.0), 1.0, 1.0, tol), std::log(4.0)}; }, "log a"});
  return out;
}

std::vector<Case> prop4() {
  struct Data {
    WeierstrassCurve e = WeierstrassCurve::e20();
    RationalPoint p = RationalPoint::affine(-1, 2);
    FormalDivisor at(int k, long m) const { return FormalDivisor::point(e.multiply(p, k), m); }
    FormalDivisor X() const { return divisor_of_line(e, 1, 0, 0); }
    FormalDivisor Y() const { return divisor_of_line(e, 0, 1, 0); }
    // x o phi^-1 = Y / (X + 1), y o phi^-1 = -(2X + Y) / (X + 1)
    FormalDivisor xphi() const { return divisor_of_line(e, 0, 1, 0) - divisor_of_line(e, 1, 0, 1); }
    FormalDivisor yphi() const { return divisor_of_line(e, 2, 1, 0) - divisor_of_line(e, 1, 0, 1); }
  };
  auto exact = [](FormalDivisor lhs, FormalDivisor rhs, const WeierstrassCurve& e, bool minus) {
    const FormalDivisor diff = minus ? (lhs - rhs).minus_part(e) : lhs - rhs;
    return std::pair{l1(diff), 0.0};
  };
  return {
      {"(x o phi^-1) = (3P)+(4P)-(P)-O",
       [exact] {
         const Data d;
         return exact(d.xphi(), d.at(3, 1) + d.at(4, 1) - d.at(1, 1) - d.at(6, 1), d.e, false);
       },
       "exact divisor"},
      {"(y o phi^-1) = (3P)+(2P)-(5P)-O",
       [exact] {
         const Data d;
         return exact(d.yphi(), d.at(3, 1) + d.at(2, 1) - d.at(5, 1) - d.at(6, 1), d.e, false);
       },
       "exact divisor"},
      {"(X)<>(Y) = -4(P)-4(2P)",
       [exact] {
         const Data d;
         return exact(diamond(d.X(), d.Y(), d.e), d.at(1, -4) + d.at(2, -4), d.e, true);
       },
       "exact in Z[E]^-"},
      {"(x o phi^-1)<>(y o phi^-1) = 6(P)+6(2P)",
       [exact] {
         const Data d;
         return exact(diamond(d.xphi(), d.yphi(), d.e), d.at(1, 6) + d.at(2, 6), d.e, true);
       },
       "exact in Z[E]^-"},
      {"(X)<>(Y) = -2/3 (x o phi^-1)<>(y o phi^-1)",
       [exact] {
         const Data d;
         return exact(3 * diamond(d.X(), d.Y(), d.e), -2 * diamond(d.xphi(), d.yphi(), d.e), d.e, true);
       },
       "exact in Z[E]^-"},
  };
}

std::vector<Case> periods_suite(double tol) {
  std::vector<Case> out;
  for (Family f : {Family::S, Family::R}) {
    const Interval iv = f == Family::S ? golden_interval() : r_interval();
    for (double a : {iv.lo, iv.mid(), iv.hi}) {
      const std::string id = std::string(to_string(f)) + " a=" + fmt(a);
      auto integral = [=] { return period_integral({f, Sign::Minus}, a, quad_tol(tol)).value; };
      out.push_back({id + " Im", [=] { return std::pair{integral().imag(), period_reference().imag()}; },
                     "-2i sqrt(g) K(ig)"});
      out.push_back({id + " Re", [=] { return std::pair{integral().real(), 0.0}; }, "purely imaginary"});
    }
  }
  return out;
}

std::vector<Case> windings(double tol) {
  (void)tol;
  std::vector<Case> out;
  constexpr int kRadii = 10;
  for (Family f : {Family::S, Family::R}) {
    const Interval iv = f == Family::S ? golden_interval() : r_interval();
    const double expected = f == Family::S ? 1.0 : 0.5;
    for (int k = 0; k < kRadii; ++k) {
      const double a = iv.lo + (iv.hi - iv.lo) * k / (kRadii - 1);
      out.push_back({std::string(to_string(f)) + " minus a=" + fmt(a),
                     [=] { return std::pair{winding({f, Sign::Minus}, a), expected}; }, "continuous arg tracking"});
    }
  }
  return out;
}

std::vector<Case> bloch() {
  return {{"|D^E((P)+(2P))| = pi L'",
           [] {
             const WeierstrassCurve e = WeierstrassCurve::e20();
             const RationalPoint p = RationalPoint::affine(-1, 2);
             const FormalDivisor d = FormalDivisor::point(p) + FormalDivisor::point(e.multiply(p, 2));
             return std::pair{std::abs(elliptic_dilog(d, e)), kPi * lprime()};
           },
           ""}};
}

// Uniform double in [0, 1) from the top 53 bits, independent of the library's
// distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Case> maillot_suite(double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  for (int k = 0; k < 20; ++k) {
    double a = 0.3 + 2.7 * unit(rng);
    double b = 0.3 + 2.7 * unit(rng);
    double c = 0.3 + 2.7 * unit(rng);
    if (k >= 10) {
      // Force a degenerate triangle: one side longer than the other two together.
      const double big = a + b + 0.05 + unit(rng);
      const int slot = static_cast<int>(rng() % 3);
      if (slot == 0) std::swap(a, c);
      if (slot == 1) std::swap(b, c);
      (slot == 0 ? a : slot == 1 ? b : c) = big;
    }
    std::ostringstream id;
    id.precision(6);
    id << "(" << a << "," << b << "," << c << ")";
    out.push_back({id.str(),
                   [=] {
                     LaurentPolynomial p = LaurentPolynomial::monomial(a, 1, 0);
                     p += LaurentPolynomial::monomial(b, 0, 1);
                     p += LaurentPolynomial::constant(c, 2);
                     return std::pair{maillot(a, b, c), measure(p, 1.0, 1.0, tol)};
                   },
                   k < 10 ? "random" : "non-triangle"});
  }
  return out;
}

std::vector<Case> classification() {
  std::vector<Case> out;
  constexpr int kRadii = 1000;
  for (Family f : {Family::S, Family::R}) {
    out.push_back({std::string(to_string(f)) + " violations over a in (0.2, 5)",
                   [f] {
                     int bad = 0;
                     for (int k = 0; k < kRadii; ++k) {
                       const double a = 0.2 + 4.8 * (k + 0.5) / kRadii;
                       bad += classify(f, a).consistent ? 0 : 1;
                     }
                     return std::pair{static_cast<double>(bad), 0.0};
                   },
                   "1000 radii x 1000 angles"});
  }
  return out;
}

const std::map<std::string, double>& defaults() {
  static const std::map<std::string, double> d{
      {"smyth", 1e-6},   {"rogers-zudilin", 1e-4}, {"theorem1", 1e-4}, {"theorem1-s", 1e-4},
      {"theorem1-r", 1e-4}, {"corollary", 1e-4},   {"prop4", 0.0},     {"periods", 1e-8},
      {"windings", 1e-9}, {"bloch", 1e-3},        {"maillot", 1e-4},  {"classification", 0.0},
  };
  return d;
}

std::vector<Case> cases(const std::string& suite, double tol, std::uint64_t seed) {
  if (suite == "smyth") return smyth(tol);
  if (suite == "rogers-zudilin") return rogers_zudilin(tol);
  if (suite == "theorem1") return theorem1(tol, true, true);
  if (suite == "theorem1-s") return theorem1(tol, true, false);
  if (suite == "theorem1-r") return theorem1(tol, false, true);
  if (suite == "corollary") return corollary(tol);
  if (suite == "prop4") return prop4();
  if (suite == "periods") return periods_suite(tol);
  if (suite == "windings") return windings(tol);
  if (suite == "bloch") return bloch();
  if (suite == "maillot") return maillot_suite(tol, seed);
  if (suite == "classification") return classification();
  throw std::invalid_argument("unknown suite: " + suite);
}

VerificationReport execute(const Case& c, double tol) {
  VerificationReport r;
  r.case_id = c.id;
  r.tolerance = tol;
  r.note = c.note;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto [lhs, rhs] = c.eval();
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_diff = std::abs(lhs - rhs);
    r.pass = r.abs_diff <= tol;
  } catch (const std::exception& e) {
    r.lhs = r.rhs = r.abs_diff = std::nan("");
    r.pass = false;
    r.note = e.what();
  }
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"smyth",    "rogers-zudilin", "theorem1", "theorem1-s", "theorem1-r", "corollary", "prop4",
          "periods",  "windings",       "bloch",    "maillot",    "classification", "all"};
}

double default_tolerance(const std::string& suite) {
  const auto it = defaults().find(suite);
  if (it == defaults().end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options) {
  if (suite == "all") {
    std::vector<VerificationReport> all;
    for (const char* name : {"smyth", "rogers-zudilin", "maillot", "theorem1", "corollary", "prop4", "periods",
                             "windings", "bloch", "classification"}) {
      for (VerificationReport& r : run_suite(name, options)) {
        r.case_id = std::string(name) + ": " + r.case_id;
        all.push_back(std::move(r));
      }
    }
    return all;
  }
  const double tol = options.tol.value_or(default_tolerance(suite));
  const std::vector<Case> list = cases(suite, tol, options.seed);
  std::vector<VerificationReport> out;
  if (!options.parallel) {
    for (const Case& c : list) out.push_back(execute(c, tol));
    return out;
  }
  lprime();  // warm the shared L-value before fanning out
  std::vector<std::future<VerificationReport>> jobs;
  for (const Case& c : list) jobs.push_back(std::async(std::launch::async, execute, std::cref(c), tol));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace tmahler::cli
