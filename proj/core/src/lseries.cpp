#include "tmahler/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace tmahler {

namespace {

constexpr double kPi = std::numbers::pi;

void require_conductor(const WeierstrassCurve& e) {
  if (e.conductor() <= 0) {
    throw Error(ErrorCode::InvalidArgument, "L-series needs a declared conductor");
  }
}

double e1(double x) { return -std::expint(-x); }

}  // namespace

std::vector<std::int64_t> an_coefficients(const WeierstrassCurve& e, std::size_t n, unsigned threads) {
  require_conductor(e);
  std::vector<std::int64_t> a(n + 1, 0);
  if (n == 0) return a;
  a[1] = 1;

  std::vector<std::uint32_t> spf(n + 1, 0);
  std::vector<std::int64_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    primes.push_back(static_cast<std::int64_t>(i));
    for (std::size_t j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }

  const std::int64_t conductor = e.conductor();
  std::vector<int> ap(primes.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < primes.size(); i += stride) {
      const std::int64_t p = primes[i];
      ap[i] = conductor % p == 0 ? e.bad_ap(p) : e.ap(p);
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, primes.size() / 64)));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < primes.size(); ++i) a[static_cast<std::size_t>(primes[i])] = ap[i];

  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t p = spf[k];
    if (p == k) continue;
    std::size_t m = k / p;
    std::size_t pk = p;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m != 1) {
      a[k] = a[pk] * a[m];
    } else if (conductor % static_cast<std::int64_t>(p) == 0) {
      a[k] = a[p] * a[k / p];
    } else {
      a[k] = a[p] * a[k / p] - static_cast<std::int64_t>(p) * a[k / p / p];
    }
  }
  return a;
}

int root_number(const WeierstrassCurve& e) {
  require_conductor(e);
  const double c = 2.0 * kPi / std::sqrt(static_cast<double>(e.conductor()));
  constexpr double kT = 1.1;
  // Terms decay like e^{-c n / t}; take enough for double precision.
  const auto n = static_cast<std::size_t>(std::ceil(45.0 * kT / c)) + 10;
  const std::vector<std::int64_t> a = an_coefficients(e, n, 1);
  auto theta = [&](double t) {
    double s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(a[k]) * std::exp(-c * static_cast<double>(k) * t);
    return s;
  };
  const double w = theta(1.0 / kT) / (kT * kT * theta(kT));
  if (std::abs(w - 1.0) < 1e-6) return 1;
  if (std::abs(w + 1.0) < 1e-6) return -1;
  throw Error(ErrorCode::UnknownRootNumber,
              "functional equation fails (w estimate " + std::to_string(w) +
                  "); check the conductor and bad-prime data");
}

double l_value_2(const WeierstrassCurve& e, double tol) {
  require_conductor(e);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const int w = root_number(e);
  const double c = 2.0 * kPi / std::sqrt(static_cast<double>(e.conductor()));
  auto weight = [&](double n) {
    const double cn = c * n;
    return c * c * ((1.0 + cn) * std::exp(-cn) / (cn * cn) + w * e1(cn));
  };
  // |a_n| <= d(n) sqrt n <= 2n; stop once the geometric tail of 2n |weight| is below tol / 10.
  std::size_t n_max = 1;
  constexpr std::size_t kLimit = 10'000'000;
  while (2.0 * static_cast<double>(n_max) * std::abs(weight(static_cast<double>(n_max))) /
             (1.0 - std::exp(-c)) >
         0.1 * tol) {
    if (++n_max > kLimit) throw NonConvergenceError("L(E,2) series needs too many terms", 0.0, 0.0, tol);
  }
  const std::vector<std::int64_t> a = an_coefficients(e, n_max);
  double s = 0.0;
  for (std::size_t k = n_max; k >= 1; --k) s += static_cast<double>(a[k]) * weight(static_cast<double>(k));
  return s;
}

double l_derivative_0(const WeierstrassCurve& e, double tol) {
  require_conductor(e);
  if (root_number(e) != 1) {
    throw Error(ErrorCode::UnknownRootNumber, "L'(E,0) formula requires root number +1");
  }
  return static_cast<double>(e.conductor()) / (4.0 * kPi * kPi) * l_value_2(e, tol);
}

double l_value_2_partial(const WeierstrassCurve& e, std::size_t n_max) {
  const std::vector<std::int64_t> a = an_coefficients(e, n_max);
  double s = 0.0;
  for (std::size_t k = n_max; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    s += static_cast<double>(a[k]) / (kk * kk);
  }
  return s;
}

}  // namespace tmahler
