#pragma once

// Taylor remainder of the complex exponential and the normalized deviation
// objective that the sharp constants q_n(lambda) are built on.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "sharpchf/numerics.hpp"

namespace sharpchf {

/// One sample of the normalized deviation
///   (n!/x^n) |r_n(x) - lambda (ix)^n / n!|   for x > 0.
struct Deviation {
  double value;
  double at_x;
};

namespace detail {

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw std::domain_error(std::string(what) + " must be finite");
}

inline void require_order(int n) {
  if (n < 1) throw std::domain_error("order n must be >= 1");
}

/// i^k as a complex unit.
inline std::complex<double> ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Below this |x| the remainder is evaluated by its tail series; above, by the
// direct definition. The series avoids the catastrophic cancellation of
// e^{ix} minus its Taylor prefix when |x| is small.
inline constexpr double series_switch = 0.5;

/// Tail series r_n(x) = (ix)^n/n! * sum_{j>=0} (ix)^j n!/(n+j)!.
inline std::complex<double> remainder_series(int n, double x) {
  const std::complex<double> ix(0.0, x);
  std::complex<double> term = ipow(n) * (std::pow(x, n) / factorial(n));
  std::complex<double> sum = term;
  for (int k = n + 1;; ++k) {
    term *= ix / static_cast<double>(k);
    sum += term;
    // <= so an exactly-zero term (x = 0, or underflow) terminates.
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

/// Direct form e^{ix} - sum_{k<n} (ix)^k/k!.
inline std::complex<double> remainder_direct(int n, double x) {
  const std::complex<double> ix(0.0, x);
  std::complex<double> prefix = 0.0;
  std::complex<double> term = 1.0;
  for (int k = 0; k < n; ++k) {
    prefix += term;
    term *= ix / static_cast<double>(k + 1);
  }
  return std::exp(ix) - prefix;
}

/// Series form of the deviation with the n!/x^n scaling folded in
/// analytically:
///   |(1-lambda) i^n + sum_{j>=1} i^{n+j} x^j n!/(n+j)!|.
/// Cancellation-free and stable down to x -> 0+ for any lambda >= 0.
inline double deviation_series(int n, double lambda, double x) {
  const std::complex<double> ix(0.0, x);
  std::complex<double> term = ipow(n);
  std::complex<double> sum = (1.0 - lambda) * term;
  for (int j = 1;; ++j) {
    term *= ix / static_cast<double>(n + j);
    sum += term;
    // <= so an exactly-zero term (underflow at tiny x) terminates.
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return std::abs(sum);
}

/// Direct form of the deviation for x away from 0.
inline double deviation_direct(int n, double lambda, double x) {
  const double fact = factorial(n);
  const double xn = std::pow(x, n);
  const std::complex<double> num =
      remainder_direct(n, x) - lambda * (ipow(n) * (xn / fact));
  return std::abs(num) * (fact / xn);
}

/// Unchecked fast path used by the hot loops.
inline double deviation_value(int n, double lambda, double x) {
  return x < series_switch ? deviation_series(n, lambda, x)
                           : deviation_direct(n, lambda, x);
}

}  // namespace detail

/// r_n(x) = e^{ix} - sum_{k=0}^{n-1} (ix)^k / k!, for any n >= 1.
/// Satisfies |r_n(x)| <= |x|^n / n!.
inline std::complex<double> remainder(int n, double x) {
  detail::require_order(n);
  detail::require_finite(x, "x");
  return std::abs(x) < detail::series_switch ? detail::remainder_series(n, x)
                                             : detail::remainder_direct(n, x);
}

/// Normalized deviation (n!/x^n) |r_n(x) - lambda (ix)^n / n!| at x > 0.
/// Bounded; tends to |1 - lambda| as x -> 0+ and to lambda as x -> infinity.
inline Deviation normalized_deviation(int n, double lambda, double x) {
  detail::require_order(n);
  detail::require_finite(lambda, "lambda");
  if (lambda < 0.0) throw std::domain_error("lambda must be >= 0");
  detail::require_finite(x, "x");
  if (!(x > 0.0)) throw std::domain_error("x must be > 0");
  return {detail::deviation_value(n, lambda, x), x};
}

/// Limit of the normalized deviation as x -> 0+.
inline double deviation_limit_origin(double lambda) {
  return std::abs(1.0 - lambda);
}

/// Limit of the normalized deviation as x -> infinity.
inline double deviation_limit_infinity(double lambda) { return lambda; }

/// Slack of the half-shift refinement at the midpoint weight
/// lambda = n/(2(n+1)):
///   (n+2)/(2(n+1)) |x|^n/n!  -  |r_n(x) - (n/(2(n+1))) (ix)^n/n!|  >= 0.
inline double prawitz_residual(int n, double x) {
  detail::require_order(n);
  detail::require_finite(x, "x");
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  const double lam = n / (2.0 * (n + 1.0));
  const double dev = detail::deviation_value(n, lam, ax);  // even in x
  const double cap = (n + 2.0) / (2.0 * (n + 1.0));
  return (cap - dev) * std::pow(ax, n) / detail::factorial(n);
}

/// lambda + 2n/x: upper bound for the normalized deviation at every y >= x
/// (from |r_n(y)| <= 2 y^{n-1} / (n-1)!). Used to truncate brute-force scans.
inline double tail_bound(int n, double lambda, double x) {
  detail::require_order(n);
  detail::require_finite(lambda, "lambda");
  if (lambda < 0.0) throw std::domain_error("lambda must be >= 0");
  detail::require_finite(x, "x");
  if (!(x > 0.0)) throw std::domain_error("x must be > 0");
  return lambda + 2.0 * n / x;
}

}  // namespace sharpchf
