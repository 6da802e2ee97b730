#pragma once

// Brute-force oracle for q_n(lambda): grid supremum of the normalized
// deviation with certified tail truncation and zoom refinement. Shares no
// root-finding machinery with the analytic path; works for any n >= 1 and
// any lambda >= 0.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sharpchf/constants.hpp"
#include "sharpchf/remainder.hpp"

namespace sharpchf {

namespace detail {

/// Scan the deviation on an integer-indexed grid of pitch `step`, doubling
/// the range until the tail bound certifies nothing beyond can beat the
/// incumbent by more than tol. If lambda is within tol of the supremum the
/// certificate can never fire (the x -> infinity limit *is* lambda); the
/// fallback stops once 2n/x_max < tol and returns max(best, lambda).
inline QEvaluation oracle_sup(int n, double lambda, double tol, double step) {
  double x_max = 4.0 * std::numbers::pi;
  double best = -1.0;
  double best_x = step;
  long long i = 1;
  for (;;) {
    const long long i_end = static_cast<long long>(std::floor(x_max / step));
    for (; i <= i_end; ++i) {
      const double x = static_cast<double>(i) * step;
      const double v = deviation_value(n, lambda, x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    if (tail_bound(n, lambda, x_max) < best - tol) break;
    if (2.0 * n / x_max < tol) {
      best = std::max(best, lambda);
      break;
    }
    x_max *= 2.0;
  }

  // Zoom: shrink the pitch 10x around the incumbent, ten times.
  double h = step;
  for (int zoom = 0; zoom < 10; ++zoom) {
    const double h2 = h / 10.0;
    const double a = std::max(h2, best_x - h);
    const double b = std::min(x_max, best_x + h);
    for (int j = 0;; ++j) {
      const double x = a + j * h2;
      if (x > b) break;
      const double v = deviation_value(n, lambda, x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    h = h2;
  }

  const bool flat = lambda <= CriticalConstants::lambda_star_lower(n);
  return {best, flat ? 0.0 : best_x, flat ? Branch::flat : Branch::interior,
          Method::oracle, tol};
}

}  // namespace detail

/// Brute-force q_n(lambda) to absolute tolerance tol (tol >= 1e-12).
/// Independent of the analytic lemma machinery; valid for any n >= 1 and
/// lambda >= 0, including lambda beyond lambda^*(n).
inline QEvaluation q_oracle(int n, double lambda, double tol = 1e-9) {
  detail::require_order(n);
  detail::require_finite(lambda, "lambda");
  if (lambda < 0.0) throw std::domain_error("lambda must be >= 0");
  if (!(tol >= 1e-12)) throw std::domain_error("tol must be >= 1e-12");
  return detail::oracle_sup(n, lambda, tol, 1e-3);
}

}  // namespace sharpchf
