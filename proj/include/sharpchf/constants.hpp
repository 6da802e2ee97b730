#pragma once

// Sharp constants layer: the critical angles theta1*, theta3*, the envelope
// constants kappa1, kappa3, the weight thresholds lambda_*(n) / lambda^*(n),
// the maximizer theta_n(lambda), and the sharp constant q_n(lambda) for
// n in {1, 2, 3}.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sharpchf/numerics.hpp"
#include "sharpchf/remainder.hpp"

namespace sharpchf {

enum class Branch { flat, interior };
enum class Method { analytic, oracle };

/// Result of a q_n(lambda) evaluation. On the flat branch
/// (lambda <= lambda_*(n)) the supremum is the x -> 0+ limit and theta = 0;
/// on the interior branch theta is the attaining maximizer. tol is the
/// requested tolerance for oracle evaluations and 0 for analytic ones.
struct QEvaluation {
  double q;
  double theta;
  Branch branch;
  Method method;
  double tol;
};

/// The critical constants of the third-order theory.
struct CriticalConstants {
  double theta1_star;  // root of x sin x + cos x - 1 on (0, pi)
  double theta3_star;  // root of x^2 + 2 x sin x + 6(cos x - 1) on (0, 2 pi)
  double kappa1;       // sup_{x>0} (1 - cos x)/x        = sin(theta1_star)
  double kappa3;       // sup_{x>0} (cos x - 1 + x^2/2)/x^3
  std::array<double, 3> lambda_upper;  // lambda^*(n), n = 1..3

  /// lambda_*(n) = n / (2(n+1)); the flat branch is [0, lambda_*(n)].
  /// Valid for every n >= 1.
  static double lambda_star_lower(int n) {
    detail::require_order(n);
    return n / (2.0 * (n + 1.0));
  }

  /// lambda^*(n): right end of the analytic domain; n in {1, 2, 3}.
  double lambda_star_upper(int n) const {
    if (n < 1 || n > 3)
      throw std::domain_error("lambda^*(n) is available for n in {1,2,3}");
    return lambda_upper[static_cast<std::size_t>(n - 1)];
  }
};

/// The constants, computed once via bracketed bisection at double precision.
inline const CriticalConstants& critical_constants() {
  static const CriticalConstants cc = [] {
    constexpr double pi = std::numbers::pi;
    CriticalConstants k{};
    k.theta1_star = detail::bisect(
        [](double x) { return x * std::sin(x) + std::cos(x) - 1.0; }, 2.0, 3.0,
        1e-15);
    k.theta3_star = detail::bisect(
        [](double x) {
          return x * x + 2.0 * x * std::sin(x) + 6.0 * (std::cos(x) - 1.0);
        },
        3.0, 5.0, 1e-15);
    k.kappa1 = std::sin(k.theta1_star);
    const double t3 = k.theta3_star;
    k.kappa3 = (t3 - std::sin(t3)) / (3.0 * t3 * t3);
    k.lambda_upper = {std::sin(k.theta1_star) / k.theta1_star,
                      4.0 / (pi * pi),
                      6.0 * (t3 - std::sin(t3)) / (t3 * t3 * t3)};
    return k;
  }();
  return cc;
}

namespace detail {

/// Maximizer sign function for order n: positive strictly left of
/// theta_n(lambda) and negative strictly right of it on the lemma interval
/// ((0, pi) for n = 1, (0, pi] for n = 2, (0, 2 pi) for n = 3), provided
/// lambda in (lambda_*(n), lambda^*(n)].
inline double maximizer_sign(int n, double lambda, double x) {
  switch (n) {
    case 1:
      return std::cos(x) * (2.0 - lambda * x * x) +
             (1.0 + lambda) * x * std::sin(x) - 2.0;
    case 2: {
      const double s = std::sin(0.5 * x);
      return x * (8.0 - lambda * x * x) * std::sin(x) +
             4.0 * ((lambda + 1.0) * x * x - 4.0) * s * s - 4.0 * x * x;
    }
    case 3: {
      const double x2 = x * x;
      const double x4 = x2 * x2;
      return 2.0 * std::cos(x) * (lambda * x4 - 18.0 * x2 + 36.0) -
             6.0 * x * std::sin(x) * (x2 * (lambda + 1.0) - 12.0) -
             (3.0 - 4.0 * lambda) * x4 - 72.0;
    }
    default:
      throw std::domain_error("analytic maximizer requires n in {1,2,3}");
  }
}

inline double maximizer_interval_end(int n) {
  return n == 3 ? 2.0 * std::numbers::pi : std::numbers::pi;
}

inline void require_analytic_order(int n) {
  if (n < 1 || n > 3)
    throw std::domain_error(
        "analytic q_n is available for n in {1,2,3}; use q_oracle otherwise");
}

inline void require_analytic_lambda(int n, double lambda) {
  require_finite(lambda, "lambda");
  const double upper = critical_constants().lambda_star_upper(n);
  if (lambda < 0.0 || lambda > upper * (1.0 + 4e-16))
    throw std::domain_error(
        "lambda outside [0, lambda^*(n)]; use q_oracle beyond lambda^*");
}

}  // namespace detail

/// Maximizer theta_n(lambda) of the normalized deviation on (0, infinity):
/// 0 on the flat branch, otherwise the unique sign change of the maximizer
/// sign function. Strategy: a two-stage dense scan of the deviation (which
/// is exactly computable everywhere) brackets the global argmax, then
/// bisection on the sign function pins the root; this stays well-posed near
/// the seam where the sign function degenerates to fp noise, and the
/// deviation is unimodal on the lemma interval (the sign function has a
/// single sign change), so any scan density brackets correctly.
inline double theta_n(int n, double lambda) {
  detail::require_analytic_order(n);
  detail::require_analytic_lambda(n, lambda);
  if (lambda <= CriticalConstants::lambda_star_lower(n)) return 0.0;

  const double end = detail::maximizer_interval_end(n);
  // Stage 1: coarse scan of the whole interval.
  const int coarse = 600;
  const double h1 = end / coarse;
  int best_i = 1;
  double best_v = -1.0;
  for (int i = 1; i <= coarse; ++i) {
    const double v = detail::deviation_value(n, lambda, i * h1);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  // Stage 2: refine 16x inside the +-2-cell window around the coarse argmax.
  const double h2 = h1 / 16.0;
  const double a2 = std::max(h2, (best_i - 2) * h1);
  const double b2 = std::min(end, (best_i + 2) * h1);
  double best_x = a2;
  best_v = -1.0;
  const int fine = static_cast<int>(std::ceil((b2 - a2) / h2));
  for (int j = 0; j <= fine; ++j) {
    const double x = std::min(a2 + j * h2, b2);
    const double v = detail::deviation_value(n, lambda, x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }

  double lo = std::max(0.5 * h2, best_x - h2);
  double hi = std::min(end, best_x + h2);
  // Right-endpoint root (theta_2(lambda^*(2)) = pi): no sign change in the
  // bracket, the sign function at the end is zero up to fp noise.
  if (detail::maximizer_sign(n, lambda, hi) > 0.0) {
    if (hi >= end) return end;
    hi = std::min(end, hi + h2);
    if (detail::maximizer_sign(n, lambda, hi) > 0.0 && hi >= end) return end;
  }
  if (detail::maximizer_sign(n, lambda, lo) <= 0.0)
    lo = std::max(0.5 * h2, lo - h2);

  return detail::bisect(
      [&](double x) { return detail::maximizer_sign(n, lambda, x); }, lo, hi,
      1e-13);
}

/// Sharp constant q_n(lambda) = sup_{x>0} (n!/x^n)|r_n(x) - lambda(ix)^n/n!|
/// for n in {1, 2, 3} and lambda in [0, lambda^*(n)].
/// Flat branch: q = 1 - lambda with theta = 0. Interior branch: the
/// deviation evaluated at theta_n(lambda).
inline QEvaluation q(int n, double lambda) {
  detail::require_analytic_order(n);
  detail::require_analytic_lambda(n, lambda);
  const double upper = critical_constants().lambda_star_upper(n);
  lambda = std::min(lambda, upper);
  if (lambda <= CriticalConstants::lambda_star_lower(n))
    return {1.0 - lambda, 0.0, Branch::flat, Method::analytic, 0.0};
  const double th = theta_n(n, lambda);
  return {detail::deviation_value(n, lambda, th), th, Branch::interior,
          Method::analytic, 0.0};
}

/// q_n(lambda^*(n)), the smallest value of q_n on its analytic domain.
/// Closed forms: q_min(1) = kappa1, q_min(2) = 2/pi, q_min(3) = 6 kappa3.
inline double q_min(int n) {
  detail::require_analytic_order(n);
  return q(n, critical_constants().lambda_star_upper(n)).q;
}

}  // namespace sharpchf
