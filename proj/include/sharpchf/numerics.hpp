#pragma once

// Small numeric primitives shared across the library: compensated summation,
// bracketed bisection, and golden-section minimization.

#include <cmath>
#include <utility>

namespace sharpchf::detail {

/// Kahan-Neumaier compensated accumulator.
struct kahan_sum {
  double sum = 0.0;
  double cor = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      cor += (sum - t) + v;
    else
      cor += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + cor; }
};

/// Bisection on [lo, hi] for a function with opposite (computed) signs at the
/// ends. Keeps the sign of f(lo) on the left; shrinks the bracket until its
/// width is <= width or double resolution is reached; returns the midpoint.
template <class F>
double bisect(F&& f, double lo, double hi, double width) {
  const bool lo_pos = f(lo) > 0.0;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) > 0.0) == lo_pos)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Golden-section minimization of a unimodal function on [a, b] to an
/// argument tolerance tol. Returns {argmin, min}.
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (d - c > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace sharpchf::detail
