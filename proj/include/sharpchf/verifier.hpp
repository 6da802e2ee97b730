#pragma once

// Property-verification layer: every bound of the theory as a checkable
// slack (bound minus deviation, >= 0 when the bound holds), the equality
// cases, and a seeded random-law harness that sweeps all of them.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sharpchf/constants.hpp"
#include "sharpchf/distributions.hpp"
#include "sharpchf/moment_bounds.hpp"
#include "sharpchf/oracle.hpp"

namespace sharpchf {

/// Identifier of each checked bound family.
enum class BoundId {
  taylor_f,            // order-n bound for f with weighted top term
  taylor_f_deriv,      // same family for derivatives f^(ell)
  f_order3,            // |f - 1 - i a1 t + a2 t^2/2| <= min_l(l|a3|+q3 b3)|t|^3/6
  fprime_order2,       // |f' - i a1 + a2 t|  <= min_l(l|a3|+q2 b3) t^2/2
  fsecond_order1,      // |f'' + a2|          <= min_l(l|a3|+q1 b3)|t|
  f_order1,            // |f - 1|             <= min_l(l|a1|+q1 b1)|t|
  cor_f_order3,        // |f - 1 + t^2/2|     <= gamma3(b) b |t|^3/6
  cor_fprime_order2,   // |f' + t|            <= gamma2(b) b t^2/2
  cor_fsecond_order1,  // |f'' + 1|           <= gamma1(b) b |t|
  cor_f_order1,        // |f - 1|             <= kappa1 |t| b1
  combined_fprime,     // |f + f'/t|  <= min(2 sin(min(b|t|/4, pi/2)), ...)
  combined_fsecond,    // |f + f''|   <= min(2 sin(min(b|t|/2, pi/2)), ...)
  third_moment,        // |a3| <= A(b) b3
};

inline constexpr std::array<BoundId, 13> all_bound_ids = {
    BoundId::taylor_f,          BoundId::taylor_f_deriv,
    BoundId::f_order3,          BoundId::fprime_order2,
    BoundId::fsecond_order1,    BoundId::f_order1,
    BoundId::cor_f_order3,      BoundId::cor_fprime_order2,
    BoundId::cor_fsecond_order1, BoundId::cor_f_order1,
    BoundId::combined_fprime,   BoundId::combined_fsecond,
    BoundId::third_moment,
};

inline const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::taylor_f: return "taylor_f";
    case BoundId::taylor_f_deriv: return "taylor_f_deriv";
    case BoundId::f_order3: return "f_order3";
    case BoundId::fprime_order2: return "fprime_order2";
    case BoundId::fsecond_order1: return "fsecond_order1";
    case BoundId::f_order1: return "f_order1";
    case BoundId::cor_f_order3: return "cor_f_order3";
    case BoundId::cor_fprime_order2: return "cor_fprime_order2";
    case BoundId::cor_fsecond_order1: return "cor_fsecond_order1";
    case BoundId::cor_f_order1: return "cor_f_order1";
    case BoundId::combined_fprime: return "combined_fprime";
    case BoundId::combined_fsecond: return "combined_fsecond";
    case BoundId::third_moment: return "third_moment";
  }
  return "unknown";
}

/// One checked inequality: slack = bound - deviation (>= 0 iff it holds),
/// the t it was checked at (0 for t-free bounds), and the law's digest.
struct BoundReport {
  BoundId id;
  double slack;
  double at_t;
  std::string law_digest;
};

namespace detail {

/// Everything the per-law checks need, computed once per law.
struct BoundContext {
  DiscreteDistribution law;  // standardized
  MomentProfile mp;          // orders 1..3
  std::string digest;
  double b;  // beta_3
  GammaResult g1, g2, g3;
  // Minimized constants min_lambda(lambda |alpha| + q_m(lambda) beta):
  double min_f3;    // m = 3, |alpha_3|, beta_3
  double min_fp2;   // m = 2, |alpha_3|, beta_3
  double min_fpp1;  // m = 1, |alpha_3|, beta_3
  double min_f1;    // m = 1, |alpha_1|, beta_1
};

inline void require_standardized(const MomentProfile& mp) {
  if (std::abs(mp.alpha[0]) > 1e-9 || std::abs(mp.alpha[1] - 1.0) > 1e-9)
    throw std::invalid_argument(
        "law must be standardized (mean 0, variance 1)");
}

inline BoundContext make_context(const DiscreteDistribution& law) {
  MomentProfile mp = moments(law, 3);
  require_standardized(mp);
  const double b3 = mp.beta[2];
  const double b1 = mp.beta[0];
  const double a3 = std::abs(mp.alpha[2]);
  const double a1 = std::abs(mp.alpha[0]);
  BoundContext ctx{law,
                   std::move(mp),
                   law_digest(law),
                   b3,
                   gamma(1, b3),
                   gamma(2, b3),
                   gamma(3, b3),
                   b3 * minimize_affine_q(3, a3 / b3).value,
                   b3 * minimize_affine_q(2, a3 / b3).value,
                   b3 * minimize_affine_q(1, a3 / b3).value,
                   b1 * minimize_affine_q(1, a1 / b1).value};
  return ctx;
}

/// alpha_j with alpha_0 = 1.
inline double alpha_of(const MomentProfile& mp, int j) {
  return j == 0 ? 1.0 : mp.alpha[static_cast<std::size_t>(j - 1)];
}

/// Slack of the order-n bound for f^(ell) with weighted top Taylor term:
///   |f^(ell)(t) - sum_{k<m} i^(ell+k) a_(ell+k) t^k/k!
///                - lambda i^n a_n t^m/m!|  <=  q_m(lambda) b_n |t|^m / m!
/// with m = n - ell. q_m(lambda) is passed in by the caller.
inline BoundReport theorem1_slack(const BoundContext& ctx, int n, int ell,
                                  double lambda, double q_m, double t) {
  const int m = n - ell;
  std::complex<double> taylor = 0.0;
  for (int k = 0; k < m; ++k)
    taylor += ipow(ell + k) * alpha_of(ctx.mp, ell + k) *
              (std::pow(t, k) / factorial(k));
  const double mfact = factorial(m);
  const std::complex<double> top = lambda * alpha_of(ctx.mp, n) *
                                   ipow(n) * (std::pow(t, m) / mfact);
  const double lhs = std::abs(chf(ctx.law, ell, t) - taylor - top);
  const double rhs = q_m * ctx.mp.beta[static_cast<std::size_t>(n - 1)] *
                     std::pow(std::abs(t), m) / mfact;
  return {ell == 0 ? BoundId::taylor_f : BoundId::taylor_f_deriv, rhs - lhs,
          t, ctx.digest};
}

/// The four minimized specialized bounds at honest moments.
inline std::array<BoundReport, 4> specialized_slacks(const BoundContext& ctx,
                                                     double t) {
  const double a1 = alpha_of(ctx.mp, 1);
  const double a2 = alpha_of(ctx.mp, 2);
  const double at = std::abs(t);
  const std::complex<double> i(0.0, 1.0);

  const double lhs_f3 =
      std::abs(chf(ctx.law, 0, t) -
               (1.0 + i * (a1 * t) - std::complex<double>(a2 * t * t / 2.0)));
  const double lhs_fp2 =
      std::abs(chf(ctx.law, 1, t) - (i * a1 - std::complex<double>(a2 * t)));
  const double lhs_fpp1 = std::abs(chf(ctx.law, 2, t) + a2);
  const double lhs_f1 = std::abs(chf(ctx.law, 0, t) - 1.0);

  return {BoundReport{BoundId::f_order3,
                      ctx.min_f3 * at * at * at / 6.0 - lhs_f3, t, ctx.digest},
          BoundReport{BoundId::fprime_order2,
                      ctx.min_fp2 * t * t / 2.0 - lhs_fp2, t, ctx.digest},
          BoundReport{BoundId::fsecond_order1, ctx.min_fpp1 * at - lhs_fpp1, t,
                      ctx.digest},
          BoundReport{BoundId::f_order1, ctx.min_f1 * at - lhs_f1, t,
                      ctx.digest}};
}

/// The four corollary bounds (literal standardized forms with gamma_n(b)).
inline std::array<BoundReport, 4> corollary_slacks(const BoundContext& ctx,
                                                   double t) {
  const double at = std::abs(t);
  const double b = ctx.b;
  const double lhs1 = std::abs(chf(ctx.law, 0, t) -
                               std::complex<double>(1.0 - t * t / 2.0));
  const double lhs2 = std::abs(chf(ctx.law, 1, t) + t);
  const double lhs3 = std::abs(chf(ctx.law, 2, t) + 1.0);
  const double lhs4 = std::abs(chf(ctx.law, 0, t) - 1.0);
  return {BoundReport{BoundId::cor_f_order3,
                      ctx.g3.gamma * b * at * at * at / 6.0 - lhs1, t,
                      ctx.digest},
          BoundReport{BoundId::cor_fprime_order2,
                      ctx.g2.gamma * b * t * t / 2.0 - lhs2, t, ctx.digest},
          BoundReport{BoundId::cor_fsecond_order1,
                      ctx.g1.gamma * b * at - lhs3, t, ctx.digest},
          BoundReport{BoundId::cor_f_order1,
                      critical_constants().kappa1 * at * ctx.mp.beta[0] - lhs4,
                      t, ctx.digest}};
}

/// The two sine-capped combined bounds.
inline std::array<BoundReport, 2> combined_slacks(const BoundContext& ctx,
                                                  double t) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double at = std::abs(t);
  const double b = ctx.b;
  const double lhs1 = std::abs(chf(ctx.law, 0, t) + chf(ctx.law, 1, t) / t);
  const double rhs1 = std::min(2.0 * std::sin(std::min(b * at / 4.0, half_pi)),
                               ctx.g2.gamma * b * at / 2.0 + t * t / 2.0);
  const double lhs2 = std::abs(chf(ctx.law, 0, t) + chf(ctx.law, 2, t));
  const double rhs2 = std::min(2.0 * std::sin(std::min(b * at / 2.0, half_pi)),
                               ctx.g1.gamma * b * at + t * t / 2.0);
  return {BoundReport{BoundId::combined_fprime, rhs1 - lhs1, t, ctx.digest},
          BoundReport{BoundId::combined_fsecond, rhs2 - lhs2, t, ctx.digest}};
}

inline BoundReport third_moment_slack(const BoundContext& ctx) {
  const double slack = big_a(ctx.b) * ctx.b - std::abs(alpha_of(ctx.mp, 3));
  return {BoundId::third_moment, slack, 0.0, ctx.digest};
}

}  // namespace detail

/// Check the order-n bound for f^(ell) at weight lambda and argument t.
/// Valid for any law with finite moments; lambda must lie in the analytic
/// domain of q_{n-ell}.
inline BoundReport check_theorem1(const DiscreteDistribution& dist, int n,
                                  int ell, double lambda, double t) {
  if (n < 1 || n > 3) throw std::domain_error("n must lie in {1,2,3}");
  if (ell < 0 || ell >= n) throw std::domain_error("ell must lie in [0, n)");
  detail::require_finite(t, "t");
  const int m = n - ell;
  const double q_m = q(m, lambda).q;
  detail::BoundContext ctx{dist,          moments(dist, 3),
                           law_digest(dist), 0.0,
                           {},            {},
                           {},            0.0,
                           0.0,           0.0,
                           0.0};
  return detail::theorem1_slack(ctx, n, ell, lambda, q_m, t);
}

/// The four specialized minimized bounds at t (standardized laws).
inline std::vector<BoundReport> check_specialized(
    const DiscreteDistribution& dist, double t) {
  detail::require_finite(t, "t");
  const detail::BoundContext ctx = detail::make_context(dist);
  const auto r = detail::specialized_slacks(ctx, t);
  return {r.begin(), r.end()};
}

/// The four corollary bounds at t (standardized laws).
inline std::vector<BoundReport> check_corollary(
    const DiscreteDistribution& dist, double t) {
  detail::require_finite(t, "t");
  const detail::BoundContext ctx = detail::make_context(dist);
  const auto r = detail::corollary_slacks(ctx, t);
  return {r.begin(), r.end()};
}

/// The two combined sine-capped bounds at t != 0 (standardized laws).
inline std::vector<BoundReport> check_combined(
    const DiscreteDistribution& dist, double t) {
  detail::require_finite(t, "t");
  if (t == 0.0) throw std::domain_error("t must be nonzero");
  const detail::BoundContext ctx = detail::make_context(dist);
  const auto r = detail::combined_slacks(ctx, t);
  return {r.begin(), r.end()};
}

/// |E X^3| <= A(b) E|X|^3 for standardized laws.
inline BoundReport check_theorem2(const DiscreteDistribution& dist) {
  const detail::BoundContext ctx = detail::make_context(dist);
  return detail::third_moment_slack(ctx);
}

/// Equality cases: the symmetric three-point laws attaining each specialized
/// bound with equality at its critical angle.
enum class EqualityCase {
  f_order3_theta3,      // theta = theta3*, third-order f bound
  fprime_order2_pi,     // theta = pi,      second-order f' bound
  fsecond_order1_theta1,  // theta = theta1*, first-order f'' bound
  f_order1_theta1,      // theta = theta1*, first-order f bound
};

inline const char* to_string(EqualityCase c) {
  switch (c) {
    case EqualityCase::f_order3_theta3: return "f_order3_theta3";
    case EqualityCase::fprime_order2_pi: return "fprime_order2_pi";
    case EqualityCase::fsecond_order1_theta1: return "fsecond_order1_theta1";
    case EqualityCase::f_order1_theta1: return "f_order1_theta1";
  }
  return "unknown";
}

/// Max |bound - deviation| over the t grid for the given equality case.
/// Every t must lie in (0, theta]; the attaining law at t is the symmetric
/// three-point law at the case's critical angle.
inline double equality_attainment(EqualityCase c,
                                  const std::vector<double>& t_grid) {
  const auto& cc = critical_constants();
  double theta = 0.0;
  switch (c) {
    case EqualityCase::f_order3_theta3: theta = cc.theta3_star; break;
    case EqualityCase::fprime_order2_pi: theta = std::numbers::pi; break;
    case EqualityCase::fsecond_order1_theta1:
    case EqualityCase::f_order1_theta1: theta = cc.theta1_star; break;
  }
  double worst = 0.0;
  for (double t : t_grid) {
    detail::require_finite(t, "t");
    if (!(t > 0.0) || t > theta * (1.0 + 4e-16))
      throw std::domain_error("t must lie in (0, theta]");
    t = std::min(t, theta);
    const DiscreteDistribution law = symmetric_three_point(theta, t);
    const MomentProfile mp = moments(law, 3);
    const double a1 = mp.alpha[0];
    const double a2 = mp.alpha[1];
    const double a3 = std::abs(mp.alpha[2]);
    const std::complex<double> i(0.0, 1.0);
    double lhs = 0.0;
    double rhs = 0.0;
    switch (c) {
      case EqualityCase::f_order3_theta3:
        lhs = std::abs(chf(law, 0, t) -
                       (1.0 + i * (a1 * t) -
                        std::complex<double>(a2 * t * t / 2.0)));
        rhs = mp.beta[2] * minimize_affine_q(3, a3 / mp.beta[2]).value * t *
              t * t / 6.0;
        break;
      case EqualityCase::fprime_order2_pi:
        lhs = std::abs(chf(law, 1, t) -
                       (i * a1 - std::complex<double>(a2 * t)));
        rhs = mp.beta[2] * minimize_affine_q(2, a3 / mp.beta[2]).value * t *
              t / 2.0;
        break;
      case EqualityCase::fsecond_order1_theta1:
        lhs = std::abs(chf(law, 2, t) + a2);
        rhs = mp.beta[2] * minimize_affine_q(1, a3 / mp.beta[2]).value * t;
        break;
      case EqualityCase::f_order1_theta1:
        lhs = std::abs(chf(law, 0, t) - 1.0);
        rhs = mp.beta[0] *
              minimize_affine_q(1, std::abs(a1) / mp.beta[0]).value * t;
        break;
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// Harness configuration. threads = 0 resolves SHARPCHF_THREADS, then
/// hardware concurrency.
struct HarnessConfig {
  std::uint64_t seed = 42;
  int cases = 100;
  double slack_tol = 1e-12;
  double equality_tol = 1e-9;
  int oracle_lambda_count = 50;
  double oracle_tol = 1e-9;
  double oracle_agreement_tol = 1e-6;
  bool check_equality = true;
  bool check_oracle_agreement = true;
  unsigned threads = 0;
};

struct HarnessResult {
  std::vector<BoundReport> worst;       // one per bound id, enum order
  std::vector<BoundReport> violations;  // slack < -slack_tol, sorted
  double equality_max_deviation = 0.0;
  double oracle_max_gap = 0.0;
  long long laws_checked = 0;
  long long checks_run = 0;
  bool pass = false;
};

namespace detail {

inline bool report_less(const BoundReport& a, const BoundReport& b) {
  if (a.slack != b.slack) return a.slack < b.slack;
  if (a.at_t != b.at_t) return a.at_t < b.at_t;
  return a.law_digest < b.law_digest;
}

/// Accumulates worst-per-bound and violations for a set of checks.
struct CheckAccumulator {
  std::array<BoundReport, all_bound_ids.size()> worst;
  std::vector<BoundReport> violations;
  long long checks = 0;
  double slack_tol;

  explicit CheckAccumulator(double tol) : slack_tol(tol) {
    for (std::size_t k = 0; k < worst.size(); ++k)
      worst[k] = {all_bound_ids[k],
                  std::numeric_limits<double>::infinity(), 0.0, ""};
  }

  void add(const BoundReport& r) {
    ++checks;
    BoundReport& w = worst[static_cast<std::size_t>(r.id)];
    if (report_less(r, w)) w = r;
    if (r.slack < -slack_tol) violations.push_back(r);
  }

  void merge(const CheckAccumulator& other) {
    checks += other.checks;
    for (std::size_t k = 0; k < worst.size(); ++k)
      if (report_less(other.worst[k], worst[k])) worst[k] = other.worst[k];
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

/// Fixed lambda probes per order m: lambda_*(m), midpoint, lambda^*(m),
/// with q_m precomputed.
struct LambdaProbes {
  std::array<std::array<double, 3>, 3> lam;
  std::array<std::array<double, 3>, 3> qv;
};

inline const LambdaProbes& lambda_probes() {
  static const LambdaProbes p = [] {
    LambdaProbes out{};
    for (int m = 1; m <= 3; ++m) {
      const double lo = CriticalConstants::lambda_star_lower(m);
      const double hi = critical_constants().lambda_star_upper(m);
      const std::array<double, 3> ls = {lo, 0.5 * (lo + hi), hi};
      for (std::size_t j = 0; j < 3; ++j) {
        out.lam[static_cast<std::size_t>(m - 1)][j] = ls[j];
        out.qv[static_cast<std::size_t>(m - 1)][j] = q(m, ls[j]).q;
      }
    }
    return out;
  }();
  return p;
}

/// The 20-point harness t grid: 14 log-spaced magnitudes in [1e-3, 10] with
/// alternating signs plus the six structural points +-theta1*/b, +-pi/b,
/// +-theta3*/b.
inline std::vector<double> harness_t_grid(double b3) {
  std::vector<double> ts;
  ts.reserve(20);
  for (int j = 0; j < 14; ++j) {
    const double mag = std::pow(10.0, -3.0 + 4.0 * j / 13.0);
    ts.push_back(j % 2 == 1 ? -mag : mag);
  }
  const auto& cc = critical_constants();
  for (double s : {cc.theta1_star, std::numbers::pi, cc.theta3_star}) {
    ts.push_back(s / b3);
    ts.push_back(-s / b3);
  }
  return ts;
}

/// All per-law checks over the harness t grid.
inline void check_law(const BoundContext& ctx, CheckAccumulator& acc) {
  const LambdaProbes& probes = lambda_probes();
  // (n, ell) pairs of the derivative family, order m = n - ell.
  static constexpr std::array<std::array<int, 2>, 3> deriv_pairs = {
      {{2, 1}, {3, 1}, {3, 2}}};
  for (double t : harness_t_grid(ctx.b)) {
    for (int n = 1; n <= 3; ++n)
      for (std::size_t j = 0; j < 3; ++j)
        acc.add(theorem1_slack(ctx, n, 0,
                               probes.lam[static_cast<std::size_t>(n - 1)][j],
                               probes.qv[static_cast<std::size_t>(n - 1)][j],
                               t));
    for (const auto& [n, ell] : deriv_pairs) {
      const std::size_t m = static_cast<std::size_t>(n - ell - 1);
      for (std::size_t j = 0; j < 3; ++j)
        acc.add(theorem1_slack(ctx, n, ell, probes.lam[m][j], probes.qv[m][j],
                               t));
    }
    for (const BoundReport& r : specialized_slacks(ctx, t)) acc.add(r);
    for (const BoundReport& r : corollary_slacks(ctx, t)) acc.add(r);
    for (const BoundReport& r : combined_slacks(ctx, t)) acc.add(r);
  }
  acc.add(third_moment_slack(ctx));
}

inline unsigned resolve_threads(unsigned requested, int cases) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("SHARPCHF_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v <= 256) n = static_cast<unsigned>(v);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::min<unsigned>(n, static_cast<unsigned>(std::max(1, cases)));
}

}  // namespace detail

/// Run all per-law checks for one standardized law (the same set the random
/// harness applies to each generated law).
inline HarnessResult verify_law(const DiscreteDistribution& std_law,
                                double slack_tol = 1e-12) {
  const detail::BoundContext ctx = detail::make_context(std_law);
  detail::CheckAccumulator acc(slack_tol);
  detail::check_law(ctx, acc);
  HarnessResult res;
  res.worst.assign(acc.worst.begin(), acc.worst.end());
  std::sort(acc.violations.begin(), acc.violations.end(),
            detail::report_less);
  res.violations = std::move(acc.violations);
  res.laws_checked = 1;
  res.checks_run = acc.checks;
  res.pass = res.violations.empty();
  return res;
}

/// The full harness: seeded random standardized laws swept through every
/// bound family, plus the equality-attainment and oracle-agreement checks.
/// Case i (1-based) uses seed cfg.seed + i and 2 + ((cfg.seed + i) mod 15)
/// atoms. Deterministic for a fixed config, independent of thread count.
inline HarnessResult run_harness(const HarnessConfig& cfg) {
  if (cfg.cases < 1) throw std::domain_error("cases must be >= 1");
  detail::lambda_probes();  // warm up shared state before threading

  const unsigned threads = detail::resolve_threads(cfg.threads, cfg.cases);
  std::vector<detail::CheckAccumulator> accs(
      threads, detail::CheckAccumulator(cfg.slack_tol));
  std::atomic<int> next_case{1};

  const auto worker = [&](unsigned slot) {
    for (;;) {
      const int i = next_case.fetch_add(1);
      if (i > cfg.cases) break;
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
      const int n_atoms = 2 + static_cast<int>(seed % 15);
      const DiscreteDistribution law = standardize(random_law(seed, n_atoms));
      const detail::BoundContext ctx = detail::make_context(law);
      detail::check_law(ctx, accs[slot]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned s = 0; s < threads; ++s) pool.emplace_back(worker, s);
    for (std::thread& th : pool) th.join();
  }

  detail::CheckAccumulator total(cfg.slack_tol);
  for (const auto& acc : accs) total.merge(acc);

  HarnessResult res;
  res.worst.assign(total.worst.begin(), total.worst.end());
  std::sort(total.violations.begin(), total.violations.end(),
            detail::report_less);
  res.violations = std::move(total.violations);
  res.laws_checked = cfg.cases;
  res.checks_run = total.checks;

  if (cfg.check_equality) {
    for (EqualityCase c :
         {EqualityCase::f_order3_theta3, EqualityCase::fprime_order2_pi,
          EqualityCase::fsecond_order1_theta1,
          EqualityCase::f_order1_theta1}) {
      double theta = 0.0;
      switch (c) {
        case EqualityCase::f_order3_theta3:
          theta = critical_constants().theta3_star;
          break;
        case EqualityCase::fprime_order2_pi: theta = std::numbers::pi; break;
        default: theta = critical_constants().theta1_star; break;
      }
      std::vector<double> grid;
      grid.reserve(20);
      for (int j = 1; j <= 20; ++j) grid.push_back(theta * j / 20.0);
      res.equality_max_deviation = std::max(res.equality_max_deviation,
                                            equality_attainment(c, grid));
    }
  }

  if (cfg.check_oracle_agreement) {
    for (int n = 1; n <= 3; ++n) {
      const double hi = critical_constants().lambda_star_upper(n);
      for (int j = 0; j < cfg.oracle_lambda_count; ++j) {
        const double lam = hi * j / (cfg.oracle_lambda_count - 1);
        const double gap =
            std::abs(q_oracle(n, lam, cfg.oracle_tol).q - q(n, lam).q);
        res.oracle_max_gap = std::max(res.oracle_max_gap, gap);
      }
    }
  }

  res.pass = res.violations.empty() &&
             (!cfg.check_equality ||
              res.equality_max_deviation < cfg.equality_tol) &&
             (!cfg.check_oracle_agreement ||
              res.oracle_max_gap < cfg.oracle_agreement_tol);
  return res;
}

}  // namespace sharpchf
