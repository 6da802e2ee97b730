// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Each criterion re-derives its expectations independently
// of the unit tests (reference digits, rounding bands, brute-force scans).
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sharpchf/sharpchf.hpp"

using namespace sharpchf;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%s  criterion %d: %s%s%s  [%.1fs]\n", ok ? "PASS" : "FAIL",
              index, name.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// value reproduces the printed k-digit truncation: printed <= value < +10^-k.
bool truncates_to(double value, double printed, int k) {
  return value >= printed - 1e-12 && value < printed + std::pow(10.0, -k);
}

// --- criterion 1: critical constants ---------------------------------------

bool c1_constants(std::string& detail) {
  const CriticalConstants& cc = critical_constants();
  bool ok = true;
  // Reference digits (8-digit truncations).
  ok &= truncates_to(cc.theta1_star, 2.33112237, 8);
  ok &= truncates_to(cc.theta3_star, 3.99589567, 8);
  ok &= truncates_to(cc.kappa1, 0.72461135, 8);
  ok &= truncates_to(cc.kappa3, 0.09916191, 8);
  ok &= truncates_to(cc.lambda_upper[0], 0.31084226, 8);
  ok &= truncates_to(cc.lambda_upper[1], 0.40528473, 8);
  ok &= truncates_to(cc.lambda_upper[2], 0.44668694, 8);
  ok &= truncates_to(q_min(1), 0.72461135, 8);
  ok &= truncates_to(q_min(2), 0.63661977, 8);
  ok &= truncates_to(q_min(3), 0.59497148, 8);
  // Defining identities.
  const double t1 = cc.theta1_star;
  const double t3 = cc.theta3_star;
  ok &= std::abs(t1 * std::sin(t1) + std::cos(t1) - 1.0) < 1e-12;
  ok &= std::abs(t3 * t3 + 2.0 * t3 * std::sin(t3) + 6.0 * (std::cos(t3) - 1.0)) <
        1e-12;
  ok &= std::abs(cc.kappa1 - std::sin(t1)) < 1e-15;
  ok &= std::abs(cc.kappa3 - (t3 - std::sin(t3)) / (3.0 * t3 * t3)) < 1e-15;
  ok &= std::abs(cc.lambda_upper[0] - std::sin(t1) / t1) < 1e-15;
  ok &= cc.lambda_upper[1] == 4.0 / (std::numbers::pi * std::numbers::pi);
  ok &= std::abs(cc.lambda_upper[2] -
                 6.0 * (t3 - std::sin(t3)) / (t3 * t3 * t3)) < 1e-15;
  for (int n = 1; n <= 5; ++n)
    ok &= CriticalConstants::lambda_star_lower(n) == n / (2.0 * (n + 1.0));
  // Minimal q values at the right endpoint.
  ok &= std::abs(q(1, cc.lambda_upper[0]).q - cc.kappa1) < 1e-12;
  ok &= std::abs(q(2, cc.lambda_upper[1]).q - 2.0 / std::numbers::pi) < 1e-12;
  ok &= std::abs(q(3, cc.lambda_upper[2]).q - 6.0 * cc.kappa3) < 1e-12;
  detail = "10 constants inside 1e-8 truncation windows, identities < 1e-12";
  return ok;
}

// --- criterion 2: reference table -------------------------------------------

struct RefRow {
  double b;
  std::array<double, 9> cells;  // gamma1, lambda1, q1, ... (printed values)
};

// gamma printed = round-up to 6 decimals, lambda = round-down to 4,
// q = round-up to 4; a computed value must sit inside the matching band.
bool row_in_bands(double b, const std::array<double, 9>& printed,
                  double& worst_margin) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const GammaResult g = gamma(n, b);
    const double pg = printed[static_cast<std::size_t>(3 * (n - 1))];
    const double pl = printed[static_cast<std::size_t>(3 * (n - 1) + 1)];
    const double pq = printed[static_cast<std::size_t>(3 * (n - 1) + 2)];
    ok &= g.gamma > pg - 1e-6 - 1e-9 && g.gamma <= pg + 1e-9;
    ok &= g.lambda_n >= pl - 1e-9 && g.lambda_n < pl + 1e-4 + 1e-9;
    ok &= g.q_at_lambda > pq - 1e-4 - 1e-9 && g.q_at_lambda <= pq + 1e-9;
    // Distance to the nearest exact band edge, for the diagnostic line.
    worst_margin = std::min({worst_margin, pg - g.gamma,
                             g.gamma - (pg - 1e-6), g.lambda_n - pl,
                             (pl + 1e-4) - g.lambda_n, pq - g.q_at_lambda,
                             g.q_at_lambda - (pq - 1e-4)});
  }
  return ok;
}

bool c2_table(std::string& detail) {
  static const std::vector<RefRow> rows = {
      {1.00, {0.724612, 0.3108, 0.7247, 0.636620, 0.4052, 0.6367, 0.594972, 0.4466, 0.5950}},
      {1.0001, {0.729674, 0.3091, 0.7247, 0.643222, 0.4033, 0.6367, 0.602250, 0.4447, 0.5950}},
      {1.001, {0.740517, 0.3057, 0.7248, 0.657374, 0.3992, 0.6368, 0.617864, 0.4407, 0.5952}},
      {1.005, {0.759711, 0.2999, 0.7253, 0.682462, 0.3924, 0.6374, 0.645582, 0.4340, 0.5957}},
      {1.01, {0.773696, 0.2960, 0.7258, 0.700771, 0.3877, 0.6380, 0.665840, 0.4293, 0.5964}},
      {1.05, {0.828077, 0.2821, 0.7293, 0.772182, 0.3714, 0.6422, 0.745088, 0.4130, 0.6005}},
      {1.10, {0.863075, 0.2743, 0.7325, 0.818315, 0.3621, 0.6460, 0.796466, 0.4038, 0.6043}},
      {1.20, {0.903490, 0.2662, 0.7370, 0.871750, 0.3526, 0.6512, 0.856138, 0.3943, 0.6095}},
      {1.30, {0.927590, 0.2618, 0.7399, 0.903693, 0.3473, 0.6547, 0.891887, 0.3890, 0.6130}},
      {1.40, {0.943762, 0.2590, 0.7421, 0.925160, 0.3440, 0.6573, 0.915944, 0.3857, 0.6156}},
      {1.50, {0.955288, 0.2570, 0.7436, 0.940474, 0.3417, 0.6591, 0.933121, 0.3834, 0.6174}},
      {1.60, {0.963824, 0.2556, 0.7448, 0.951825, 0.3400, 0.6605, 0.945860, 0.3817, 0.6188}},
      {1.70, {0.970322, 0.2546, 0.7457, 0.960468, 0.3387, 0.6616, 0.955565, 0.3804, 0.6199}},
      {1.90, {0.979362, 0.2531, 0.7470, 0.972502, 0.3370, 0.6631, 0.969083, 0.3787, 0.6214}},
      {2.00, {0.982560, 0.2526, 0.7475, 0.976760, 0.3364, 0.6637, 0.973868, 0.3781, 0.6220}},
      {3.00, {0.995576, 0.2506, 0.7494, 0.994102, 0.3341, 0.6659, 0.993365, 0.3757, 0.6243}},
      {4.00, {0.998416, 0.2502, 0.7498, 0.997888, 0.3336, 0.6664, 0.997624, 0.3752, 0.6248}},
      {5.00, {0.999306, 0.2501, 0.7499, 0.999075, 0.3334, 0.6666, 0.998959, 0.3751, 0.6249}},
  };
  // The widely circulated version of this table mislabels its 1.80 row as
  // 1.79; its printed cells are validated at abscissa 1.80, and the repaired
  // row (shipped in tests/golden/table1.csv) is validated at 1.79.
  static const RefRow source_179_row = {
      1.80, {0.975371, 0.2538, 0.7464, 0.967189, 0.3378, 0.6624, 0.963114, 0.3795, 0.6208}};
  static const RefRow repaired_179_row = {
      1.79, {0.974919, 0.2538, 0.7464, 0.966587, 0.3379, 0.6624, 0.962438, 0.3796, 0.6207}};

  bool ok = true;
  double worst_margin = 1.0;
  int cells = 0;
  for (const RefRow& row : rows) {
    ok &= row_in_bands(row.b, row.cells, worst_margin);
    cells += 9;
  }
  ok &= row_in_bands(source_179_row.b, source_179_row.cells, worst_margin);
  ok &= row_in_bands(repaired_179_row.b, repaired_179_row.cells, worst_margin);
  cells += 18;

  // b -> infinity limits: gamma_n -> 1, lambda_n -> n/(2(n+1)),
  // q_n -> (n+2)/(2(n+1)).
  for (int n = 1; n <= 3; ++n) {
    const GammaResult g = gamma(n, 1.0e8);
    ok &= std::abs(g.gamma - 1.0) < 1e-6;
    ok &= std::abs(g.lambda_n - n / (2.0 * (n + 1.0))) < 1e-4;
    ok &= std::abs(g.q_at_lambda - (n + 2.0) / (2.0 * (n + 1.0))) < 1e-4;
  }
  std::ostringstream os;
  os << cells << " table cells inside their rounding bands "
     << "(min boundary margin " << fmt(worst_margin)
     << "), infinity limits within 1e-4";
  detail = os.str();
  return ok;
}

// --- criterion 3: analytic q vs brute-force oracle ---------------------------

bool c3_oracle(std::string& detail) {
  double max_gap = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const double hi = critical_constants().lambda_star_upper(n);
    for (int j = 0; j < 50; ++j) {
      const double lam = hi * j / 49.0;
      const double gap = std::abs(q_oracle(n, lam, 1e-9).q - q(n, lam).q);
      max_gap = std::max(max_gap, gap);
    }
  }
  detail = "max |oracle - analytic| = " + fmt(max_gap) +
           " over 150 lambdas (tol 1e-6)";
  return max_gap < 1e-6;
}

// --- criterion 4: random-law inequality harness ------------------------------

bool c4_harness(std::string& detail) {
  HarnessConfig cfg;
  cfg.seed = 0;
  cfg.cases = 1000;
  cfg.check_equality = false;          // covered by criterion 5
  cfg.check_oracle_agreement = false;  // covered by criterion 3
  const HarnessResult res = run_harness(cfg);
  double worst = 0.0;
  for (const BoundReport& r : res.worst) worst = std::min(worst, r.slack);
  std::ostringstream os;
  os << res.laws_checked << " laws, " << res.checks_run
     << " checks, worst slack " << fmt(worst) << " (tol -1e-12), "
     << res.violations.size() << " violations";
  detail = os.str();
  return res.pass && res.violations.empty() &&
         res.checks_run == 1000LL * 561LL;
}

// --- criterion 5: equality attainment ----------------------------------------

bool c5_equality(std::string& detail) {
  const CriticalConstants& cc = critical_constants();
  double worst = 0.0;
  const auto sweep = [&](EqualityCase c, double theta) {
    std::vector<double> grid;
    for (int j = 1; j <= 20; ++j) grid.push_back(theta * j / 20.0);
    worst = std::max(worst, equality_attainment(c, grid));
  };
  sweep(EqualityCase::f_order3_theta3, cc.theta3_star);
  sweep(EqualityCase::fprime_order2_pi, std::numbers::pi);
  sweep(EqualityCase::fsecond_order1_theta1, cc.theta1_star);
  sweep(EqualityCase::f_order1_theta1, cc.theta1_star);

  // Two-point laws attain the third-moment bound exactly.
  double worst_tm = 0.0;
  for (int j = 0; j < 50; ++j) {
    const double b = 1.0 + 19.0 * j / 49.0;
    const MomentProfile mp = moments(to_distribution(extremal_two_point(b)), 3);
    worst_tm = std::max(
        worst_tm, std::abs(std::abs(mp.alpha[2]) - big_a(mp.b) * mp.b));
  }
  detail = "max bound-vs-value gap " + fmt(worst) +
           " over 80 grid points (tol 1e-9); third-moment equality gap " +
           fmt(worst_tm) + " over 50 laws (tol 1e-10)";
  return worst < 1e-9 && worst_tm < 1e-10;
}

// --- criterion 6: structural monotonicity and shape ---------------------------

bool c6_structure(std::string& detail) {
  bool ok = true;
  // q_n strictly decreasing on [0, lambda^*].
  for (int n = 1; n <= 3; ++n) {
    const double hi = critical_constants().lambda_star_upper(n);
    double prev = q(n, 0.0).q;
    for (int j = 1; j < 200; ++j) {
      const double cur = q(n, hi * j / 199.0).q;
      ok &= cur < prev;
      prev = cur;
    }
  }
  // Flat branch: lambda + q = 1 exactly (within 1e-10).
  double worst_flat = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const double lo = CriticalConstants::lambda_star_lower(n);
    for (int j = 0; j <= 50; ++j) {
      const double lam = lo * j / 50.0;
      worst_flat = std::max(worst_flat, std::abs(lam + q(n, lam).q - 1.0));
    }
  }
  ok &= worst_flat <= 1e-10;
  // A, bA, gamma_n, b*gamma_n all increasing and concave in b on [1, 50].
  const int pts = 100;
  std::array<std::vector<double>, 8> seqs;
  for (int j = 0; j < pts; ++j) {
    const double b = 1.0 + 49.0 * j / (pts - 1.0);
    const double a = big_a(b);
    seqs[0].push_back(a);
    seqs[1].push_back(b * a);
    for (int n = 1; n <= 3; ++n) {
      const double g = gamma(n, b).gamma;
      seqs[static_cast<std::size_t>(1 + n)].push_back(g);
      seqs[static_cast<std::size_t>(4 + n)].push_back(b * g);
    }
  }
  double worst_second_diff = -1.0;
  for (const std::vector<double>& s : seqs) {
    for (int j = 0; j + 1 < pts; ++j) ok &= s[static_cast<std::size_t>(j + 1)] > s[static_cast<std::size_t>(j)];
    for (int j = 0; j + 2 < pts; ++j) {
      const double d2 = s[static_cast<std::size_t>(j + 2)] -
                        2.0 * s[static_cast<std::size_t>(j + 1)] +
                        s[static_cast<std::size_t>(j)];
      worst_second_diff = std::max(worst_second_diff, d2);
    }
  }
  ok &= worst_second_diff <= 1e-9;
  // gamma_n(1) = q_min(n).
  for (int n = 1; n <= 3; ++n)
    ok &= std::abs(gamma(n, 1.0).gamma - q_min(n)) < 1e-10;
  detail = "q decreasing (3x200 pts), flat identity " + fmt(worst_flat) +
           ", 8 curves increasing+concave (max 2nd diff " +
           fmt(worst_second_diff) + ")";
  return ok;
}

// --- criterion 7: single-component suprema ------------------------------------

double sup_scan(const std::function<double(double)>& f) {
  const double step = 1e-3;
  const double x_max = 64.0 * std::numbers::pi;
  double best = 0.0;
  double best_x = step;
  for (long k = 1; static_cast<double>(k) * step <= x_max; ++k) {
    const double x = static_cast<double>(k) * step;
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double h = step;
  for (int it = 0; it < 10; ++it) {
    const double lo = std::max(h / 10.0, best_x - h);
    const double hi = best_x + h;
    for (double x = lo; x <= hi; x += h / 10.0) {
      const double v = f(x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    h /= 10.0;
  }
  return best;
}

bool c7_component_sups(std::string& detail) {
  // sup over x > 0 of the single-component deviations equals q_min(n):
  //   n=1: (1 - cos x)/x, n=2: 2(x - sin x)/x^2, n=3: 6(cos x - 1 + x^2/2)/x^3.
  const double s1 = sup_scan([](double x) { return (1.0 - std::cos(x)) / x; });
  const double s2 =
      sup_scan([](double x) { return 2.0 * (x - std::sin(x)) / (x * x); });
  const double s3 = sup_scan([](double x) {
    return 6.0 * (std::cos(x) - 1.0 + x * x / 2.0) / (x * x * x);
  });
  const double g1 = std::abs(s1 - q_min(1));
  const double g2 = std::abs(s2 - q_min(2));
  const double g3 = std::abs(s3 - q_min(3));
  const double worst = std::max({g1, g2, g3});
  detail = "scanned sup vs q_min gaps " + fmt(g1) + ", " + fmt(g2) + ", " +
           fmt(g3) + " (tol 1e-9)";
  return worst < 1e-9;
}

}  // namespace

int main() {
  criterion(1, "critical constants match their reference digits",
            c1_constants);
  criterion(2, "reference table reproduced within its rounding bands",
            c2_table);
  criterion(3, "brute-force oracle agrees with the analytic q", c3_oracle);
  criterion(4, "every bound holds on 1000 random laws", c4_harness);
  criterion(5, "equality cases attain their bounds", c5_equality);
  criterion(6, "monotonicity and concavity structure", c6_structure);
  criterion(7, "single-component suprema equal q_min", c7_component_sups);
  if (g_failures == 0)
    std::printf("acceptance: all 7 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures;
}
