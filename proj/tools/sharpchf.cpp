// sharpchf: command-line driver for the sharp characteristic-function
// Taylor-remainder constants.
//
// Subcommands:
//   constants  print the critical angles and constants
//   q          evaluate q_n(lambda) (analytic or brute-force oracle)
//   table      print the gamma_n(b) reference table
//   verify     run the inequality harness (random laws or a law file)
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
//
// Display rounding in text/csv output: upper-bound quantities (q, q_min,
// gamma, kappa) are rounded up at the requested precision, angles and
// lambdas are rounded down, so displayed values are always on the safe
// side. JSON output always carries full-precision doubles.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sharpchf/sharpchf.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sharpchf;

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string up(double v, int p) { return detail::format_directed(v, p, true); }
std::string down(double v, int p) {
  return detail::format_directed(v, p, false);
}

const char* to_string(Branch b) {
  return b == Branch::flat ? "flat" : "interior";
}
const char* to_string(Method m) {
  return m == Method::analytic ? "analytic" : "oracle";
}

/// Write content to stdout or to --out; returns 0 or 2 (unwritable path).
int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  f << content;
  f.flush();
  if (!f) {
    std::cerr << "error: failed while writing '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

struct Common {
  std::string format;  // resolved after parsing (per-subcommand default)
  int precision = 6;
  std::string out;
};

void add_common(CLI::App* sub, Common& c, bool with_precision) {
  sub->add_option("--format", c.format, "output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  if (with_precision)
    sub->add_option("--precision", c.precision,
                    "decimal places for text/csv display (default 6)")
        ->check(CLI::Range(1, 15));
  sub->add_option("--out", c.out, "write output to this file");
}

// --- constants ---------------------------------------------------------------

int run_constants(const Common& c) {
  const CriticalConstants& cc = critical_constants();
  const int p = c.precision;
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    j["theta1_star"] = cc.theta1_star;
    j["theta3_star"] = cc.theta3_star;
    j["kappa1"] = cc.kappa1;
    j["kappa3"] = cc.kappa3;
    j["lambda_star_lower"] = {CriticalConstants::lambda_star_lower(1),
                              CriticalConstants::lambda_star_lower(2),
                              CriticalConstants::lambda_star_lower(3)};
    j["lambda_star_upper"] = {cc.lambda_upper[0], cc.lambda_upper[1],
                              cc.lambda_upper[2]};
    j["q_min"] = {q_min(1), q_min(2), q_min(3)};
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "name,value\n";
    os << "theta1_star," << full(cc.theta1_star) << "\n";
    os << "theta3_star," << full(cc.theta3_star) << "\n";
    os << "kappa1," << full(cc.kappa1) << "\n";
    os << "kappa3," << full(cc.kappa3) << "\n";
    for (int n = 1; n <= 3; ++n)
      os << "lambda_star_lower_" << n << ","
         << full(CriticalConstants::lambda_star_lower(n)) << "\n";
    for (int n = 1; n <= 3; ++n)
      os << "lambda_star_upper_" << n << ","
         << full(cc.lambda_upper[n - 1]) << "\n";
    for (int n = 1; n <= 3; ++n)
      os << "q_min_" << n << "," << full(q_min(n)) << "\n";
  } else {
    os << "theta1_star = " << down(cc.theta1_star, p) << "\n";
    os << "theta3_star = " << down(cc.theta3_star, p) << "\n";
    os << "kappa1 = " << down(cc.kappa1, p) << "\n";
    os << "kappa3 = " << down(cc.kappa3, p) << "\n";
    for (int n = 1; n <= 3; ++n)
      os << "lambda_star_lower_" << n << " = "
         << down(CriticalConstants::lambda_star_lower(n), p) << "\n";
    for (int n = 1; n <= 3; ++n)
      os << "lambda_star_upper_" << n << " = "
         << down(cc.lambda_upper[n - 1], p) << "\n";
    for (int n = 1; n <= 3; ++n)
      os << "q_min_" << n << " = " << up(q_min(n), p) << "\n";
  }
  return emit(os.str(), c.out);
}

// --- q -----------------------------------------------------------------------

int run_q(const Common& c, int n, double lambda, bool use_oracle, double tol) {
  QEvaluation ev;
  if (use_oracle) {
    ev = q_oracle(n, lambda, tol);
  } else {
    try {
      ev = q(n, lambda);
    } catch (const std::domain_error& e) {
      std::cerr << "error: " << e.what()
                << " (pass --oracle for a brute-force evaluation)\n";
      return 2;
    }
  }
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["lambda"] = lambda;
    j["q"] = ev.q;
    j["theta"] = ev.theta;
    j["branch"] = to_string(ev.branch);
    j["method"] = to_string(ev.method);
    j["tol"] = ev.tol;
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "n,lambda,q,theta,branch,method,tol\n";
    os << n << "," << full(lambda) << "," << full(ev.q) << ","
       << full(ev.theta) << "," << to_string(ev.branch) << ","
       << to_string(ev.method) << "," << full(ev.tol) << "\n";
  } else {
    os << "q = " << up(ev.q, c.precision) << "\n";
    os << "theta = " << down(ev.theta, c.precision) << "\n";
    os << "branch = " << to_string(ev.branch) << "\n";
    os << "method = " << to_string(ev.method) << "\n";
    if (ev.method == Method::oracle) os << "tol = " << full(ev.tol) << "\n";
  }
  return emit(os.str(), c.out);
}

// --- table -------------------------------------------------------------------

int run_table(const Common& c, const std::vector<std::string>& b_labels) {
  const std::vector<std::string>& labels =
      b_labels.empty() ? default_table_b_values() : b_labels;
  for (const std::string& label : labels) {
    double value = 0.0;
    bool is_inf = false;
    if (!parse_b_label(label, value, is_inf)) {
      std::cerr << "error: invalid b value '" << label
                << "' (need a decimal >= 1 or inf)\n";
      return 2;
    }
  }
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const std::string& label : labels) {
      double value = 0.0;
      bool is_inf = false;
      parse_b_label(label, value, is_inf);
      ordered_json row;
      row["b"] = label;
      if (is_inf) {
        row["gamma"] = {1.0, 1.0, 1.0};
        row["lambda"] = {1.0 / 4.0, 1.0 / 3.0, 3.0 / 8.0};
        row["q"] = {3.0 / 4.0, 2.0 / 3.0, 5.0 / 8.0};
      } else {
        ordered_json gs = ordered_json::array();
        ordered_json ls = ordered_json::array();
        ordered_json qs = ordered_json::array();
        for (int n = 1; n <= 3; ++n) {
          const GammaResult g = gamma(n, value);
          gs.push_back(g.gamma);
          ls.push_back(g.lambda_n);
          qs.push_back(g.q_at_lambda);
        }
        row["gamma"] = gs;
        row["lambda"] = ls;
        row["q"] = qs;
      }
      arr.push_back(row);
    }
    os << arr.dump(2) << "\n";
  } else {
    const std::vector<TableRow> rows = table1(labels);
    if (c.format == "csv") {
      os << table_csv_header() << "\n";
      for (const TableRow& row : rows) {
        os << row.b;
        for (const std::string& cell : row.cells) os << "," << cell;
        os << "\n";
      }
    } else {
      char line[256];
      std::snprintf(line, sizeof(line),
                    "%-8s %-10s %-10s %-10s %-10s %-10s %-10s %-10s %-10s %s\n",
                    "b", "gamma1", "lambda1", "q1", "gamma2", "lambda2", "q2",
                    "gamma3", "lambda3", "q3");
      os << line;
      for (const TableRow& row : rows) {
        std::snprintf(line, sizeof(line),
                      "%-8s %-10s %-10s %-10s %-10s %-10s %-10s %-10s %-10s %s\n",
                      row.b.c_str(), row.cells[0].c_str(), row.cells[1].c_str(),
                      row.cells[2].c_str(), row.cells[3].c_str(),
                      row.cells[4].c_str(), row.cells[5].c_str(),
                      row.cells[6].c_str(), row.cells[7].c_str(),
                      row.cells[8].c_str());
        os << line;
      }
    }
  }
  return emit(os.str(), c.out);
}

// --- verify ------------------------------------------------------------------

ordered_json reports_json(const std::vector<BoundReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const BoundReport& r : reports) {
    ordered_json j;
    j["bound"] = to_string(r.id);
    j["slack"] = r.slack;
    j["at_t"] = r.at_t;
    j["law"] = r.law_digest;
    arr.push_back(j);
  }
  return arr;
}

int run_verify(const Common& c, std::uint64_t seed, int cases,
               const std::string& law_file) {
  const bool single_law = !law_file.empty();
  HarnessResult res;
  if (single_law) {
    std::ifstream f(law_file, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read law file '" << law_file << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    DiscreteDistribution law = law_from_json(buf.str());
    const MomentProfile mp = moments(law, 2);
    if (std::abs(mp.alpha[0]) > 1e-9 || std::abs(mp.alpha[1] - 1.0) > 1e-9)
      law = standardize(law);
    res = verify_law(law);
  } else {
    HarnessConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    res = run_harness(cfg);
  }

  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    if (single_law) {
      j["law_file"] = law_file;
    } else {
      j["seed"] = seed;
      j["cases"] = cases;
    }
    j["laws_checked"] = res.laws_checked;
    j["checks_run"] = res.checks_run;
    j["worst"] = reports_json(res.worst);
    j["violations"] = reports_json(res.violations);
    if (!single_law) {
      j["equality_max_deviation"] = res.equality_max_deviation;
      j["oracle_max_gap"] = res.oracle_max_gap;
    }
    j["pass"] = res.pass;
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "bound,slack,at_t,law\n";
    for (const BoundReport& r : res.worst)
      os << to_string(r.id) << "," << full(r.slack) << "," << full(r.at_t)
         << "," << r.law_digest << "\n";
  } else {
    os << "laws checked: " << res.laws_checked << "\n";
    os << "checks run: " << res.checks_run << "\n";
    os << "worst slack per bound family:\n";
    char line[160];
    for (const BoundReport& r : res.worst) {
      std::snprintf(line, sizeof(line), "  %-20s %12.5e  (t = %.6g, law %s)\n",
                    to_string(r.id), r.slack, r.at_t, r.law_digest.c_str());
      os << line;
    }
    if (!single_law) {
      std::snprintf(line, sizeof(line), "equality max deviation: %.5e\n",
                    res.equality_max_deviation);
      os << line;
      std::snprintf(line, sizeof(line), "oracle max gap: %.5e\n",
                    res.oracle_max_gap);
      os << line;
    }
    os << "violations: " << res.violations.size() << "\n";
    for (const BoundReport& r : res.violations) {
      std::snprintf(line, sizeof(line), "  %-20s %12.5e  (t = %.6g, law %s)\n",
                    to_string(r.id), r.slack, r.at_t, r.law_digest.c_str());
      os << line;
    }
    os << "result: " << (res.pass ? "PASS" : "FAIL") << "\n";
  }
  const int rc = emit(os.str(), c.out);
  if (rc != 0) return rc;
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sharp constants for Taylor-remainder bounds on characteristic "
      "functions"};
  app.require_subcommand(1);

  Common c_constants, c_q, c_table, c_verify;

  CLI::App* sub_constants =
      app.add_subcommand("constants", "print the critical constants");
  add_common(sub_constants, c_constants, true);

  CLI::App* sub_q =
      app.add_subcommand("q", "evaluate q_n(lambda) and its maximizer angle");
  add_common(sub_q, c_q, true);
  int q_n = 0;
  double q_lambda = 0.0;
  bool q_use_oracle = false;
  double q_tol = 1e-9;
  sub_q->add_option("-n,--order", q_n, "remainder order n")->required();
  sub_q->add_option("--lambda", q_lambda, "weight of the top Taylor term")
      ->required();
  sub_q->add_flag("--oracle", q_use_oracle,
                  "evaluate by brute-force scan (any n >= 1, any lambda >= 0)");
  sub_q->add_option("--tol", q_tol, "oracle tolerance (default 1e-9)");

  CLI::App* sub_table =
      app.add_subcommand("table", "print the gamma_n(b) reference table");
  add_common(sub_table, c_table, false);
  std::vector<std::string> table_b;
  sub_table->add_option("--b", table_b,
                        "b values (decimals >= 1 or inf; default: the "
                        "standard list)");

  CLI::App* sub_verify = app.add_subcommand(
      "verify", "verify every bound on random laws or a law file");
  add_common(sub_verify, c_verify, false);
  std::uint64_t v_seed = 42;
  int v_cases = 100;
  std::string v_law_file;
  sub_verify->add_option("--seed", v_seed, "harness seed (default 42)");
  sub_verify->add_option("--cases", v_cases,
                         "number of random laws (default 100)");
  sub_verify->add_option("--law-file", v_law_file,
                         "verify this JSON law instead of random ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // Per-subcommand default format.
  if (c_constants.format.empty()) c_constants.format = "text";
  if (c_q.format.empty()) c_q.format = "text";
  if (c_table.format.empty()) c_table.format = "csv";
  if (c_verify.format.empty()) c_verify.format = "text";

  try {
    if (sub_constants->parsed()) return run_constants(c_constants);
    if (sub_q->parsed()) return run_q(c_q, q_n, q_lambda, q_use_oracle, q_tol);
    if (sub_table->parsed()) return run_table(c_table, table_b);
    if (sub_verify->parsed())
      return run_verify(c_verify, v_seed, v_cases, v_law_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
