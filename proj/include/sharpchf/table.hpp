#pragma once

// Reference table of gamma_n(b), lambda_n(b), q_n(lambda_n(b)) for n = 1..3
// over a standard list of b values, with contract rounding: gamma rounded up
// to 6 decimals, lambda rounded down to 4, q rounded up to 4 (upper-bound
// constants round toward the safe side).

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "sharpchf/moment_bounds.hpp"

namespace sharpchf {

namespace detail {

/// Directed decimal rounding of a nonnegative value to k digits, emitted as
/// a fixed-point string. A small guard on the scaled value keeps exactly
/// representable decimals on their own digit.
inline std::string format_directed(double x, int k, bool round_up) {
  long double scaled = static_cast<long double>(x);
  for (int i = 0; i < k; ++i) scaled *= 10.0L;
  const long double guard = 1e-7L;
  const long long r = static_cast<long long>(
      round_up ? std::ceil(scaled - guard) : std::floor(scaled + guard));
  unsigned long long m =
      r < 0 ? 0ULL : static_cast<unsigned long long>(r);  // values are >= 0
  std::string frac(static_cast<std::size_t>(k), '0');
  for (int i = k - 1; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + m % 10);
    m /= 10;
  }
  return std::to_string(m) + "." + frac;
}

}  // namespace detail

/// Decimal places used for the table cells.
struct RoundingSpec {
  int gamma_decimals = 6;   // rounded up
  int lambda_decimals = 4;  // rounded down
  int q_decimals = 4;       // rounded up
};

/// One table row: the b label as given, and the nine cells
/// gamma1, lambda1, q1, gamma2, lambda2, q2, gamma3, lambda3, q3 as strings.
/// ok = false carries a per-row error message instead (bad label).
struct TableRow {
  std::string b;
  bool ok;
  std::string error;
  std::array<std::string, 9> cells;
};

/// The standard abscissa list. Note: the row at 1.79 carries correctly
/// recomputed values (a widely circulated version of this table mislabels
/// its 1.80 row as 1.79).
inline const std::vector<std::string>& default_table_b_values() {
  static const std::vector<std::string> v = {
      "1",    "1.0001", "1.001", "1.005", "1.01", "1.05", "1.10",
      "1.20", "1.30",   "1.40",  "1.50",  "1.60", "1.70", "1.79",
      "1.90", "2.00",   "3.00",  "4.00",  "5.00", "inf"};
  return v;
}

/// Parse a b label: "inf" (any case) or a finite decimal >= 1.
/// Returns false on malformed or out-of-domain labels.
inline bool parse_b_label(const std::string& label, double& value,
                          bool& is_inf) {
  std::string s = label;
  for (char& c : s) c = static_cast<char>(std::tolower(c));
  if (s == "inf" || s == "infinity") {
    is_inf = true;
    value = 0.0;
    return true;
  }
  is_inf = false;
  char* end = nullptr;
  const double v = std::strtod(label.c_str(), &end);
  if (end == label.c_str() || *end != '\0') return false;
  if (!std::isfinite(v) || v < 1.0) return false;
  value = v;
  return true;
}

/// Exact limit cells for b = infinity: gamma_n = 1 and
/// (lambda_n, q_n) -> (n/(2(n+1)), (n+2)/(2(n+1))) as rationals.
inline const std::array<std::string, 9>& table_limit_cells() {
  static const std::array<std::string, 9> cells = {
      "1", "1/4", "3/4", "1", "1/3", "2/3", "1", "3/8", "5/8"};
  return cells;
}

/// Compute the table for the given labels (default rounding contract).
/// Invalid labels yield ok = false rows; valid rows are always computed.
inline std::vector<TableRow> table1(const std::vector<std::string>& b_labels,
                                    RoundingSpec rs = {}) {
  std::vector<TableRow> rows;
  rows.reserve(b_labels.size());
  for (const std::string& label : b_labels) {
    TableRow row{label, true, "", {}};
    double b = 0.0;
    bool is_inf = false;
    if (!parse_b_label(label, b, is_inf)) {
      row.ok = false;
      row.error = "invalid b value '" + label + "' (need a decimal >= 1 or inf)";
      rows.push_back(std::move(row));
      continue;
    }
    if (is_inf) {
      row.cells = table_limit_cells();
      rows.push_back(std::move(row));
      continue;
    }
    for (int n = 1; n <= 3; ++n) {
      const GammaResult g = gamma(n, b);
      const std::size_t base = static_cast<std::size_t>(3 * (n - 1));
      row.cells[base + 0] =
          detail::format_directed(g.gamma, rs.gamma_decimals, true);
      row.cells[base + 1] =
          detail::format_directed(g.lambda_n, rs.lambda_decimals, false);
      row.cells[base + 2] =
          detail::format_directed(g.q_at_lambda, rs.q_decimals, true);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// The CSV header matching the cell order of TableRow.
inline const char* table_csv_header() {
  return "b,gamma1,lambda1,q1,gamma2,lambda2,q2,gamma3,lambda3,q3";
}

}  // namespace sharpchf
