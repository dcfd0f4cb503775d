#pragma once

// Verification report: one row per checked identity.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fracres {

struct CheckRow {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct Report {
  std::vector<CheckRow> rows;
  /// Echo of the run parameters (grid sizes, alpha, ...).
  std::vector<std::pair<std::string, std::string>> environment;

  /// Adds a row; pass is residual <= tolerance (NaN fails).
  void add(std::string name, double residual, double tolerance);
  void note(std::string key, std::string value);
  void append(const Report& other);

  /// True iff every row passes. An empty report passes.
  bool passed() const;
};

/// Aligned table, one row per check, then the environment.
void print_table(std::ostream& os, const Report& r);
/// `check,residual,tolerance,pass` rows, 17 significant digits.
void write_report_csv(std::ostream& os, const Report& r);

}  // namespace fracres
