#include "fracres/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fracres {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

void Report::add(std::string name, double residual, double tolerance) {
  const bool ok = !std::isnan(residual) && residual <= tolerance;
  rows.push_back({std::move(name), residual, tolerance, ok});
}

void Report::note(std::string key, std::string value) {
  environment.emplace_back(std::move(key), std::move(value));
}

void Report::append(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  environment.insert(environment.end(), other.environment.begin(),
                     other.environment.end());
}

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

void print_table(std::ostream& os, const Report& r) {
  std::size_t width = 5;
  for (const auto& row : r.rows) width = std::max(width, row.name.size());
  const auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  os << pad("check") << "  " << "   residual" << "  " << "  tolerance" << "  result\n";
  for (const auto& row : r.rows) {
    os << pad(row.name) << "  " << fmt("%11.3e", row.residual) << "  "
       << fmt("%11.3e", row.tolerance) << "  " << (row.pass ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& [k, v] : r.environment) os << "# " << k << " = " << v << '\n';
  os << (r.passed() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
}

void write_report_csv(std::ostream& os, const Report& r) {
  os << "check,residual,tolerance,pass\n";
  for (const auto& row : r.rows) {
    os << row.name << ',' << fmt("%.17g", row.residual) << ','
       << fmt("%.17g", row.tolerance) << ',' << (row.pass ? 1 : 0) << '\n';
  }
}

}  // namespace fracres
