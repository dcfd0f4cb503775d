#pragma once

// Command-line front end: `fracres solve` and `fracres verify`.

#include <iosfwd>
#include <string>

#include "fracres/config.hpp"
#include "fracres/solver.hpp"

namespace fracres {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitUsage = 64;

/// Header `t,res_fp,res_volterra,c_1..c_N[,u_1..u_M]`, one row per node,
/// 17 significant digits. Nodal columns are the samples at the M
/// collocation points.
void write_csv(const SolveResult& result, const ConfigFile& cfg, std::ostream& os,
               bool nodal = false);
/// Throws std::runtime_error naming `path` on I/O failure.
void write_csv(const SolveResult& result, const ConfigFile& cfg, const std::string& path,
               bool nodal = false);

/// Solves, writes the CSV and prints a one-line summary to `out`.
/// 0 on convergence, 2 on non-convergence (CSV of the last iterate is still
/// written), 1 on other errors.
int run_solve(const ConfigFile& cfg, const std::string& out_path, bool nodal,
              std::ostream& out, std::ostream& err);

/// Runs a suite, prints the table, writes the report CSV when `out_path` is
/// non-empty. 0 iff every row passes, 64 for an unknown suite.
int run_verify(const std::string& suite, const ConfigFile* cfg, const std::string& out_path,
               std::ostream& out, std::ostream& err);

/// Entry point used by the executable.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fracres
