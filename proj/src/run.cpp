#include "fracres/run.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "fracres/verify_suites.hpp"

namespace fracres {

namespace {

void put(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void summary(std::ostream& out, const SolveResult& r) {
  out << "iterations=" << r.iterations << " res_fp=";
  put(out, r.fixed_point_residual);
  out << " res_volterra=";
  put(out, r.volterra_residual);
  out << " max_excursion=";
  put(out, r.max_excursion);
  out << " converged=" << (r.converged ? "true" : "false") << '\n';
}

}  // namespace

void write_csv(const SolveResult& result, const ConfigFile& cfg, std::ostream& os,
               bool nodal) {
  const std::size_t n_modes = cfg.n_modes;
  const std::size_t m = cfg.m_collocation;
  os << "t,res_fp,res_volterra";
  for (std::size_t n = 1; n <= n_modes; ++n) os << ",c_" << n;
  if (nodal) {
    for (std::size_t j = 1; j <= m; ++j) os << ",u_" << j;
  }
  os << '\n';
  if (result.trajectory.empty()) return;
  const SineTransform tr(n_modes, m);
  for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
    put(os, result.grid.node(i));
    os << ',';
    put(os, i < result.res_fp.size() ? result.res_fp[i] : 0.0);
    os << ',';
    put(os, i < result.res_volterra.size() ? result.res_volterra[i] : 0.0);
    const SpectralField& u = result.trajectory[i];
    for (std::size_t n = 1; n <= n_modes; ++n) {
      os << ',';
      put(os, u.mode(n));
    }
    if (nodal) {
      const NodalField v = tr.inverse(u);
      for (Eigen::Index j = 0; j < v.samples.size(); ++j) {
        os << ',';
        put(os, v.samples(j));
      }
    }
    os << '\n';
  }
}

void write_csv(const SolveResult& result, const ConfigFile& cfg, const std::string& path,
               bool nodal) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  write_csv(result, cfg, f, nodal);
  f.flush();
  if (!f) throw std::runtime_error(path + ": write failed");
}

int run_solve(const ConfigFile& cfg, const std::string& out_path, bool nodal,
              std::ostream& out, std::ostream& err) {
  try {
    const ProblemSpec spec = cfg.problem();
    int status = kExitOk;
    SolveResult result = [&] {
      try {
        return picard_solve(spec, cfg.grid(), cfg.picard());
      } catch (const NonConvergence& e) {
        status = kExitNonConvergence;
        err << "error: " << e.what() << '\n';
        return e.partial();
      }
    }();
    if (!out_path.empty()) write_csv(result, cfg, out_path, nodal);
    summary(out, result);
    return status;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_verify(const std::string& suite, const ConfigFile* cfg, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  if (!is_known_suite(suite)) {
    err << "error: unknown suite '" << suite << "'; expected one of";
    for (const auto& s : suite_names()) err << ' ' << s;
    err << '\n';
    return kExitUsage;
  }
  VerifySettings settings;
  if (cfg != nullptr) {
    settings.alpha = cfg->alpha;
    settings.T = cfg->T;
    settings.n_steps = cfg->n_steps;
    settings.n_modes = cfg->n_modes;
  }
  try {
    const Report r = run_suite(suite, settings);
    print_table(out, r);
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error(out_path + ": cannot open for writing");
      write_report_csv(f, r);
      if (!f) throw std::runtime_error(out_path + ": write failed");
    }
    return r.passed() ? kExitOk : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional resolvent families and semilinear Volterra solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  bool nodal = false;
  auto* solve = app.add_subcommand("solve", "Solve the configured problem, write a CSV");
  solve->add_option("--config", config_path, "JSON problem file")->required();
  solve->add_option("--out", out_path, "CSV trajectory output");
  solve->add_flag("--nodal", nodal, "Append nodal samples u_1..u_M");

  std::string suite = "all";
  std::string verify_config;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite,
                     "specfun, fracalc, spectral, families, chenli or all");
  verify->add_option("--config", verify_config, "Take alpha, T, n_steps, n_modes from here");
  verify->add_option("--out", verify_out, "Report CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (*solve) {
    try {
      return run_solve(parse_config(config_path), out_path, nodal, out, err);
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  ConfigFile cfg;
  const ConfigFile* cfg_ptr = nullptr;
  if (!verify_config.empty()) {
    try {
      cfg = parse_config(verify_config);
      cfg_ptr = &cfg;
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return run_verify(suite, cfg_ptr, verify_out, out, err);
}

}  // namespace fracres
