#pragma once

// Named verification suites run by `fracres verify`.

#include <cstddef>
#include <string>
#include <vector>

#include "fracres/report.hpp"

namespace fracres {

struct VerifySettings {
  double alpha = 1.5;
  double T = 2.0;
  std::size_t n_steps = 2048;
  std::size_t n_modes = 4;
};

/// specfun, fracalc, spectral, families, chenli, all.
const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& name, const VerifySettings& settings = {});

Report verify_specfun();
Report verify_fracalc();
Report verify_spectral();
Report verify_families(const VerifySettings& settings);
Report verify_chenli(const VerifySettings& settings);

}  // namespace fracres
