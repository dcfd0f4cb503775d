#pragma once

// JSON problem configuration.
//
//   {
//     "alpha": 1.5, "T": 1.0, "n_steps": 512, "n_modes": 8,
//     "beta": 0.5, "m_collocation": 16,
//     "initial_x": {"mode": 1, "scale": 1.0},     // or [c_1, c_2, ...]
//     "initial_y": [],                            // or a list of {"mode", "scale"}
//     "f": [{"mode": 1, "scale": 2.0, "poly_t": [1, 0, 1]}],
//     "h": {"name": "cubic", "coeffs": [], "kernel": {"c": 1, "rate": 0}},
//     "tol": 1e-8, "max_iter": 200, "damping": 1.0
//   }
//
// h names: zero, linear_memory, sin, cubic, polynomial.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracres/fracalc.hpp"
#include "fracres/solver.hpp"

namespace fracres {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModalTerm {
  std::size_t mode = 1;
  double scale = 1.0;
  bool operator==(const ModalTerm&) const = default;
};

/// Explicit coefficients plus a sum of scaled unit modes.
struct FieldProfile {
  std::vector<double> coeffs;
  std::vector<ModalTerm> terms;
  bool operator==(const FieldProfile&) const = default;

  SpectralField build(std::size_t n_modes) const;
};

/// scale * (sum_k poly_t[k] t^k) * e_mode
struct ForcingTerm {
  ModalTerm shape;
  std::vector<double> poly_t;
  bool operator==(const ForcingTerm&) const = default;
};

struct NonlinearitySpec {
  std::string name = "zero";
  std::vector<double> coeffs;
  double kernel_c = 1.0;
  double kernel_rate = 0.0;
  bool operator==(const NonlinearitySpec&) const = default;

  NonlinearityDescriptor build() const;
};

struct ConfigFile {
  double alpha = 0.0;
  double beta = 0.5;
  double T = 0.0;
  std::size_t n_steps = 0;
  std::size_t n_modes = 0;
  std::size_t m_collocation = 0;  // filled with 2 n_modes when absent
  FieldProfile initial_x;
  FieldProfile initial_y;
  std::vector<ForcingTerm> f;
  NonlinearitySpec h;
  double tol = 1e-8;
  std::size_t max_iter = 200;
  double damping = 1.0;

  bool operator==(const ConfigFile&) const = default;

  TimeGrid grid() const { return TimeGrid(T, n_steps); }
  ProblemSpec problem() const;
  PicardSettings picard() const { return {tol, max_iter, damping}; }
};

/// Throws ConfigError naming the field and its legal range.
void validate_config(const ConfigFile& cfg);

ConfigFile parse_config_text(const std::string& text, const std::string& origin = "config");
ConfigFile parse_config(const std::string& path);
/// JSON text that parses back to an equal ConfigFile.
std::string serialize_config(const ConfigFile& cfg);

}  // namespace fracres
