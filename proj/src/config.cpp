#include "fracres/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fracres {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ConfigError(origin + ": " + msg);
}

double get_number(const json& j, const std::string& field, const std::string& origin) {
  if (!j.is_number()) fail(origin, "field '" + field + "' must be a number");
  return j.get<double>();
}

std::size_t get_count(const json& j, const std::string& field, const std::string& origin) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    fail(origin, "field '" + field + "' must be a non-negative integer");
  }
  const auto v = j.get<long long>();
  if (v < 0) fail(origin, "field '" + field + "' must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::vector<double> get_numbers(const json& j, const std::string& field,
                                const std::string& origin) {
  if (!j.is_array()) fail(origin, "field '" + field + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(get_number(v, field, origin));
  return out;
}

ModalTerm get_term(const json& j, const std::string& field, const std::string& origin) {
  ModalTerm t;
  if (!j.contains("mode")) fail(origin, "field '" + field + "' needs a 'mode'");
  t.mode = get_count(j.at("mode"), field + ".mode", origin);
  if (j.contains("scale")) t.scale = get_number(j.at("scale"), field + ".scale", origin);
  return t;
}

FieldProfile get_profile(const json& j, const std::string& field, const std::string& origin) {
  FieldProfile p;
  if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_number(); })) {
      p.coeffs = get_numbers(j, field, origin);
    } else {
      for (const auto& v : j) {
        if (!v.is_object()) {
          fail(origin, "field '" + field + "' must list numbers or {mode, scale} objects");
        }
        p.terms.push_back(get_term(v, field, origin));
      }
    }
    return p;
  }
  if (!j.is_object()) fail(origin, "field '" + field + "' must be an array or an object");
  if (j.contains("mode")) {
    p.terms.push_back(get_term(j, field, origin));
    return p;
  }
  for (const auto& [key, v] : j.items()) {
    if (key == "coeffs") {
      p.coeffs = get_numbers(v, field + ".coeffs", origin);
    } else if (key == "terms") {
      if (!v.is_array()) fail(origin, "field '" + field + ".terms' must be an array");
      for (const auto& t : v) p.terms.push_back(get_term(t, field + ".terms", origin));
    } else {
      fail(origin, "unknown field '" + field + "." + key + "'");
    }
  }
  return p;
}

json profile_json(const FieldProfile& p) {
  json terms = json::array();
  for (const auto& t : p.terms) terms.push_back({{"mode", t.mode}, {"scale", t.scale}});
  return {{"coeffs", p.coeffs}, {"terms", terms}};
}

ForcingTerm get_forcing_term(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "field 'f' entries must be objects");
  ForcingTerm t;
  t.shape = get_term(j, "f", origin);
  for (const auto& [key, v] : j.items()) {
    if (key == "poly_t") {
      t.poly_t = get_numbers(v, "f.poly_t", origin);
    } else if (key != "mode" && key != "scale") {
      fail(origin, "unknown field 'f." + key + "'");
    }
  }
  if (t.poly_t.empty()) t.poly_t = {1.0};
  return t;
}

NonlinearitySpec get_h(const json& j, const std::string& origin) {
  NonlinearitySpec h;
  if (j.is_string()) {
    h.name = j.get<std::string>();
    return h;
  }
  if (!j.is_object()) fail(origin, "field 'h' must be a name or an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "name") {
      if (!v.is_string()) fail(origin, "field 'h.name' must be a string");
      h.name = v.get<std::string>();
    } else if (key == "coeffs") {
      h.coeffs = get_numbers(v, "h.coeffs", origin);
    } else if (key == "kernel") {
      if (!v.is_object()) fail(origin, "field 'h.kernel' must be an object");
      for (const auto& [kk, kv] : v.items()) {
        if (kk == "c") {
          h.kernel_c = get_number(kv, "h.kernel.c", origin);
        } else if (kk == "rate") {
          h.kernel_rate = get_number(kv, "h.kernel.rate", origin);
        } else {
          fail(origin, "unknown field 'h.kernel." + kk + "'");
        }
      }
    } else {
      fail(origin, "unknown field 'h." + key + "'");
    }
  }
  return h;
}

double poly_value(const std::vector<double>& a, double t) {
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double poly_slope(const std::vector<double>& a, double t) {
  double acc = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) acc = acc * t + static_cast<double>(k) * a[k];
  return acc;
}

void check_modes(const FieldProfile& p, const std::string& field, std::size_t n_modes) {
  if (!p.coeffs.empty() && p.coeffs.size() != n_modes) {
    throw ConfigError("field '" + field + "' lists " + std::to_string(p.coeffs.size()) +
                      " coefficients, n_modes is " + std::to_string(n_modes));
  }
  for (const auto& t : p.terms) {
    if (t.mode < 1 || t.mode > n_modes) {
      throw ConfigError("field '" + field + "' mode must lie in [1," +
                        std::to_string(n_modes) + "], got " + std::to_string(t.mode));
    }
  }
}

}  // namespace

SpectralField FieldProfile::build(std::size_t n_modes) const {
  SpectralField out = SpectralField::zero(n_modes);
  if (!coeffs.empty()) {
    if (coeffs.size() != n_modes) throw ConfigError("coefficient count != n_modes");
    for (std::size_t n = 1; n <= n_modes; ++n) out.mode(n) = coeffs[n - 1];
  }
  for (const auto& t : terms) out.mode(t.mode) += t.scale;
  return out;
}

NonlinearityDescriptor NonlinearitySpec::build() const {
  const MemoryKernel k{kernel_c, kernel_rate};
  if (name == "zero") return NonlinearityDescriptor::zero();
  if (name == "linear_memory") return NonlinearityDescriptor::linear_memory(k);
  if (name == "sin") return NonlinearityDescriptor::sine(k);
  if (name == "cubic") return NonlinearityDescriptor::cubic(k);
  if (name == "polynomial") return NonlinearityDescriptor::polynomial(coeffs, k);
  throw ConfigError("field 'h.name' must be one of zero, linear_memory, sin, cubic, "
                    "polynomial; got '" + name + "'");
}

void validate_config(const ConfigFile& c) {
  auto range = [](const std::string& field, const std::string& legal, double got) {
    std::ostringstream os;
    os << field << " must lie in " << legal << ", got " << got;
    throw ConfigError(os.str());
  };
  if (!(c.alpha > 1.0 && c.alpha <= 2.0)) range("alpha", "(1,2]", c.alpha);
  if (!(c.beta >= 0.0 && c.beta < 1.0)) range("beta", "[0,1)", c.beta);
  if (!(c.T > 0.0) || !std::isfinite(c.T)) range("T", "(0,inf)", c.T);
  if (c.n_steps < 4) range("n_steps", "[4,inf)", static_cast<double>(c.n_steps));
  if (c.n_modes < 1) range("n_modes", "[1,inf)", static_cast<double>(c.n_modes));
  if (c.m_collocation < c.n_modes) {
    range("m_collocation", "[n_modes,inf)", static_cast<double>(c.m_collocation));
  }
  if (!(c.tol > 0.0)) range("tol", "(0,inf)", c.tol);
  if (c.max_iter < 1) range("max_iter", "[1,inf)", static_cast<double>(c.max_iter));
  if (!(c.damping > 0.0 && c.damping <= 1.0)) range("damping", "(0,1]", c.damping);
  check_modes(c.initial_x, "initial_x", c.n_modes);
  check_modes(c.initial_y, "initial_y", c.n_modes);
  for (const auto& t : c.f) {
    if (t.shape.mode < 1 || t.shape.mode > c.n_modes) {
      throw ConfigError("field 'f' mode must lie in [1," + std::to_string(c.n_modes) +
                        "], got " + std::to_string(t.shape.mode));
    }
  }
  if (c.h.name == "polynomial" && c.h.coeffs.empty()) {
    throw ConfigError("field 'h.coeffs' must be non-empty for a polynomial nonlinearity");
  }
  c.h.build();
}

ConfigFile parse_config_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    fail(origin, "parse error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be a JSON object");

  ConfigFile c;
  bool has_m = false;
  for (const char* req : {"alpha", "T", "n_steps", "n_modes"}) {
    if (!j.contains(req)) fail(origin, std::string("missing required field '") + req + "'");
  }
  for (const auto& [key, v] : j.items()) {
    if (key == "alpha") c.alpha = get_number(v, key, origin);
    else if (key == "beta") c.beta = get_number(v, key, origin);
    else if (key == "T") c.T = get_number(v, key, origin);
    else if (key == "n_steps") c.n_steps = get_count(v, key, origin);
    else if (key == "n_modes") c.n_modes = get_count(v, key, origin);
    else if (key == "m_collocation") {
      c.m_collocation = get_count(v, key, origin);
      has_m = true;
    } else if (key == "initial_x") c.initial_x = get_profile(v, key, origin);
    else if (key == "initial_y") c.initial_y = get_profile(v, key, origin);
    else if (key == "f") {
      if (v.is_object()) {
        c.f.push_back(get_forcing_term(v, origin));
      } else if (v.is_array()) {
        for (const auto& t : v) c.f.push_back(get_forcing_term(t, origin));
      } else {
        fail(origin, "field 'f' must be an object or an array of objects");
      }
    } else if (key == "h") c.h = get_h(v, origin);
    else if (key == "tol") c.tol = get_number(v, key, origin);
    else if (key == "max_iter") c.max_iter = get_count(v, key, origin);
    else if (key == "damping") c.damping = get_number(v, key, origin);
    else fail(origin, "unknown field '" + key + "'");
  }
  if (!has_m) c.m_collocation = 2 * c.n_modes;
  try {
    validate_config(c);
  } catch (const ConfigError& e) {
    fail(origin, e.what());
  }
  return c;
}

ConfigFile parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string serialize_config(const ConfigFile& c) {
  json f = json::array();
  for (const auto& t : c.f) {
    f.push_back({{"mode", t.shape.mode}, {"scale", t.shape.scale}, {"poly_t", t.poly_t}});
  }
  json j = {
      {"alpha", c.alpha},
      {"beta", c.beta},
      {"T", c.T},
      {"n_steps", c.n_steps},
      {"n_modes", c.n_modes},
      {"m_collocation", c.m_collocation},
      {"initial_x", profile_json(c.initial_x)},
      {"initial_y", profile_json(c.initial_y)},
      {"f", f},
      {"h",
       {{"name", c.h.name},
        {"coeffs", c.h.coeffs},
        {"kernel", {{"c", c.h.kernel_c}, {"rate", c.h.kernel_rate}}}}},
      {"tol", c.tol},
      {"max_iter", c.max_iter},
      {"damping", c.damping},
  };
  return j.dump(2) + "\n";
}

ProblemSpec ConfigFile::problem() const {
  validate_config(*this);
  ProblemSpec p;
  p.alpha = alpha;
  p.op = SpectralOperator(n_modes);
  p.x = initial_x.build(n_modes);
  p.y = initial_y.build(n_modes);
  p.h = h.build();
  p.beta = beta;
  p.m_collocation = m_collocation;
  const auto terms = f;
  const std::size_t n = n_modes;
  p.f.value = [terms, n](double t) {
    SpectralField out = SpectralField::zero(n);
    for (const auto& term : terms) {
      out.mode(term.shape.mode) += term.shape.scale * poly_value(term.poly_t, t);
    }
    return out;
  };
  p.f.derivative = [terms, n](double t) {
    SpectralField out = SpectralField::zero(n);
    for (const auto& term : terms) {
      out.mode(term.shape.mode) += term.shape.scale * poly_slope(term.poly_t, t);
    }
    return out;
  };
  return p;
}

}  // namespace fracres
