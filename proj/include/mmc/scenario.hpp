#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmc/analytic_strip.hpp"
#include "mmc/coupling.hpp"
#include "mmc/domain.hpp"
#include "mmc/noise.hpp"
#include "mmc/sources.hpp"

namespace mmc {

enum class SourceType { Quadrupole, Homogeneous, WirePair };

const char* source_type_label(SourceType t);

// A scenario value that may be a resolver token ("optimal", "max",
// "comparison") instead of a number.
struct TokenOrValue {
  bool is_token = false;
  std::string token;
  double value = 0.0;

  static TokenOrValue number(double v) { return {false, "", v}; }
  static TokenOrValue word(std::string t) { return {true, std::move(t), 0.0}; }

  bool operator==(const TokenOrValue&) const = default;
};

// Parsed scenario, faithful to the file: tokens unresolved, all numbers SI
// with frequencies already angular.
struct Scenario {
  std::string name;

  StripSpec strip{};
  CantileverSpec cant{};
  double z_m = 0.0;

  TokenOrValue w_c; // meters or "optimal"
  double z_c = 0.0;
  double L_c = 0.0;

  SourceType source = SourceType::Quadrupole;
  std::optional<TokenOrValue> gradient; // T/m or "max"
  std::optional<TokenOrValue> B_a;      // T or "comparison"/"max"
  std::optional<double> I_w;            // wire-pair [A]
  std::optional<double> z_w;            // wire-pair geometry [m]
  std::optional<double> z_w_nominal;    // informational layout value [m]

  double omega0 = 0.0; // angular [rad/s]
  double ej0_over_ec = 0.0;
  double flux_bias = 0.0;
  double Q = 0.0;

  double s_i_rel = 0.0; // amplitude spectral densities [1/sqrt(Hz)]
  double s_b_rel = 0.0;

  OmegaConvention gamma_convention = OmegaConvention::Cyclic;

  bool operator==(const Scenario&) const = default;
};

// Scenario with every token resolved to a concrete number, ready to compute.
struct ResolvedScenario {
  Scenario raw;
  StripSpec strip{};
  CantileverSpec cant{};
  CoilSpec coil{};
  Mode mode = Mode::Quadrupole;
  double amplitude = 0.0; // b [T/m] or B_a [T]
  std::optional<WirePairSpec> wire;
  CircuitSpec circuit{};
  NoiseInputs noise{};
  double z_m = 0.0;
  OmegaConvention conv = OmegaConvention::Cyclic;
  double M = 0.0;
  double z_zp = 0.0;
  std::vector<std::string> notes; // how each token/derived value was fixed
};

ResolvedScenario resolve(const Scenario& sc);

// Parsing and serialization. Parse failures throw mmc::parse_error; value
// validation failures throw std::domain_error.
Scenario parse_scenario_string(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

// Accepts a bundled scenario name or a filesystem path.
Scenario load_scenario(const std::string& name_or_path);

// Canonical form: fixed section and key order, SI numbers at full round-trip
// precision, tokens kept as words, no comments.
std::string serialize_scenario(const Scenario& sc);

const std::vector<std::string>& builtin_scenario_names();
const std::string& builtin_scenario_source(const std::string& name);

} // namespace mmc
