#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdm/liouville.hpp"
#include "pdm/model.hpp"
#include "pdm/verify.hpp"

namespace pdm {

struct GeneratorConfig {
  std::string kind = "ScarfII";  ///< ScarfII | SamsonovRoy | Morse
  double v2 = 2.5;
  int sign = 1;
  /// Symmetry point of ScarfII/SamsonovRoy; defaults to the q interval midpoint.
  std::optional<double> center;
  double a = 1.0;  ///< Morse amplitude
  bool operator==(const GeneratorConfig&) const = default;
};

struct OrderingConfig {
  std::string preset = "ZhuKroemer";
  /// Explicit (alpha, beta, gamma) as rational strings; overrides preset.
  std::optional<std::vector<std::string>> explicit_abg;
  bool operator==(const OrderingConfig&) const = default;
};

struct ProfileConfig {
  bool constant = false;
  double c1 = 1.0;
  double c2 = 0.0;
  bool operator==(const ProfileConfig&) const = default;
};

struct Tolerances {
  double analytic_reference = 1e-2;
  double analytic_target = 5e-2;
  double isospectral = 5e-2;
  double bound_im = 1e-4;
  double edge_frac = 0.05;
  double intertwine_rate = 0.9;
  double isospectral_rate = 1.0;
  double sweep_rate = 1.0;
  double eigensolver = 1e-8;
  bool operator==(const Tolerances&) const = default;
};

struct OutputConfig {
  std::string dir = "pdm_out";
  bool vectors = false;
  bool timing = false;
  bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
  GeneratorConfig generator;
  OrderingConfig ordering;
  ProfileConfig profile;
  double alpha0 = 0.0;
  Interval q_interval{-12.0, 12.0};
  /// Defaults to the q interval midpoint +- 2.
  std::optional<Interval> intertwine_q_interval;
  int n = 1200;
  int k = 2;
  int oracle_level = 0;
  std::vector<int> isospectral_n{400, 800};
  std::vector<int> intertwine_n{200, 400, 800};
  std::vector<int> sweep_n{300, 600, 1200};
  Picture picture = Picture::Reference;
  Tolerances tolerances;
  OutputConfig output;
  int map_samples = 201;
  std::uint64_t seed = 12345;
  int eigensolver_cases = 100;
  bool operator==(const RunConfig&) const = default;
};

/// Throws Error(InvalidConfig) naming the offending key; unknown keys are
/// rejected. Missing keys keep their defaults.
RunConfig parse_config(const nlohmann::json& j);
/// Reads and parses a JSON file; syntax errors report line and column.
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

/// Throws Error(InvalidConfig) wrapping any model construction failure.
ModelSpec build_model(const RunConfig& config);
/// The same model restricted to the intertwining q interval.
ModelSpec build_intertwine_model(const RunConfig& config);

}  // namespace pdm
