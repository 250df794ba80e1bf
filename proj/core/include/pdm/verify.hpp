#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdm/eigensolver.hpp"
#include "pdm/grid.hpp"
#include "pdm/model.hpp"
#include "pdm/spectrum.hpp"

namespace pdm {

enum class Picture { Reference, Target };

std::string_view to_string(Picture picture) noexcept;
std::optional<Picture> picture_from_string(std::string_view text) noexcept;

/// -(|v2| - n - 1/2)^2 for integers 0 <= n < |v2| - 1/2, most negative first.
std::vector<double> scarf2_levels(double v2);

struct IndexedLevel {
  int n;
  double energy;
  bool operator==(const IndexedLevel&) const = default;
};

/// n^2/4 - 25/16 for n = 1, 3, 4, ..., n_upper. The n = 2 level is absent.
std::vector<IndexedLevel> samsonov_roy_levels(int n_upper);

/// Energy of the absent Samsonov-Roy level.
inline constexpr double kSamsonovRoyMissingLevel = -9.0 / 16.0;

/// Analytic bound levels of the generator shifted by spec.alpha0(). Levels of
/// the Samsonov-Roy ladder are listed up to n_upper.
/// Throws Error(UnsupportedGenerator) for Morse and custom generators.
std::vector<double> oracle_levels(const ModelSpec& spec, int sr_n_upper = 5);

struct LevelRow {
  int index = 0;
  cplx computed{};
  cplx expected{};
  double error = 0.0;
  /// False when no computed level was paired with the expected one.
  bool matched = true;
  bool operator==(const LevelRow&) const = default;
};

struct CheckItem {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  /// "<=", ">=", "<", ">" or "==". Strict decrease is recorded as the largest
  /// ratio of consecutive entries compared with "<" against 1.
  std::string relation = "<=";
  bool pass = false;
  bool operator==(const CheckItem&) const = default;
};

struct VerificationReport {
  std::string kind;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<LevelRow> levels;
  std::vector<int> grid_sizes;
  /// Per grid size: level error, spectral difference or residual.
  std::vector<double> sequence;
  /// Per grid size, optional second metric (see secondary_label).
  std::vector<double> secondary;
  std::string secondary_label;
  std::optional<double> rate;
  std::vector<CheckItem> checks;
  std::vector<std::string> notes;
  bool warning = false;
  bool pass = false;
  /// Wall time; zero unless timing was requested.
  double runtime_seconds = 0.0;

  /// pass = every check passed.
  void finalize();
  bool operator==(const VerificationReport&) const = default;
};

/// Least-squares slope of log(err) against log(h). Needs two or more
/// positive entries; returns nullopt otherwise.
std::optional<double> fit_rate(const std::vector<double>& h, const std::vector<double>& err);

/// Grid spacing in q for n interior nodes on the model's q interval.
double q_spacing(const ModelSpec& spec, int n);

/// Largest real part of the reference potential at the two q endpoints for
/// generators with a continuum, nullopt otherwise.
std::optional<double> continuum_threshold(const ModelSpec& spec);

struct PictureSolution {
  Spectrum spectrum;
  Grid grid;
};

/// Solves H_q on the uniform q grid or H_x on the q-induced x grid and
/// classifies bound levels with `options` (continuum threshold filled in).
PictureSolution solve_picture(const ModelSpec& spec, Picture picture, int n, ClassifyOptions options);

struct IsospectralOptions {
  std::vector<int> grid_sizes{800};
  int k = 2;
  double tol = 5e-2;
  double im_tol = 1e-4;
  double edge_frac = 0.05;
  /// Only enforced with two or more grid sizes.
  double min_rate = 1.0;
};

/// Lowest k bound levels of H_x against H_q on matched grids.
/// Throws Error(InsufficientBoundStates) when either side has fewer than k.
VerificationReport check_isospectral(const ModelSpec& spec, const IsospectralOptions& options);
VerificationReport check_isospectral(const ModelSpec& spec, int n, int k, double tol);

/// r(N) = |eta H - H^+ eta|_F / (|eta|_F |H|_F) on uniform x grids over the
/// model's x interval, with the fitted rate. Also reports the largest entry
/// of (eta H - H^+ eta) v for a smooth bump v vanishing near both ends.
VerificationReport check_intertwining(const ModelSpec& spec, const std::vector<int>& grid_sizes,
                                      double min_rate = 0.9);

struct AnalyticOptions {
  double tol = 1e-2;
  /// Defaults to tol.
  std::optional<double> im_tol;
  double edge_frac = 0.05;
  double missing_window = 0.2;
  int sr_n_upper = 5;
};

/// Bound levels of one picture against the analytic spectrum.
VerificationReport check_analytic(const ModelSpec& spec, Picture picture, int n, const AnalyticOptions& options);
VerificationReport check_analytic(const ModelSpec& spec, Picture picture, int n, double tol);

/// Distance from oracle level `oracle_level` to the nearest eigenvalue for
/// each grid size, with the fitted rate. Passes when the error decreases
/// strictly and the rate is at least min_rate.
VerificationReport convergence_sweep(const ModelSpec& spec, Picture picture, const std::vector<int>& grid_sizes,
                                     int oracle_level, double min_rate = 1.0);

/// Same sweep against a given exact eigenvalue.
VerificationReport convergence_sweep_exact(const ModelSpec& spec, Picture picture,
                                           const std::vector<int>& grid_sizes, double exact,
                                           double min_rate = 1.0);

/// Seeded random complex matrices with sizes cycling through 2..8. Each
/// spectrum must match the characteristic-polynomial roots within tol,
/// satisfy the trace identity within trace_tol (relative to max(1, |A|_F)),
/// and repeat bit for bit on a second run.
VerificationReport check_eigensolver(std::uint64_t seed, int cases = 100, double tol = 1e-8,
                                     double trace_tol = 1e-10);

}  // namespace pdm
