#pragma once

#include <optional>

#include "pdm/eigensolver.hpp"
#include "pdm/grid.hpp"

namespace pdm {

struct ClassifyOptions {
  /// Largest |Im E| accepted for a bound level.
  double im_tol = 1e-6;
  /// Width of each boundary zone as a fraction of the grid interval,
  /// measured in the grid's own coordinate (q for q-induced grids).
  double edge_frac = 0.05;
  /// Largest share of |psi|^2 allowed inside the two boundary zones.
  double edge_mass_max = 0.01;
  /// Bottom of the continuum. When set, eigenvalues at or above it are not
  /// bound and the edge rule applies to the rest, which needs eigenvectors.
  std::optional<double> continuum_threshold;
};

/// Sets spec.bound. Without a continuum threshold only the |Im E| rule is
/// applied. Throws Error(MissingVectors) when the edge rule needs a vector
/// that was not computed.
Spectrum classify_spectrum(Spectrum spec, const Grid& grid, const ClassifyOptions& options);

/// Share of sum_i w_i |v_i|^2 sitting within edge_frac of either end.
double edge_mass_fraction(const Eigen::VectorXcd& v, const Grid& grid, double edge_frac);

/// eig with eigenvectors for exactly the candidates the edge rule will
/// inspect, followed by classify_spectrum.
Spectrum solve_classified(const Eigen::MatrixXcd& a, const Grid& grid, const ClassifyOptions& options);

}  // namespace pdm
