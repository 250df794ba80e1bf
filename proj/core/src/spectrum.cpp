#include "pdm/spectrum.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

bool is_candidate(const cplx& e, const ClassifyOptions& o) {
  if (!(std::abs(e.imag()) <= o.im_tol)) return false;
  return !o.continuum_threshold || e.real() < *o.continuum_threshold;
}

}  // namespace

double edge_mass_fraction(const Eigen::VectorXcd& v, const Grid& grid, double edge_frac) {
  const auto& coord = grid.params();
  const double lo = grid.kind() == GridKind::QInducedX ? coord.front() - grid.spacing() : grid.a();
  const double hi = grid.kind() == GridKind::QInducedX ? coord.back() + grid.spacing() : grid.b();
  const double width = edge_frac * (hi - lo);
  double total = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double m = grid.weight(i) * std::norm(v(static_cast<Eigen::Index>(i)));
    total += m;
    if (coord[i] - lo <= width || hi - coord[i] <= width) edge += m;
  }
  return total > 0.0 ? edge / total : 0.0;
}

Spectrum classify_spectrum(Spectrum spec, const Grid& grid, const ClassifyOptions& options) {
  spec.bound.assign(spec.values.size(), false);
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (!is_candidate(spec.values[i], options)) continue;
    if (!options.continuum_threshold) {
      spec.bound[i] = true;
      continue;
    }
    if (i >= spec.vectors.size() || !spec.has_vector(i)) {
      throw Error(Errc::MissingVectors, "edge rule needs the eigenvector of eigenvalue #" + std::to_string(i));
    }
    if (spec.vectors[i].size() != static_cast<Eigen::Index>(grid.size())) {
      throw Error(Errc::GridMismatch, "eigenvector length does not match the grid");
    }
    spec.bound[i] = edge_mass_fraction(spec.vectors[i], grid, options.edge_frac) <= options.edge_mass_max;
  }
  return spec;
}

Spectrum solve_classified(const Eigen::MatrixXcd& a, const Grid& grid, const ClassifyOptions& options) {
  EigOptions eo;
  if (options.continuum_threshold) {
    eo.want_vector = [options](cplx e) { return is_candidate(e, options); };
  }
  return classify_spectrum(eig(a, eo), grid, options);
}

}  // namespace pdm
