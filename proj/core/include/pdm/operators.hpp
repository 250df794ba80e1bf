#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "pdm/grid.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/model.hpp"
#include "pdm/ordering.hpp"

namespace pdm {

enum class OperatorRole { ReferenceH, TargetH, Eta, OrderedKinetic };

std::string_view to_string(OperatorRole role) noexcept;

/// Dense complex N x N discretization of one operator on one grid.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  OperatorRole role;
  Grid grid;
  std::string provenance;

  Eigen::Index size() const noexcept { return entries.rows(); }
};

/// 1e-8 (b - a): nodes of a uniform x grid closer than this to the mass
/// singularity (in c1 x + c2) are rejected with Error(SingularEdge).
double edge_epsilon(const Grid& grid) noexcept;

/// H_q = -d^2/dq^2 + alpha0 - F^2 - iF' with the (-1, 2, -1)/h^2 stencil.
/// Needs a UniformQ grid inside spec.q_interval().
OperatorMatrix build_reference_matrix(const ModelSpec& spec, const Grid& grid);

/// H_x = -mu^2 d^2 - 2 mu mu' d - mu'^2/4 - mu mu''/2 + target potential.
/// Uniform x grids use the divergence form -D^T diag(mu^2 at midpoints) D;
/// QInducedX grids use three-point unequal-spacing stencils on the expanded
/// form.
OperatorMatrix build_target_matrix(const ModelSpec& spec, const Grid& grid);

/// eta = -i (mu d + mu'/2) + F(q(x)) on a uniform x grid. The first-order
/// part is assembled as (diag(mu) Dc + Dc diag(mu))/2 with Dc the centered
/// difference, which is skew-symmetric, so eta is exactly Hermitian.
OperatorMatrix build_eta_matrix(const ModelSpec& spec, const Grid& grid);

/// T = -(1/2)[M^a d M^b d M^g + M^g d M^b d M^a] on a uniform x grid, each
/// d M^b d pair taken as -D^T diag(M^b at midpoints) D.
OperatorMatrix build_ordered_kinetic(const AmbiguityOrdering& ordering, const MassProfile& profile,
                                     const Grid& grid);

}  // namespace pdm
