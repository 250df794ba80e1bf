#include "pdm/operators.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "pdm/errors.hpp"
#include "pdm/potentials.hpp"

namespace pdm {
namespace {

std::string describe(OperatorRole role, const ModelSpec& spec, const Grid& grid) {
  std::ostringstream os;
  os << to_string(role) << " gen=" << spec.generator().name();
  const auto& p = spec.profile();
  if (p.is_constant()) {
    os << " profile=constant";
  } else {
    os << " delta=" << p.delta() << " c1=" << p.c1() << " c2=" << p.c2();
  }
  os << " alpha0=" << spec.alpha0() << " grid=" << to_string(grid.kind()) << " N=" << grid.size();
  return os.str();
}

void require_kind(const Grid& grid, GridKind a, const char* what) {
  if (grid.kind() != a) {
    throw Error(Errc::GridMismatch, std::string(what) + " needs a " + std::string(to_string(a)) +
                                        " grid, got " + std::string(to_string(grid.kind())));
  }
}

// Nodes and both boundaries must lie in the mass domain; on uniform x grids
// every point, boundaries included, must also keep edge_epsilon away from the
// singular point.
void check_x_grid(const MassProfile& profile, const Grid& grid) {
  if (profile.is_constant()) return;
  const double eps = edge_epsilon(grid);
  for (std::size_t i = 0; i <= grid.size() + 1; ++i) {
    const double x = grid.position(i);
    const double s = profile.argument(x);
    const bool boundary = i == 0 || i == grid.size() + 1;
    if (boundary ? s < 0.0 : !(s > 0.0)) {
      throw Error(Errc::OutOfDomain, "grid point x = " + std::to_string(x) + " outside the mass domain");
    }
    if (grid.kind() == GridKind::UniformX && s <= eps) {
      throw Error(Errc::SingularEdge, "point x = " + std::to_string(x) + " within edge_epsilon of the mass singularity");
    }
  }
}

// -D^T diag(m) D with m sampled at the N+1 midpoints of a uniform grid.
void add_divergence_form(Eigen::MatrixXcd& h, const std::vector<double>& m, double inv_h2) {
  const auto n = h.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i, i) += (m[i] + m[i + 1]) * inv_h2;
    if (i + 1 < n) {
      h(i, i + 1) += -m[i + 1] * inv_h2;
      h(i + 1, i) += -m[i + 1] * inv_h2;
    }
  }
}

}  // namespace

std::string_view to_string(OperatorRole role) noexcept {
  switch (role) {
    case OperatorRole::ReferenceH: return "ReferenceH";
    case OperatorRole::TargetH: return "TargetH";
    case OperatorRole::Eta: return "Eta";
    case OperatorRole::OrderedKinetic: return "OrderedKinetic";
  }
  return "";
}

double edge_epsilon(const Grid& grid) noexcept { return 1e-8 * (grid.b() - grid.a()); }

OperatorMatrix build_reference_matrix(const ModelSpec& spec, const Grid& grid) {
  require_kind(grid, GridKind::UniformQ, "build_reference_matrix");
  const auto qi = spec.q_interval();
  if (grid.a() < qi.lo || grid.b() > qi.hi) {
    throw Error(Errc::OutOfDomain, "reference grid leaves the model's q interval");
  }
  const auto n = static_cast<Eigen::Index>(grid.size());
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double q = grid.nodes()[static_cast<std::size_t>(i)];
    m(i, i) = 2.0 * inv_h2 + reference_potential(spec.generator(), spec.alpha0(), q);
    if (i + 1 < n) {
      m(i, i + 1) = -inv_h2;
      m(i + 1, i) = -inv_h2;
    }
  }
  return {std::move(m), OperatorRole::ReferenceH, grid, describe(OperatorRole::ReferenceH, spec, grid)};
}

OperatorMatrix build_target_matrix(const ModelSpec& spec, const Grid& grid) {
  if (grid.kind() == GridKind::UniformQ) {
    throw Error(Errc::GridMismatch, "build_target_matrix needs an x grid");
  }
  const auto& profile = spec.profile();
  check_x_grid(profile, grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);

  if (grid.kind() == GridKind::UniformX) {
    const double h = grid.spacing();
    std::vector<double> mu2_mid(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < mu2_mid.size(); ++k) {
      const double mu = profile.eval(grid.a() + (static_cast<double>(k) + 0.5) * h).mu;
      mu2_mid[k] = mu * mu;
    }
    add_divergence_form(m, mu2_mid, 1.0 / (h * h));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = grid.nodes()[static_cast<std::size_t>(i)];
      m(i, i) += liouville_shift(profile.eval(x)) + target_potential(spec, x);
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto pi = static_cast<std::size_t>(i) + 1;
      const double x = grid.position(pi);
      const double hl = x - grid.position(pi - 1);
      const double hr = grid.position(pi + 1) - x;
      const auto s = profile.eval(x);
      const double c2 = -s.mu * s.mu;        // coefficient of d^2/dx^2
      const double c1 = -2.0 * s.mu * s.mu1;  // coefficient of d/dx
      const double lo = c2 * 2.0 / (hl * (hl + hr)) - c1 * hr / (hl * (hl + hr));
      const double di = -c2 * 2.0 / (hl * hr) + c1 * (hr - hl) / (hl * hr);
      const double up = c2 * 2.0 / (hr * (hl + hr)) + c1 * hl / (hr * (hl + hr));
      m(i, i) = di + (liouville_shift(s) + target_potential(spec, x));
      if (i > 0) m(i, i - 1) = lo;
      if (i + 1 < n) m(i, i + 1) = up;
    }
  }
  return {std::move(m), OperatorRole::TargetH, grid, describe(OperatorRole::TargetH, spec, grid)};
}

OperatorMatrix build_eta_matrix(const ModelSpec& spec, const Grid& grid) {
  require_kind(grid, GridKind::UniformX, "build_eta_matrix");
  const auto& profile = spec.profile();
  check_x_grid(profile, grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  const double h = grid.spacing();
  std::vector<double> mu(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) mu[i] = profile.eval(grid.nodes()[i]).mu;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const cplx minus_i(0.0, -1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double q = spec.map().q_of_x(grid.nodes()[i]);
    m(i, i) = spec.generator().eval(q).f;
    if (i + 1 < n) {
      const double b = (mu[i] + mu[i + 1]) / (4.0 * h);
      m(i, i + 1) = minus_i * b;
      m(i + 1, i) = -minus_i * b;
    }
  }
  return {std::move(m), OperatorRole::Eta, grid, describe(OperatorRole::Eta, spec, grid)};
}

OperatorMatrix build_ordered_kinetic(const AmbiguityOrdering& ordering, const MassProfile& profile,
                                     const Grid& grid) {
  require_kind(grid, GridKind::UniformX, "build_ordered_kinetic");
  check_x_grid(profile, grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  const double h = grid.spacing();
  const double a = ordering.alpha_value();
  const double b = ordering.beta_value();
  const double g = ordering.gamma_value();

  std::vector<double> mb_mid(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < mb_mid.size(); ++k) {
    const double x = grid.a() + (static_cast<double>(k) + 0.5) * h;
    mb_mid[k] = std::pow(profile.eval(x).mass, b);
  }
  Eigen::MatrixXcd lap = Eigen::MatrixXcd::Zero(n, n);
  add_divergence_form(lap, mb_mid, 1.0 / (h * h));

  std::vector<double> ma(static_cast<std::size_t>(n)), mg(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mass = profile.eval(grid.nodes()[i]).mass;
    ma[i] = std::pow(mass, a);
    mg[i] = std::pow(mass, g);
  }
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = std::max<Eigen::Index>(0, i - 1); j <= std::min(n - 1, i + 1); ++j) {
      t(i, j) = 0.5 * (ma[i] * lap(i, j) * mg[j] + mg[i] * lap(i, j) * ma[j]);
    }
  }
  std::ostringstream os;
  os << "OrderedKinetic ordering=" << (ordering.name().empty() ? "custom" : ordering.name())
     << " N=" << grid.size();
  return {std::move(t), OperatorRole::OrderedKinetic, grid, os.str()};
}

}  // namespace pdm
