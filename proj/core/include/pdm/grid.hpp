#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "pdm/liouville.hpp"

namespace pdm {

class ModelSpec;

enum class GridKind { UniformQ, UniformX, QInducedX };

std::string_view to_string(GridKind kind) noexcept;

/// Smallest accepted number of interior nodes.
inline constexpr int kMinNodes = 3;

// Interior nodes of a Dirichlet problem on (a, b); the boundary values at a
// and b are pinned to zero and are not unknowns. For QInducedX grids the
// nodes are x_of_q of a uniform q grid, and params() holds those q values.
class Grid {
 public:
  GridKind kind() const noexcept { return kind_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  /// q values of the nodes for QInducedX, and the nodes themselves otherwise.
  const std::vector<double>& params() const noexcept { return params_.empty() ? nodes_ : params_; }
  /// Uniform spacing in the grid's own coordinate (q for QInducedX).
  double spacing() const noexcept { return h_; }
  /// Coordinate of node i with i = 0 and i = size()+1 the boundaries.
  double position(std::size_t padded_index) const noexcept;
  /// (x_{i+1} - x_{i-1}) / 2, a quadrature weight for node i.
  double weight(std::size_t i) const noexcept;

  friend Grid uniform_grid(double a, double b, int n, GridKind kind);
  friend Grid q_induced_grid(const LiouvilleMap& map, Interval q, int n);

 private:
  GridKind kind_ = GridKind::UniformQ;
  double a_ = 0.0, b_ = 0.0, h_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> params_;
};

/// n interior nodes a + i h, h = (b - a)/(n + 1), i = 1..n.
/// Throws Error(BadInterval) or Error(TooFewNodes).
Grid uniform_grid(double a, double b, int n, GridKind kind = GridKind::UniformQ);

/// x nodes x_of_q(q_i) for a uniform q grid on (q.lo, q.hi).
Grid q_induced_grid(const LiouvilleMap& map, Interval q, int n);

/// Paired grids whose endpoints correspond exactly: (grid_x, grid_q).
/// For the constant profile the x grid is the q grid relabelled UniformX.
std::pair<Grid, Grid> matched_domains(const ModelSpec& spec, int n);

}  // namespace pdm
