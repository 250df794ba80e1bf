#include "pdm/grid.hpp"

#include <cmath>
#include <string>

#include "pdm/errors.hpp"
#include "pdm/model.hpp"

namespace pdm {

std::string_view to_string(GridKind kind) noexcept {
  switch (kind) {
    case GridKind::UniformQ: return "UniformQ";
    case GridKind::UniformX: return "UniformX";
    case GridKind::QInducedX: return "QInducedX";
  }
  return "";
}

double Grid::position(std::size_t padded_index) const noexcept {
  if (padded_index == 0) return a_;
  if (padded_index == nodes_.size() + 1) return b_;
  return nodes_[padded_index - 1];
}

double Grid::weight(std::size_t i) const noexcept {
  return 0.5 * (position(i + 2) - position(i));
}

Grid uniform_grid(double a, double b, int n, GridKind kind) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(Errc::BadInterval, "need finite a < b, got (" + std::to_string(a) + ", " +
                                       std::to_string(b) + ")");
  }
  if (n < kMinNodes) {
    throw Error(Errc::TooFewNodes, "need at least " + std::to_string(kMinNodes) + " nodes, got " +
                                       std::to_string(n));
  }
  if (kind == GridKind::QInducedX) {
    throw Error(Errc::GridMismatch, "use q_induced_grid for QInducedX grids");
  }
  Grid g;
  g.kind_ = kind;
  g.a_ = a;
  g.b_ = b;
  g.h_ = (b - a) / (n + 1);
  g.nodes_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) g.nodes_[i - 1] = a + i * g.h_;
  return g;
}

Grid q_induced_grid(const LiouvilleMap& map, Interval q, int n) {
  Grid gq = uniform_grid(q.lo, q.hi, n, GridKind::UniformQ);
  Grid g;
  g.kind_ = GridKind::QInducedX;
  g.h_ = gq.spacing();
  g.a_ = map.x_of_q(q.lo);
  g.b_ = map.x_of_q(q.hi);
  g.params_ = gq.nodes();
  g.nodes_.reserve(g.params_.size());
  double prev = g.a_;
  for (double qi : g.params_) {
    const double x = map.x_of_q(qi);
    if (!(x > prev)) {
      throw Error(Errc::BadInterval, "q-induced nodes are not strictly increasing near q = " +
                                         std::to_string(qi));
    }
    g.nodes_.push_back(x);
    prev = x;
  }
  if (!(g.b_ > prev)) throw Error(Errc::BadInterval, "q-induced grid collapses at its right end");
  return g;
}

std::pair<Grid, Grid> matched_domains(const ModelSpec& spec, int n) {
  const auto q = spec.q_interval();
  Grid gq = uniform_grid(q.lo, q.hi, n, GridKind::UniformQ);
  if (spec.profile().is_constant()) {
    return {uniform_grid(q.lo, q.hi, n, GridKind::UniformX), std::move(gq)};
  }
  return {q_induced_grid(spec.map(), q, n), std::move(gq)};
}

}  // namespace pdm
