#include "pdm/potentials.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {

cplx reference_potential(const Generator& gen, double alpha0, double q) {
  const auto [f, fp] = gen.eval(q);
  return {alpha0 - f * f, -fp};
}

cplx closed_form_reference(const Generator& gen, double q) {
  if (const auto* s = gen.scarf2_params()) {
    const double u = q - s->center;
    const double sech = 1.0 / std::cosh(u);
    return {-s->v2 * s->v2 * sech * sech, -s->v2 * sech * std::tanh(u)};
  }
  if (const auto* s = gen.samsonov_roy_params()) {
    const double u = q - s->center;
    const cplx den(std::cos(u), 2.0 * std::sin(u));
    return -6.0 / (den * den) - 25.0 / 16.0;
  }
  throw Error(Errc::UnsupportedKind, "no closed-form reference potential for " + gen.name());
}

cplx target_potential(const ModelSpec& spec, double x) {
  const auto s = spec.profile().eval(x);
  const double q = spec.map().q_of_x(x);
  const auto [f, fp] = spec.generator().eval(q);
  const double df_dx = fp / s.mu;
  return {spec.alpha0() - f * f, -s.mu * df_dx};
}

cplx closed_form_target(const ModelSpec& spec, double x, int f_sign) {
  const auto& gen = spec.generator();
  const auto s = spec.profile().eval(x);
  const double q = spec.map().q_of_x(x);
  if (const auto* p = gen.scarf2_params()) {
    const int sign = f_sign == 0 ? p->sign : f_sign;
    const double f = sign * std::exp(q - p->center);
    const double f2p1 = f * f + 1.0;
    const double den = f2p1 * f2p1;
    const double v2 = p->v2;
    return {spec.alpha0() - 4.0 * v2 * v2 * f * f / den, -sign * 2.0 * v2 * f * (f * f - 1.0) / den};
  }
  if (const auto* p = gen.samsonov_roy_params()) {
    const double u = q - p->center;
    const double g = std::cos(u);
    const double gprime = -std::sin(u) / s.mu;  // dg/dx = -sin(u) q'(x)
    const cplx den(g, -2.0 * s.mu * gprime);
    return -6.0 / (den * den) - 25.0 / 16.0 + spec.alpha0();
  }
  throw Error(Errc::UnsupportedKind, "no closed-form target potential for " + gen.name());
}

double liouville_shift(const ProfileSample& s) noexcept {
  return -s.mu1 * s.mu1 / 4.0 - s.mu * s.mu2 / 2.0;
}

PotentialDecomposition potential_decomposition(const ModelSpec& spec, double x) {
  const auto s = spec.profile().eval(x);
  const double q = spec.map().q_of_x(x);
  const auto [f, fp] = spec.generator().eval(q);
  const double df_dx = fp / s.mu;
  const double a = spec.ordering().alpha_value();
  const double b = spec.ordering().beta_value();
  PotentialDecomposition d{};
  d.w = -s.mu * df_dx;
  d.vtilde = -f * f - 0.5 * s.mu * s.mu2 - 0.25 * s.mu1 * s.mu1 + spec.alpha0();
  d.v = spec.alpha0() - f * f + (0.5 + b) * s.mu * s.mu2 +
        (4.0 * a * (a + b + 1.0) + b + 0.75) * s.mu1 * s.mu1;
  return d;
}

double vtilde_from_physical(const AmbiguityOrdering& ordering, const ProfileSample& s, double v) {
  const double a = ordering.alpha_value();
  const double b = ordering.beta_value();
  const double mu3 = s.mu * s.mu * s.mu;
  const double m = s.mass;
  const double m1 = -2.0 * s.mu1 / mu3;
  const double m2 = 6.0 * s.mu1 * s.mu1 / (mu3 * s.mu) - 2.0 * s.mu2 / mu3;
  return 0.5 * (1.0 + b) * m2 / (m * m) - (a * (a + b + 1.0) + b + 1.0) * m1 * m1 / (m * m * m) + v;
}

std::vector<std::pair<double, cplx>> wavefunction_pullback(
    const LiouvilleMap& map, std::span<const std::pair<double, cplx>> phi_samples) {
  std::vector<std::pair<double, cplx>> out;
  out.reserve(phi_samples.size());
  for (const auto& [q, phi] : phi_samples) {
    const double x = map.x_of_q(q);
    const double mu = map.profile().eval(x).mu;
    out.emplace_back(x, phi / std::sqrt(mu));
  }
  return out;
}

cplx alt_branch_potential(const Generator& gen, const AmbiguityOrdering& ordering, double alpha0,
                          double q) {
  const auto [f, fp] = gen.eval(q);
  const double a = ordering.alpha_value();
  const double b = ordering.beta_value();
  const double re = (b + 1.0) * fp + (4.0 * a * (a + b + 1.0) + b) * f * f + alpha0;
  return {re, -fp};
}

cplx morse_alt_closed_form(double a, const AmbiguityOrdering& ordering, double alpha0, double q) {
  const double al = ordering.alpha_value();
  const double b = ordering.beta_value();
  const double e1 = std::exp(-q);
  return a * a * (4.0 * al * (al + b + 1.0) + b) * e1 * e1 - a * cplx(b + 1.0, -1.0) * e1 + alpha0;
}

}  // namespace pdm
