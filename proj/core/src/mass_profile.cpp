#include "pdm/mass_profile.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pdm/errors.hpp"

namespace pdm {

MassProfile MassProfile::power_law(double c1, double c2, double delta) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(delta)) {
    throw Error(Errc::InvalidProfile, "mass profile parameters must be finite");
  }
  if (c1 == 0.0) throw Error(Errc::InvalidProfile, "c1 must be nonzero");
  if (delta == -1.0) throw Error(Errc::InvalidProfile, "delta = -1 gives no power law");
  MassProfile p;
  p.constant_ = false;
  p.c1_ = c1;
  p.c2_ = c2;
  p.delta_ = delta;
  p.exponent_ = 1.0 / (delta + 1.0);
  return p;
}

MassProfile MassProfile::for_ordering(const AmbiguityOrdering& ordering, double c1, double c2) {
  const Rational d = delta_of(ordering);
  MassProfile p = power_law(c1, c2, to_double(d));
  p.exact_delta_ = d;
  return p;
}

MassProfile MassProfile::constant() { return MassProfile{}; }

bool MassProfile::in_domain(double x) const noexcept {
  return std::isfinite(x) && (constant_ || c1_ * x + c2_ > 0.0);
}

std::pair<double, double> MassProfile::domain() const noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (constant_) return {-inf, inf};
  const double x0 = -c2_ / c1_;
  return c1_ > 0.0 ? std::pair{x0, inf} : std::pair{-inf, x0};
}

std::optional<double> MassProfile::singular_point() const noexcept {
  if (constant_) return std::nullopt;
  return -c2_ / c1_;
}

ProfileSample MassProfile::eval(double x) const {
  if (constant_) return {1.0, 0.0, 0.0, 1.0};
  const double s = c1_ * x + c2_;
  if (!(s > 0.0) || !std::isfinite(x)) {
    throw Error(Errc::OutOfDomain, "x = " + std::to_string(x) + " gives c1*x + c2 <= 0");
  }
  const double e = exponent_;
  const double mu = std::pow(s, e);
  // mu' = e c1 s^(e-1), mu'' = e (e-1) c1^2 s^(e-2); written through mu/s to
  // share one pow call.
  const double mu1 = e * c1_ * mu / s;
  const double mu2 = e * (e - 1.0) * c1_ * c1_ * mu / (s * s);
  return {mu, mu1, mu2, 1.0 / (mu * mu)};
}

}  // namespace pdm
