#pragma once

#include <optional>
#include <utility>

#include "pdm/ordering.hpp"

namespace pdm {

/// mu(x) = 1/sqrt(M(x)) and its first two x-derivatives, plus M itself.
struct ProfileSample {
  double mu;
  double mu1;
  double mu2;
  double mass;
};

// The strictly determined mass class mu(x) = (c1 x + c2)^(1/(delta+1)),
// M = mu^-2, living on the open set c1 x + c2 > 0. The positive branch of
// mu is always taken. A constant-mass variant (mu = 1) serves as a limit in
// which the target and reference pictures coincide.
class MassProfile {
 public:
  static MassProfile power_law(double c1, double c2, double delta);
  /// Uses delta_of(ordering); the exact delta is remembered for consistency checks.
  static MassProfile for_ordering(const AmbiguityOrdering& ordering, double c1, double c2);
  static MassProfile constant();

  bool is_constant() const noexcept { return constant_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  double delta() const noexcept { return delta_; }
  /// 1/(delta+1).
  double exponent() const noexcept { return exponent_; }
  const std::optional<Rational>& exact_delta() const noexcept { return exact_delta_; }

  /// c1 x + c2; 1 for the constant profile.
  double argument(double x) const noexcept { return constant_ ? 1.0 : c1_ * x + c2_; }
  bool in_domain(double x) const noexcept;
  /// Open interval on which the profile is defined (infinite ends allowed).
  std::pair<double, double> domain() const noexcept;
  /// Point where c1 x + c2 = 0, if any.
  std::optional<double> singular_point() const noexcept;

  /// Closed-form mu, mu', mu'', M. Throws Error(OutOfDomain).
  ProfileSample eval(double x) const;
  double mu(double x) const { return eval(x).mu; }

 private:
  MassProfile() = default;

  bool constant_ = true;
  double c1_ = 0.0;
  double c2_ = 1.0;
  double delta_ = 0.0;
  double exponent_ = 1.0;
  std::optional<Rational> exact_delta_;
};

}  // namespace pdm
