#pragma once

#include <utility>

#include "pdm/mass_profile.hpp"

namespace pdm {

/// Open interval (lo, hi).
struct Interval {
  double lo;
  double hi;
  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Change of variables q'(x) = 1/mu(x). The antiderivative carries no additive
// constant:
//   delta != 0:  q = (delta+1)/(delta c1) (c1 x + c2)^(delta/(delta+1))
//   delta == 0:  q = ln(c1 x + c2) / c1
// and q = x for the constant profile. q(x) is strictly increasing.
class LiouvilleMap {
 public:
  explicit LiouvilleMap(MassProfile profile) : profile_(std::move(profile)) {}

  const MassProfile& profile() const noexcept { return profile_; }

  /// Throws Error(OutOfDomain).
  double q_of_x(double x) const;
  /// Analytic inverse. Throws Error(OutOfRange) when q is not attained.
  double x_of_q(double q) const;
  /// 1/mu(x).
  double dq_dx(double x) const;
  /// Image of the profile domain; half-lines for delta != 0.
  Interval q_image() const noexcept;
  bool q_in_image(double q) const noexcept;

 private:
  MassProfile profile_;
};

}  // namespace pdm
