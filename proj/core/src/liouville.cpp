#include "pdm/liouville.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pdm/errors.hpp"

namespace pdm {

double LiouvilleMap::q_of_x(double x) const {
  const auto& p = profile_;
  if (p.is_constant()) return x;
  const double s = p.argument(x);
  if (!(s > 0.0)) throw Error(Errc::OutOfDomain, "q_of_x: x = " + std::to_string(x) + " outside the mass domain");
  if (p.delta() == 0.0) return std::log(s) / p.c1();
  const double d = p.delta();
  return (d + 1.0) / (d * p.c1()) * std::pow(s, d / (d + 1.0));
}

double LiouvilleMap::x_of_q(double q) const {
  const auto& p = profile_;
  if (p.is_constant()) return q;
  if (!std::isfinite(q)) throw Error(Errc::OutOfRange, "x_of_q: q must be finite");
  double s = 0.0;
  if (p.delta() == 0.0) {
    s = std::exp(p.c1() * q);
  } else {
    const double d = p.delta();
    const double base = q * d * p.c1() / (d + 1.0);
    if (!(base > 0.0)) {
      throw Error(Errc::OutOfRange, "x_of_q: q = " + std::to_string(q) + " is not attained by the map");
    }
    s = std::pow(base, (d + 1.0) / d);
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(Errc::OutOfRange, "x_of_q: q = " + std::to_string(q) + " maps outside the representable domain");
  }
  return (s - p.c2()) / p.c1();
}

double LiouvilleMap::dq_dx(double x) const { return 1.0 / profile_.eval(x).mu; }

Interval LiouvilleMap::q_image() const noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const auto& p = profile_;
  if (p.is_constant() || p.delta() == 0.0) return {-inf, inf};
  const double d = p.delta();
  const double k = (d + 1.0) / (d * p.c1());
  return k > 0.0 ? Interval{0.0, inf} : Interval{-inf, 0.0};
}

bool LiouvilleMap::q_in_image(double q) const noexcept {
  const auto img = q_image();
  return std::isfinite(q) && q > img.lo && q < img.hi;
}

}  // namespace pdm
