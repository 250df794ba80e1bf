#include "pdm/model.hpp"

#include <cmath>
#include <utility>

#include "pdm/errors.hpp"

namespace pdm {

ModelSpec::ModelSpec(Generator generator, AmbiguityOrdering ordering, MassProfile profile,
                     Interval q_interval, double alpha0)
    : generator_(std::move(generator)),
      ordering_(std::move(ordering)),
      map_(std::move(profile)),
      q_interval_(q_interval),
      alpha0_(alpha0) {
  if (!std::isfinite(alpha0_)) throw Error(Errc::InvalidModel, "alpha0 must be finite");
  if (!(q_interval_.lo < q_interval_.hi) || !std::isfinite(q_interval_.lo) ||
      !std::isfinite(q_interval_.hi)) {
    throw Error(Errc::InvalidModel, "q interval must be finite with lo < hi");
  }
  const auto& p = map_.profile();
  if (p.exact_delta() && ordering_.beta() != Rational(-1) && *p.exact_delta() != delta_of(ordering_)) {
    throw Error(Errc::InvalidModel, "profile delta " + format_rational(*p.exact_delta()) +
                                        " does not match the ordering's delta " +
                                        format_rational(delta_of(ordering_)));
  }
  if (!map_.q_in_image(q_interval_.lo) || !map_.q_in_image(q_interval_.hi)) {
    throw Error(Errc::InvalidModel, "q interval is not inside the image of the Liouville map");
  }
  try {
    const auto xi = x_interval();
    if (!p.in_domain(xi.lo) || !p.in_domain(xi.hi)) {
      throw Error(Errc::InvalidModel, "mapped x interval touches the mass singularity");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidModel) throw;
    throw Error(Errc::InvalidModel, e.what());
  }
}

Interval ModelSpec::x_interval() const {
  return {map_.x_of_q(q_interval_.lo), map_.x_of_q(q_interval_.hi)};
}

ModelSpec ModelSpec::with_profile(MassProfile profile) const {
  return ModelSpec(generator_, ordering_, std::move(profile), q_interval_, alpha0_);
}

ModelSpec ModelSpec::with_q_interval(Interval q) const {
  return ModelSpec(generator_, ordering_, map_.profile(), q, alpha0_);
}

}  // namespace pdm
