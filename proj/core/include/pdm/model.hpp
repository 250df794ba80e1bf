#pragma once

#include "pdm/generator.hpp"
#include "pdm/liouville.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/ordering.hpp"

namespace pdm {

// Everything that defines one reference/target pair: the generator, the
// ordering, the mass profile, the integration constant alpha0 and the
// truncated reference interval (Dirichlet at both ends).
class ModelSpec {
 public:
  /// Throws Error(InvalidModel) if the q interval is empty, does not map into
  /// the profile domain, or if a profile derived from an ordering disagrees
  /// with delta_of(ordering).
  ModelSpec(Generator generator, AmbiguityOrdering ordering, MassProfile profile,
            Interval q_interval, double alpha0 = 0.0);

  const Generator& generator() const noexcept { return generator_; }
  const AmbiguityOrdering& ordering() const noexcept { return ordering_; }
  const MassProfile& profile() const noexcept { return map_.profile(); }
  const LiouvilleMap& map() const noexcept { return map_; }
  double alpha0() const noexcept { return alpha0_; }
  const Interval& q_interval() const noexcept { return q_interval_; }
  /// [x(q_lo), x(q_hi)].
  Interval x_interval() const;

  ModelSpec with_profile(MassProfile profile) const;
  ModelSpec with_q_interval(Interval q) const;

 private:
  Generator generator_;
  AmbiguityOrdering ordering_;
  LiouvilleMap map_;
  Interval q_interval_;
  double alpha0_;
};

}  // namespace pdm
