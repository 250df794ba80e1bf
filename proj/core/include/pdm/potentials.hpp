#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "pdm/generator.hpp"
#include "pdm/liouville.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/model.hpp"
#include "pdm/ordering.hpp"

namespace pdm {

using cplx = std::complex<double>;

/// Effective reference potential alpha0 - F(q)^2 - i F'(q).
cplx reference_potential(const Generator& gen, double alpha0, double q);

/// Printed closed forms of the reference potential (alpha0 = 0):
///   ScarfII:     -v2^2 sech^2 u - i v2 sech u tanh u
///   SamsonovRoy: -6/(cos u + 2i sin u)^2 - 25/16
/// with u = q - center. Throws Error(UnsupportedKind) for other generators.
cplx closed_form_reference(const Generator& gen, double q);

/// Target effective potential alpha0 - F(q(x))^2 - i mu(x) dF/dx, where
/// dF/dx = F'(q(x)) / mu(x) analytically. Throws Error(OutOfDomain).
cplx target_potential(const ModelSpec& spec, double x);

/// Target potential through the f(x) = sign exp(q(x)) form (ScarfII) or the
/// g(x) = cos(q(x)) form (SamsonovRoy); alpha0 is added. f_sign = 0 uses the
/// generator's own sign. Throws Error(UnsupportedKind).
cplx closed_form_target(const ModelSpec& spec, double x, int f_sign = 0);

/// -mu'^2/4 - mu mu''/2, the non-derivative part that the Liouville
/// substitution contributes to H_x.
double liouville_shift(const ProfileSample& s) noexcept;

struct PotentialDecomposition {
  double vtilde;  ///< real part of the complexified ordering potential
  double w;       ///< imaginary part, -mu dF/dx
  double v;       ///< ordering-free physical potential
};

PotentialDecomposition potential_decomposition(const ModelSpec& spec, double x);

/// The ordering potential rebuilt from a physical V through the mass
/// derivatives M', M'' (independent of the mu-form used above):
///   (1+b)/2 M''/M^2 - [a(a+b+1) + b + 1] M'^2/M^3 + V.
double vtilde_from_physical(const AmbiguityOrdering& ordering, const ProfileSample& s, double v);

/// psi(x) = phi(q)/sqrt(mu(x)) at x = x_of_q(q). Throws Error(OutOfRange).
std::vector<std::pair<double, cplx>> wavefunction_pullback(
    const LiouvilleMap& map, std::span<const std::pair<double, cplx>> phi_samples);

/// Effective potential of the F = mu' branch:
///   -i F' + (b+1) F' + [4a(a+b+1) + b] F^2 + alpha0.
cplx alt_branch_potential(const Generator& gen, const AmbiguityOrdering& ordering, double alpha0,
                          double q);

/// Morse instance of the branch above written out for F = a exp(-q):
///   a^2 [4a(a+b+1) + b] e^{-2q} - a (b + 1 - i) e^{-q} + alpha0.
cplx morse_alt_closed_form(double a, const AmbiguityOrdering& ordering, double alpha0, double q);

}  // namespace pdm
