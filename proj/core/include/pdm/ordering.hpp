#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pdm {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or a signed variant of either. Throws Error(InvalidConfig).
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

enum class OrderingPreset {
  GoraWilliams,
  BenDanielDuke,
  ZhuKroemer,
  LiKuhn,
  MustafaMazharimousavi,
};

std::span<const OrderingPreset> all_presets() noexcept;
std::string_view preset_name(OrderingPreset preset) noexcept;
std::optional<OrderingPreset> preset_from_name(std::string_view name) noexcept;

/// von Roos ambiguity parameters. The constraint alpha + beta + gamma = -1 is
/// checked in exact rational arithmetic on construction.
class AmbiguityOrdering {
 public:
  AmbiguityOrdering(Rational alpha, Rational beta, Rational gamma, std::string name = {});

  /// gamma is filled in from the constraint.
  static AmbiguityOrdering from_alpha_beta(Rational alpha, Rational beta, std::string name = {});

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }
  const Rational& gamma() const noexcept { return gamma_; }
  const std::string& name() const noexcept { return name_; }

  double alpha_value() const noexcept { return to_double(alpha_); }
  double beta_value() const noexcept { return to_double(beta_); }
  double gamma_value() const noexcept { return to_double(gamma_); }

  friend bool operator==(const AmbiguityOrdering& a, const AmbiguityOrdering& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.gamma_ == b.gamma_;
  }

 private:
  Rational alpha_, beta_, gamma_;
  std::string name_;
};

AmbiguityOrdering ordering_preset(OrderingPreset preset);

/// Mass-class exponent delta = 4a + 1 + 4a^2/(b+1), exact.
/// Throws Error(BetaMinusOne) for beta = -1 (BenDaniel-Duke).
Rational delta_of(const AmbiguityOrdering& ordering);

}  // namespace pdm
