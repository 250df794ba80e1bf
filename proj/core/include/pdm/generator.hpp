#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace pdm {

/// F(q) and dF/dq.
struct GeneratorValue {
  double f;
  double fprime;
};

namespace gen {

/// F(q) = -v2 sech(q - center). sign picks the f(x) = +-exp(q) branch of the
/// target closed form; both branches describe the same potential.
struct ScarfII {
  double v2;
  int sign = +1;
  double center = 0.0;
};

/// F(q) = -4/(3 cos^2(q - center) - 4) - 5/4.
struct SamsonovRoy {
  double center = 0.0;
};

/// F(q) = a exp(-q).
struct Morse {
  double a;
};

struct Custom {
  std::function<double(double)> f;
  std::function<double(double)> fprime;
  std::string label = "Custom";
};

}  // namespace gen

enum class GeneratorKind { ScarfII, SamsonovRoy, Morse, Custom };

std::string_view to_string(GeneratorKind kind) noexcept;

// The eta-weak-pseudo-Hermiticity generator F(q). Built-in kinds carry
// analytic derivatives; a custom generator must supply its own derivative,
// which is checked against centered differences when it is constructed.
class Generator {
 public:
  static Generator scarf2(double v2, int sign = +1, double center = 0.0);
  static Generator samsonov_roy(double center = 0.0);
  static Generator morse(double a);
  /// Throws Error(InvalidGenerator) if fprime disagrees with a centered
  /// difference of f by more than tol * (1 + |fprime|) on [check_lo, check_hi].
  static Generator custom(std::function<double(double)> f, std::function<double(double)> fprime,
                          std::string label = "Custom", double check_lo = -5.0,
                          double check_hi = 5.0, double tol = 1e-6);
  /// F = value everywhere.
  static Generator constant(double value);

  GeneratorKind kind() const noexcept;
  std::string name() const;
  GeneratorValue eval(double q) const;

  /// Reference potential approaches a continuum at the ends of the interval
  /// (everything except the compact periodic Samsonov-Roy model).
  bool has_continuum() const noexcept { return kind() != GeneratorKind::SamsonovRoy; }

  const gen::ScarfII* scarf2_params() const noexcept { return std::get_if<gen::ScarfII>(&kind_); }
  const gen::SamsonovRoy* samsonov_roy_params() const noexcept {
    return std::get_if<gen::SamsonovRoy>(&kind_);
  }
  const gen::Morse* morse_params() const noexcept { return std::get_if<gen::Morse>(&kind_); }

 private:
  using Kind = std::variant<gen::ScarfII, gen::SamsonovRoy, gen::Morse, gen::Custom>;
  explicit Generator(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

}  // namespace pdm
