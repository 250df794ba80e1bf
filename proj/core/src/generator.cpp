#include "pdm/generator.hpp"

#include <cmath>
#include <sstream>

#include "pdm/errors.hpp"

namespace pdm {

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::ScarfII: return "ScarfII";
    case GeneratorKind::SamsonovRoy: return "SamsonovRoy";
    case GeneratorKind::Morse: return "Morse";
    case GeneratorKind::Custom: return "Custom";
  }
  return "";
}

Generator Generator::scarf2(double v2, int sign, double center) {
  if (!std::isfinite(v2) || v2 == 0.0) {
    throw Error(Errc::InvalidGenerator, "ScarfII needs a finite nonzero v2");
  }
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidGenerator, "ScarfII sign must be +1 or -1");
  if (!std::isfinite(center)) throw Error(Errc::InvalidGenerator, "ScarfII center must be finite");
  return Generator(gen::ScarfII{v2, sign, center});
}

Generator Generator::samsonov_roy(double center) {
  if (!std::isfinite(center)) throw Error(Errc::InvalidGenerator, "center must be finite");
  return Generator(gen::SamsonovRoy{center});
}

Generator Generator::morse(double a) {
  if (!std::isfinite(a)) throw Error(Errc::InvalidGenerator, "Morse a must be finite");
  return Generator(gen::Morse{a});
}

Generator Generator::custom(std::function<double(double)> f, std::function<double(double)> fprime,
                            std::string label, double check_lo, double check_hi, double tol) {
  if (!f || !fprime) throw Error(Errc::InvalidGenerator, "custom generator needs F and F'");
  if (!(check_lo < check_hi)) throw Error(Errc::InvalidGenerator, "empty derivative check range");
  constexpr int kSamples = 41;
  constexpr double kStep = 1e-5;
  for (int i = 0; i < kSamples; ++i) {
    const double q = check_lo + (check_hi - check_lo) * i / (kSamples - 1);
    const double declared = fprime(q);
    const double fd = (f(q + kStep) - f(q - kStep)) / (2.0 * kStep);
    if (!(std::abs(declared - fd) <= tol * (1.0 + std::abs(declared)))) {
      std::ostringstream msg;
      msg << "declared F'(" << q << ") = " << declared << " but centered difference gives " << fd;
      throw Error(Errc::InvalidGenerator, msg.str());
    }
  }
  return Generator(gen::Custom{std::move(f), std::move(fprime), std::move(label)});
}

Generator Generator::constant(double value) {
  return custom([value](double) { return value; }, [](double) { return 0.0; },
                "Constant(" + std::to_string(value) + ")");
}

GeneratorKind Generator::kind() const noexcept {
  switch (kind_.index()) {
    case 0: return GeneratorKind::ScarfII;
    case 1: return GeneratorKind::SamsonovRoy;
    case 2: return GeneratorKind::Morse;
    default: return GeneratorKind::Custom;
  }
}

std::string Generator::name() const {
  if (const auto* c = std::get_if<gen::Custom>(&kind_)) return c->label;
  return std::string(to_string(kind()));
}

GeneratorValue Generator::eval(double q) const {
  struct Visitor {
    double q;
    GeneratorValue operator()(const gen::ScarfII& g) const {
      const double u = q - g.center;
      const double sech = 1.0 / std::cosh(u);
      return {-g.v2 * sech, g.v2 * sech * std::tanh(u)};
    }
    GeneratorValue operator()(const gen::SamsonovRoy& g) const {
      const double u = q - g.center;
      const double c = std::cos(u);
      const double s = std::sin(u);
      const double den = 3.0 * c * c - 4.0;  // <= -1
      return {-4.0 / den - 1.25, -24.0 * c * s / (den * den)};
    }
    GeneratorValue operator()(const gen::Morse& g) const {
      const double e = g.a * std::exp(-q);
      return {e, -e};
    }
    GeneratorValue operator()(const gen::Custom& g) const { return {g.f(q), g.fprime(q)}; }
  };
  return std::visit(Visitor{q}, kind_);
}

}  // namespace pdm
