#include "pdm/ordering.hpp"

#include <charconv>
#include <utility>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

constexpr std::array<OrderingPreset, 5> kPresets = {
    OrderingPreset::GoraWilliams, OrderingPreset::BenDanielDuke, OrderingPreset::ZhuKroemer,
    OrderingPreset::LiKuhn, OrderingPreset::MustafaMazharimousavi};

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(Errc::InvalidConfig, "not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::InvalidConfig, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::span<const OrderingPreset> all_presets() noexcept { return kPresets; }

std::string_view preset_name(OrderingPreset preset) noexcept {
  switch (preset) {
    case OrderingPreset::GoraWilliams: return "GoraWilliams";
    case OrderingPreset::BenDanielDuke: return "BenDanielDuke";
    case OrderingPreset::ZhuKroemer: return "ZhuKroemer";
    case OrderingPreset::LiKuhn: return "LiKuhn";
    case OrderingPreset::MustafaMazharimousavi: return "MustafaMazharimousavi";
  }
  return "";
}

std::optional<OrderingPreset> preset_from_name(std::string_view name) noexcept {
  for (auto p : kPresets) {
    if (preset_name(p) == name) return p;
  }
  return std::nullopt;
}

AmbiguityOrdering::AmbiguityOrdering(Rational alpha, Rational beta, Rational gamma,
                                     std::string name)
    : alpha_(alpha), beta_(beta), gamma_(gamma), name_(std::move(name)) {
  if (alpha_ + beta_ + gamma_ != Rational(-1)) {
    throw Error(Errc::InvalidOrdering,
                "alpha + beta + gamma must equal -1, got " + format_rational(alpha_ + beta_ + gamma_));
  }
}

AmbiguityOrdering AmbiguityOrdering::from_alpha_beta(Rational alpha, Rational beta,
                                                     std::string name) {
  return AmbiguityOrdering(alpha, beta, Rational(-1) - alpha - beta, std::move(name));
}

AmbiguityOrdering ordering_preset(OrderingPreset preset) {
  const std::string name(preset_name(preset));
  switch (preset) {
    case OrderingPreset::GoraWilliams:
      return AmbiguityOrdering(Rational(-1), Rational(0), Rational(0), name);
    case OrderingPreset::BenDanielDuke:
      return AmbiguityOrdering(Rational(0), Rational(-1), Rational(0), name);
    case OrderingPreset::ZhuKroemer:
      return AmbiguityOrdering(Rational(-1, 2), Rational(0), Rational(-1, 2), name);
    case OrderingPreset::LiKuhn:
      return AmbiguityOrdering(Rational(0), Rational(-1, 2), Rational(-1, 2), name);
    case OrderingPreset::MustafaMazharimousavi:
      return AmbiguityOrdering(Rational(-1, 4), Rational(-1, 2), Rational(-1, 4), name);
  }
  throw Error(Errc::InvalidOrdering, "unknown preset");
}

Rational delta_of(const AmbiguityOrdering& ordering) {
  const Rational b1 = ordering.beta() + Rational(1);
  if (b1 == Rational(0)) {
    throw Error(Errc::BetaMinusOne, "delta is undefined for beta = -1 (" +
                                        (ordering.name().empty() ? std::string("ordering")
                                                                 : ordering.name()) +
                                        ")");
  }
  const Rational& a = ordering.alpha();
  return Rational(4) * a + Rational(1) + Rational(4) * a * a / b1;
}

}  // namespace pdm
