#include <doctest.h>

#include "oracles.hpp"
#include "pdm/ordering.hpp"

using namespace pdm;

namespace {

// delta in floating point, written out directly.
double delta_float(double a, double b) { return 4 * a + 1 + 4 * a * a / (b + 1); }

}  // namespace

TEST_CASE("preset values") {
  auto zk = ordering_preset(OrderingPreset::ZhuKroemer);
  CHECK(zk.alpha() == Rational(-1, 2));
  CHECK(zk.beta() == Rational(0));
  CHECK(zk.gamma() == Rational(-1, 2));
  auto gw = ordering_preset(OrderingPreset::GoraWilliams);
  CHECK(gw.alpha() == Rational(-1));
  CHECK(gw.beta() == Rational(0));
  CHECK(gw.gamma() == Rational(0));
  auto mm = ordering_preset(OrderingPreset::MustafaMazharimousavi);
  CHECK(mm.alpha() == Rational(-1, 4));
  CHECK(mm.beta() == Rational(-1, 2));
  CHECK(mm.gamma() == Rational(-1, 4));
  auto lk = ordering_preset(OrderingPreset::LiKuhn);
  CHECK(lk.beta() == Rational(-1, 2));
  auto bdd = ordering_preset(OrderingPreset::BenDanielDuke);
  CHECK(bdd.beta() == Rational(-1));
}

TEST_CASE("every preset sums to -1 exactly") {
  CHECK(all_presets().size() == 5);
  for (auto p : all_presets()) {
    const auto o = ordering_preset(p);
    CHECK(o.alpha() + o.beta() + o.gamma() == Rational(-1));
    CHECK(preset_from_name(preset_name(p)) == p);
    CHECK(o.name() == preset_name(p));
  }
  CHECK_FALSE(preset_from_name("Nope"));
}

TEST_CASE("delta table") {
  CHECK(delta_of(ordering_preset(OrderingPreset::ZhuKroemer)) == Rational(0));
  CHECK(delta_of(ordering_preset(OrderingPreset::GoraWilliams)) == Rational(1));
  CHECK(delta_of(ordering_preset(OrderingPreset::LiKuhn)) == Rational(1));
  CHECK(delta_of(ordering_preset(OrderingPreset::MustafaMazharimousavi)) == Rational(1, 2));
  CHECK_ERRC(delta_of(ordering_preset(OrderingPreset::BenDanielDuke)), Errc::BetaMinusOne);
}

TEST_CASE("delta agrees with the floating-point formula") {
  for (int an = -8; an <= 4; ++an) {
    for (int bn = -7; bn <= 6; ++bn) {
      if (bn == -4) continue;  // beta = -1
      const Rational a(an, 4), b(bn, 4);
      const auto o = AmbiguityOrdering::from_alpha_beta(a, b);
      CHECK(o.gamma() == Rational(-1) - a - b);
      const double expect = delta_float(an / 4.0, bn / 4.0);
      CHECK(to_double(delta_of(o)) == doctest::Approx(expect).epsilon(1e-14));
    }
  }
}

TEST_CASE("constraint violations") {
  CHECK_ERRC(AmbiguityOrdering(Rational(0), Rational(0), Rational(0)), Errc::InvalidOrdering);
  CHECK_ERRC(AmbiguityOrdering(Rational(-1, 3), Rational(-1, 3), Rational(-1, 2)), Errc::InvalidOrdering);
  CHECK_NOTHROW(AmbiguityOrdering(Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational(" 2/4 ") == Rational(1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("+5/3") == Rational(5, 3));
  CHECK_ERRC(parse_rational("1/0"), Errc::InvalidConfig);
  CHECK_ERRC(parse_rational("abc"), Errc::InvalidConfig);
  CHECK_ERRC(parse_rational("0.5"), Errc::InvalidConfig);
  CHECK_ERRC(parse_rational(""), Errc::InvalidConfig);
  for (const char* s : {"-1/2", "3", "0", "-7/9"}) CHECK(format_rational(parse_rational(s)) == s);
}
