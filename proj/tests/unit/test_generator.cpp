#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pdm/generator.hpp"

using namespace pdm;

TEST_CASE("values at q = 0") {
  auto s = Generator::scarf2(2).eval(0);
  CHECK(s.f == -2.0);
  CHECK(s.fprime == 0.0);
  auto r = Generator::samsonov_roy().eval(0);
  CHECK(r.f == doctest::Approx(11.0 / 4.0).epsilon(1e-15));
  CHECK(r.fprime == 0.0);
  auto m = Generator::morse(1).eval(0);
  CHECK(m.f == 1.0);
  CHECK(m.fprime == -1.0);
}

TEST_CASE("centre shift translates the generator") {
  const auto g0 = Generator::scarf2(2.5);
  const auto g1 = Generator::scarf2(2.5, 1, 13.0);
  const auto s0 = Generator::samsonov_roy();
  const auto s1 = Generator::samsonov_roy(1.0 + M_PI);
  for (double q : oracle::linspace(-3, 3, 25)) {
    CHECK(g1.eval(q + 13.0).f == doctest::Approx(g0.eval(q).f).epsilon(1e-14));
    CHECK(g1.eval(q + 13.0).fprime == doctest::Approx(g0.eval(q).fprime).epsilon(1e-12).scale(1));
    CHECK(s1.eval(q + 1.0 + M_PI).f == doctest::Approx(s0.eval(q).f).epsilon(1e-12));
  }
}

TEST_CASE("analytic derivatives converge like centred differences") {
  for (const auto& g : {Generator::scarf2(2.0), Generator::scarf2(-1.3, -1, 0.4), Generator::samsonov_roy(),
                        Generator::morse(0.7)}) {
    auto f = [&](double q) { return g.eval(q).f; };
    double e1 = 0.0, e2 = 0.0;
    for (double q : oracle::linspace(-2.5, 2.5, 41)) {
      const double d = g.eval(q).fprime;
      e1 = std::max(e1, std::abs(oracle::central_diff(f, q, 1e-2) - d));
      e2 = std::max(e2, std::abs(oracle::central_diff(f, q, 5e-3) - d));
    }
    INFO(g.name());
    CHECK(e1 / e2 >= 3.5);
  }
}

TEST_CASE("custom generators") {
  auto ok = Generator::custom([](double q) { return std::sin(q); }, [](double q) { return std::cos(q); }, "sine");
  CHECK(ok.kind() == GeneratorKind::Custom);
  CHECK(ok.name() == "sine");
  CHECK(ok.eval(0.3).fprime == std::cos(0.3));
  CHECK_ERRC(Generator::custom([](double q) { return std::sin(q); }, [](double q) { return -std::cos(q); }),
             Errc::InvalidGenerator);
  CHECK_ERRC(Generator::custom(nullptr, [](double) { return 0.0; }), Errc::InvalidGenerator);
  auto c = Generator::constant(1.5);
  CHECK(c.eval(7.0).f == 1.5);
  CHECK(c.eval(7.0).fprime == 0.0);
}

TEST_CASE("kinds") {
  CHECK(Generator::scarf2(1).kind() == GeneratorKind::ScarfII);
  CHECK(Generator::samsonov_roy().kind() == GeneratorKind::SamsonovRoy);
  CHECK(Generator::morse(1).kind() == GeneratorKind::Morse);
  CHECK_FALSE(Generator::samsonov_roy().has_continuum());
  CHECK(Generator::scarf2(1).has_continuum());
  CHECK(Generator::scarf2(1).scarf2_params()->v2 == 1.0);
  CHECK(Generator::morse(2).morse_params()->a == 2.0);
}
