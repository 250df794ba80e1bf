#include <doctest.h>

#include "oracles.hpp"
#include "pdm/grid.hpp"
#include "pdm/model.hpp"

using namespace pdm;

TEST_CASE("uniform grid arithmetic") {
  const auto g = uniform_grid(0, 1, 3);
  REQUIRE(g.size() == 3);
  CHECK(g.nodes() == std::vector<double>{0.25, 0.5, 0.75});
  CHECK(g.spacing() == 0.25);
  CHECK(g.position(0) == 0.0);
  CHECK(g.position(4) == 1.0);
  CHECK(g.weight(1) == 0.25);
  CHECK(uniform_grid(-M_PI, M_PI, 799).spacing() == doctest::Approx(2 * M_PI / 800).epsilon(1e-15));
}

TEST_CASE("grid errors") {
  CHECK_ERRC(uniform_grid(1, 0, 3), Errc::BadInterval);
  CHECK_ERRC(uniform_grid(0, 0, 3), Errc::BadInterval);
  CHECK_ERRC(uniform_grid(0, 1, 2), Errc::TooFewNodes);
  CHECK_ERRC(uniform_grid(0, INFINITY, 5), Errc::BadInterval);
  CHECK_ERRC(uniform_grid(0, 1, 5, GridKind::QInducedX), Errc::GridMismatch);
}

TEST_CASE("matched domains") {
  const auto zk = ordering_preset(OrderingPreset::ZhuKroemer);
  const auto gw = ordering_preset(OrderingPreset::GoraWilliams);

  SUBCASE("constant mass") {
    const ModelSpec s(Generator::scarf2(1), zk, MassProfile::constant(), {0, M_PI});
    const auto [gx, gq] = matched_domains(s, 50);
    CHECK(gx.nodes() == gq.nodes());
    CHECK(gx.kind() == GridKind::UniformX);
    CHECK(gq.kind() == GridKind::UniformQ);
  }
  SUBCASE("logarithmic map") {
    const ModelSpec s(Generator::samsonov_roy(), zk, MassProfile::for_ordering(zk, 1, 2), {-M_PI, M_PI});
    const auto [gx, gq] = matched_domains(s, 100);
    CHECK(gx.kind() == GridKind::QInducedX);
    CHECK(gx.a() == doctest::Approx(std::exp(-M_PI) - 2).epsilon(1e-15));
    CHECK(gx.b() == doctest::Approx(std::exp(M_PI) - 2).epsilon(1e-15));
    for (std::size_t i = 0; i < gx.size(); ++i) {
      CHECK(gx.params()[i] == gq.nodes()[i]);
      CHECK(gx.nodes()[i] == s.map().x_of_q(gq.nodes()[i]));
      if (i > 0) CHECK(gx.nodes()[i] > gx.nodes()[i - 1]);
    }
  }
  SUBCASE("square-root map") {
    const ModelSpec s(Generator::scarf2(2, 1, 6), gw, MassProfile::for_ordering(gw, 1, 0), {0.5, 12});
    const auto [gx, gq] = matched_domains(s, 40);
    CHECK(gx.a() == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(gx.b() == doctest::Approx(36.0).epsilon(1e-15));
    CHECK(gq.a() == 0.5);
    CHECK(gq.b() == 12.0);
  }
}
