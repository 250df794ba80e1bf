#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "pdm/config.hpp"
#include "pdm/report_json.hpp"

using namespace pdm;
using nlohmann::json;

namespace {

std::string error_text(const json& j) {
  try {
    parse_config(j);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidConfig);
    return e.what();
  }
  FAIL("expected an InvalidConfig error");
  return {};
}

}  // namespace

TEST_CASE("empty document gives the defaults") {
  CHECK(parse_config(json::object()) == RunConfig{});
  const auto spec = build_model(RunConfig{});
  CHECK(spec.generator().name() == "ScarfII");
  CHECK(spec.ordering().name() == "ZhuKroemer");
}

TEST_CASE("unknown keys and bad values name the key") {
  CHECK(error_text({{"bogus", 1}}).find("'bogus'") != std::string::npos);
  CHECK(error_text({{"tolerances", {{"isospectal", 0.1}}}}).find("'tolerances.isospectal'") != std::string::npos);
  CHECK(error_text({{"n", "800"}}).find("'n'") != std::string::npos);
  CHECK(error_text({{"n", 2}}).find("'n'") != std::string::npos);
  CHECK(error_text({{"q_interval", {3, 1}}}).find("'q_interval'") != std::string::npos);
  CHECK(error_text({{"ordering", "Kroemer"}}).find("'ordering'") != std::string::npos);
  CHECK(error_text({{"picture", "side"}}).find("'picture'") != std::string::npos);
  CHECK(error_text({{"generator", {{"kind", "Scarf"}}}}).find("'generator.kind'") != std::string::npos);
  CHECK(error_text({{"sweep_n", {400, 200}}}).find("'sweep_n'") != std::string::npos);
  CHECK(error_text(json::array()).find("<root>") != std::string::npos);
}

TEST_CASE("model construction failures become config errors") {
  RunConfig bdd;
  bdd.ordering.preset = "BenDanielDuke";
  CHECK_ERRC(build_model(bdd), Errc::InvalidConfig);
  RunConfig half;
  half.ordering.preset = "GoraWilliams";
  CHECK_ERRC(build_model(half), Errc::InvalidConfig);  // q interval (-12, 12) leaves the half-line image
  half.q_interval = {1, 25};
  CHECK_NOTHROW(build_model(half));
  CHECK(build_model(half).generator().scarf2_params()->center == 13.0);
}

TEST_CASE("explicit ordering and profile forms") {
  const auto c = parse_config(json::parse(R"({
    "ordering": {"alpha": "-1/4", "beta": "-1/2", "gamma": "-1/4"},
    "profile": {"c1": 2, "c2": 3},
    "generator": {"kind": "SamsonovRoy"},
    "q_interval": [1, 7.283185307179586]
  })"));
  const auto spec = build_model(c);
  CHECK(spec.profile().delta() == 0.5);
  CHECK(spec.profile().c1() == 2.0);
  CHECK(parse_config({{"profile", "constant"}}).profile.constant);
  CHECK(parse_config({{"profile", "derived"}}).profile == ProfileConfig{});
  CHECK(error_text({{"ordering", {{"alpha", "-1/4"}, {"beta", "-1/2"}}}}).find("'ordering.gamma'") != std::string::npos);
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.generator.kind = "SamsonovRoy";
  c.generator.center = 0.25;
  c.ordering.explicit_abg = std::vector<std::string>{"-1/2", "0", "-1/2"};
  c.profile = {false, 2.0, 3.0};
  c.alpha0 = 0.1;
  c.q_interval = {-1.5, 2.5};
  c.intertwine_q_interval = Interval{-1, 1};
  c.n = 321;
  c.sweep_n = {100, 200};
  c.picture = Picture::Target;
  c.tolerances.isospectral = 0.02;
  c.output = {"somewhere", true, true};
  c.seed = 18446744073709551615ull;
  CHECK(parse_config(json::parse(to_json(c).dump())) == c);
  CHECK(parse_config(json::parse(to_json(RunConfig{}).dump())) == RunConfig{});
}

TEST_CASE("load_config reports syntax positions") {
  const auto path = std::filesystem::temp_directory_path() / "pdm_bad_config.json";
  std::ofstream(path) << "{\n  \"n\": 100,\n  \"k\": ,\n}\n";
  try {
    load_config(path);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidConfig);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_ERRC(load_config(std::filesystem::temp_directory_path() / "pdm_no_such_config.json"), Errc::InvalidConfig);
}

TEST_CASE("report round trip") {
  VerificationReport r;
  r.kind = "analytic";
  r.inputs = {{"n", 10}, {"generator", "ScarfII"}};
  r.levels = {{0, {-4.0001, 1e-13}, {-4, 0}, 1e-4, true}, {1, {}, {-1, 0}, INFINITY, false}};
  r.grid_sizes = {10};
  r.sequence = {INFINITY};
  r.secondary = {0.5};
  r.secondary_label = "action_residual";
  r.rate = 1.98;
  r.checks = {{"max_level_error", INFINITY, 1e-2, "<=", false}};
  r.notes = {"x"};
  r.warning = true;
  r.finalize();
  CHECK_FALSE(r.pass);
  const auto text = dump(to_json(r));
  CHECK(report_from_json(json::parse(text)) == r);
  CHECK(text.find("\"inf\"") != std::string::npos);
  CHECK(text.find("runtime_seconds") == std::string::npos);
  r.runtime_seconds = 1.5;
  CHECK(report_from_json(json::parse(dump(to_json(r)))) == r);
  CHECK_ERRC(report_from_json(json::object()), Errc::InvalidConfig);
}

TEST_CASE("number encoding") {
  CHECK(number_to_json(-INFINITY) == "-inf");
  CHECK(std::isnan(number_from_json("nan")));
  CHECK(number_from_json(2.5) == 2.5);
  CHECK_ERRC(number_from_json("two"), Errc::InvalidConfig);
}
