#include "pdm/report_json.hpp"

#include <cmath>
#include <limits>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

using nlohmann::json;

json cplx_to_json(cplx z) { return json::array({number_to_json(z.real()), number_to_json(z.imag())}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidConfig, "complex value must be [re, im]");
  return {number_from_json(j[0]), number_from_json(j[1])};
}

}  // namespace

json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error(Errc::InvalidConfig, "expected a number, got " + j.dump());
}

json to_json(const VerificationReport& r) {
  json j;
  j["kind"] = r.kind;
  j["inputs"] = r.inputs;
  j["levels"] = json::array();
  for (const auto& l : r.levels) {
    j["levels"].push_back({{"index", l.index},
                           {"computed", cplx_to_json(l.computed)},
                           {"expected", cplx_to_json(l.expected)},
                           {"error", number_to_json(l.error)},
                           {"matched", l.matched}});
  }
  j["grid_sizes"] = r.grid_sizes;
  j["sequence"] = json::array();
  for (double v : r.sequence) j["sequence"].push_back(number_to_json(v));
  if (!r.secondary_label.empty()) {
    j["secondary_label"] = r.secondary_label;
    j["secondary"] = json::array();
    for (double v : r.secondary) j["secondary"].push_back(number_to_json(v));
  }
  j["rate"] = r.rate ? number_to_json(*r.rate) : json(nullptr);
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"value", number_to_json(c.value)},
                           {"tolerance", number_to_json(c.tolerance)},
                           {"relation", c.relation},
                           {"pass", c.pass}});
  }
  j["notes"] = r.notes;
  j["warning"] = r.warning;
  j["pass"] = r.pass;
  if (r.runtime_seconds > 0.0) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.kind = j.at("kind").get<std::string>();
    r.inputs = j.at("inputs");
    for (const auto& l : j.at("levels")) {
      r.levels.push_back({l.at("index").get<int>(), cplx_from_json(l.at("computed")),
                          cplx_from_json(l.at("expected")), number_from_json(l.at("error")),
                          l.at("matched").get<bool>()});
    }
    r.grid_sizes = j.at("grid_sizes").get<std::vector<int>>();
    for (const auto& v : j.at("sequence")) r.sequence.push_back(number_from_json(v));
    if (j.contains("secondary_label")) {
      r.secondary_label = j.at("secondary_label").get<std::string>();
      for (const auto& v : j.at("secondary")) r.secondary.push_back(number_from_json(v));
    }
    if (!j.at("rate").is_null()) r.rate = number_from_json(j.at("rate"));
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), number_from_json(c.at("value")),
                          number_from_json(c.at("tolerance")), c.at("relation").get<std::string>(),
                          c.at("pass").get<bool>()});
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.warning = j.at("warning").get<bool>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("runtime_seconds")) r.runtime_seconds = j.at("runtime_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidConfig, std::string("malformed report: ") + e.what());
  }
}

json to_json(const Spectrum& s) {
  json j;
  j["size"] = s.size();
  j["trace"] = cplx_to_json(s.trace);
  j["frobenius_norm"] = number_to_json(s.frobenius_norm);
  j["eigenvalues"] = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json e;
    e["index"] = i;
    e["value"] = cplx_to_json(s.values[i]);
    e["bound"] = i < s.bound.size() && s.bound[i];
    e["residual"] = i < s.residuals.size() && !std::isnan(s.residuals[i]) ? json(s.residuals[i]) : json(nullptr);
    j["eigenvalues"].push_back(std::move(e));
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pdm
