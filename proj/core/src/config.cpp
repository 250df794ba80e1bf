#include "pdm/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "pdm/errors.hpp"
#include "pdm/generator.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/ordering.hpp"

namespace pdm {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  throw Error(Errc::InvalidConfig, "key '" + key + "': " + what);
}

void reject_unknown(const json& obj, const std::string& prefix, std::initializer_list<const char*> known) {
  if (!obj.is_object()) bad(prefix.empty() ? "<root>" : prefix, "expected an object");
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) bad(prefix.empty() ? k : prefix + "." + k, "unknown key");
  }
}

std::string path(const std::string& prefix, const char* key) { return prefix.empty() ? key : prefix + "." + key; }

double get_number(const json& obj, const std::string& prefix, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) bad(path(prefix, key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(path(prefix, key), "must be finite");
  return d;
}

double get_positive(const json& obj, const std::string& prefix, const char* key, double fallback) {
  const double d = get_number(obj, prefix, key, fallback);
  if (!(d > 0.0)) bad(path(prefix, key), "must be positive");
  return d;
}

int get_int(const json& obj, const std::string& prefix, const char* key, int fallback, int min_value) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) bad(path(prefix, key), "expected an integer");
  const auto i = v.get<long long>();
  if (i < min_value || i > 1'000'000) bad(path(prefix, key), "out of range");
  return static_cast<int>(i);
}

bool get_bool(const json& obj, const std::string& prefix, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) bad(path(prefix, key), "expected true or false");
  return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const std::string& prefix, const char* key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) bad(path(prefix, key), "expected a string");
  return obj.at(key).get<std::string>();
}

Interval get_interval(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    bad(key, "expected [lo, hi]");
  }
  Interval i{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(i.lo) || !std::isfinite(i.hi) || !(i.lo < i.hi)) bad(key, "need finite lo < hi");
  return i;
}

std::vector<int> get_sizes(const json& obj, const char* key, const std::vector<int>& fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_array() || v.empty()) bad(key, "expected a non-empty list of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(key, "expected integers");
    const auto n = e.get<long long>();
    if (n < kMinNodes || n > 100'000) bad(key, "grid size out of range");
    if (!out.empty() && n <= out.back()) bad(key, "grid sizes must ascend");
    out.push_back(static_cast<int>(n));
  }
  return out;
}

GeneratorConfig parse_generator(const json& g) {
  reject_unknown(g, "generator", {"kind", "v2", "sign", "center", "a"});
  GeneratorConfig c;
  c.kind = get_string(g, "generator", "kind", c.kind);
  if (c.kind != "ScarfII" && c.kind != "SamsonovRoy" && c.kind != "Morse") {
    bad("generator.kind", "expected ScarfII, SamsonovRoy or Morse");
  }
  c.v2 = get_number(g, "generator", "v2", c.v2);
  c.sign = get_int(g, "generator", "sign", c.sign, -1);
  if (c.sign != 1 && c.sign != -1) bad("generator.sign", "expected 1 or -1");
  if (g.contains("center")) c.center = get_number(g, "generator", "center", 0.0);
  c.a = get_number(g, "generator", "a", c.a);
  return c;
}

OrderingConfig parse_ordering(const json& o) {
  OrderingConfig c;
  if (o.is_string()) {
    c.preset = o.get<std::string>();
    if (!preset_from_name(c.preset)) bad("ordering", "unknown preset '" + c.preset + "'");
    return c;
  }
  reject_unknown(o, "ordering", {"alpha", "beta", "gamma"});
  std::vector<std::string> abg;
  for (const char* k : {"alpha", "beta", "gamma"}) {
    if (!o.contains(k) || !o.at(k).is_string()) bad(path("ordering", k), "expected a rational string such as \"-1/2\"");
    abg.push_back(o.at(k).get<std::string>());
  }
  c.explicit_abg = abg;
  return c;
}

ProfileConfig parse_profile(const json& p) {
  ProfileConfig c;
  if (p.is_string()) {
    const auto s = p.get<std::string>();
    if (s == "constant") {
      c.constant = true;
    } else if (s != "derived") {
      bad("profile", "expected \"derived\", \"constant\" or {\"c1\": .., \"c2\": ..}");
    }
    return c;
  }
  reject_unknown(p, "profile", {"c1", "c2"});
  c.c1 = get_number(p, "profile", "c1", c.c1);
  c.c2 = get_number(p, "profile", "c2", c.c2);
  if (c.c1 == 0.0) bad("profile.c1", "must be nonzero");
  return c;
}

Tolerances parse_tolerances(const json& t) {
  reject_unknown(t, "tolerances",
                 {"analytic_reference", "analytic_target", "isospectral", "bound_im", "edge_frac",
                  "intertwine_rate", "isospectral_rate", "sweep_rate", "eigensolver"});
  Tolerances c;
  const std::string p = "tolerances";
  c.analytic_reference = get_positive(t, p, "analytic_reference", c.analytic_reference);
  c.analytic_target = get_positive(t, p, "analytic_target", c.analytic_target);
  c.isospectral = get_positive(t, p, "isospectral", c.isospectral);
  c.bound_im = get_positive(t, p, "bound_im", c.bound_im);
  c.edge_frac = get_positive(t, p, "edge_frac", c.edge_frac);
  if (c.edge_frac >= 0.5) bad("tolerances.edge_frac", "must be below 0.5");
  c.intertwine_rate = get_number(t, p, "intertwine_rate", c.intertwine_rate);
  c.isospectral_rate = get_number(t, p, "isospectral_rate", c.isospectral_rate);
  c.sweep_rate = get_number(t, p, "sweep_rate", c.sweep_rate);
  c.eigensolver = get_positive(t, p, "eigensolver", c.eigensolver);
  return c;
}

OutputConfig parse_output(const json& o) {
  reject_unknown(o, "output", {"dir", "vectors", "timing"});
  OutputConfig c;
  c.dir = get_string(o, "output", "dir", c.dir);
  if (c.dir.empty()) bad("output.dir", "must not be empty");
  c.vectors = get_bool(o, "output", "vectors", c.vectors);
  c.timing = get_bool(o, "output", "timing", c.timing);
  return c;
}

json interval_json(const Interval& i) { return json::array({i.lo, i.hi}); }

}  // namespace

RunConfig parse_config(const json& j) {
  reject_unknown(j, "",
                 {"generator", "ordering", "profile", "alpha0", "q_interval", "intertwine_q_interval", "n", "k",
                  "oracle_level", "isospectral_n", "intertwine_n", "sweep_n", "picture", "tolerances", "output",
                  "map_samples", "seed", "eigensolver_cases"});
  RunConfig c;
  if (j.contains("generator")) c.generator = parse_generator(j.at("generator"));
  if (j.contains("ordering")) c.ordering = parse_ordering(j.at("ordering"));
  if (j.contains("profile")) c.profile = parse_profile(j.at("profile"));
  c.alpha0 = get_number(j, "", "alpha0", c.alpha0);
  if (j.contains("q_interval")) c.q_interval = get_interval(j.at("q_interval"), "q_interval");
  if (j.contains("intertwine_q_interval") && !j.at("intertwine_q_interval").is_null()) {
    c.intertwine_q_interval = get_interval(j.at("intertwine_q_interval"), "intertwine_q_interval");
  }
  c.n = get_int(j, "", "n", c.n, kMinNodes);
  c.k = get_int(j, "", "k", c.k, 1);
  c.oracle_level = get_int(j, "", "oracle_level", c.oracle_level, 0);
  c.isospectral_n = get_sizes(j, "isospectral_n", c.isospectral_n);
  c.intertwine_n = get_sizes(j, "intertwine_n", c.intertwine_n);
  c.sweep_n = get_sizes(j, "sweep_n", c.sweep_n);
  if (j.contains("picture")) {
    const auto p = j.at("picture").is_string() ? picture_from_string(j.at("picture").get<std::string>())
                                               : std::nullopt;
    if (!p) bad("picture", "expected \"reference\" or \"target\"");
    c.picture = *p;
  }
  if (j.contains("tolerances")) c.tolerances = parse_tolerances(j.at("tolerances"));
  if (j.contains("output")) c.output = parse_output(j.at("output"));
  c.map_samples = get_int(j, "", "map_samples", c.map_samples, 2);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad("seed", "expected a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  c.eigensolver_cases = get_int(j, "", "eigensolver_cases", c.eigensolver_cases, 1);
  return c;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::InvalidConfig, "cannot open config file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidConfig, file.string() + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json j;
  json g{{"kind", c.generator.kind}, {"v2", c.generator.v2}, {"sign", c.generator.sign}, {"a", c.generator.a}};
  if (c.generator.center) g["center"] = *c.generator.center;
  j["generator"] = g;
  if (c.ordering.explicit_abg) {
    const auto& v = *c.ordering.explicit_abg;
    j["ordering"] = {{"alpha", v[0]}, {"beta", v[1]}, {"gamma", v[2]}};
  } else {
    j["ordering"] = c.ordering.preset;
  }
  j["profile"] = c.profile.constant ? json("constant") : json{{"c1", c.profile.c1}, {"c2", c.profile.c2}};
  j["alpha0"] = c.alpha0;
  j["q_interval"] = interval_json(c.q_interval);
  j["intertwine_q_interval"] = c.intertwine_q_interval ? interval_json(*c.intertwine_q_interval) : json(nullptr);
  j["n"] = c.n;
  j["k"] = c.k;
  j["oracle_level"] = c.oracle_level;
  j["isospectral_n"] = c.isospectral_n;
  j["intertwine_n"] = c.intertwine_n;
  j["sweep_n"] = c.sweep_n;
  j["picture"] = std::string(to_string(c.picture));
  const auto& t = c.tolerances;
  j["tolerances"] = {{"analytic_reference", t.analytic_reference}, {"analytic_target", t.analytic_target},
                     {"isospectral", t.isospectral},           {"bound_im", t.bound_im},
                     {"edge_frac", t.edge_frac},               {"intertwine_rate", t.intertwine_rate},
                     {"isospectral_rate", t.isospectral_rate}, {"sweep_rate", t.sweep_rate},
                     {"eigensolver", t.eigensolver}};
  j["output"] = {{"dir", c.output.dir}, {"vectors", c.output.vectors}, {"timing", c.output.timing}};
  j["map_samples"] = c.map_samples;
  j["seed"] = c.seed;
  j["eigensolver_cases"] = c.eigensolver_cases;
  return j;
}

namespace {

ModelSpec make_model(const RunConfig& c, Interval q) {
  try {
    const AmbiguityOrdering ordering =
        c.ordering.explicit_abg
            ? AmbiguityOrdering(parse_rational((*c.ordering.explicit_abg)[0]),
                                parse_rational((*c.ordering.explicit_abg)[1]),
                                parse_rational((*c.ordering.explicit_abg)[2]), "Custom")
            : ordering_preset(*preset_from_name(c.ordering.preset));
    const double center = c.generator.center.value_or(0.5 * (c.q_interval.lo + c.q_interval.hi));
    Generator gen = c.generator.kind == "ScarfII"       ? Generator::scarf2(c.generator.v2, c.generator.sign, center)
                    : c.generator.kind == "SamsonovRoy" ? Generator::samsonov_roy(center)
                                                        : Generator::morse(c.generator.a);
    MassProfile profile = c.profile.constant ? MassProfile::constant()
                                             : MassProfile::for_ordering(ordering, c.profile.c1, c.profile.c2);
    return ModelSpec(std::move(gen), ordering, std::move(profile), q, c.alpha0);
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidConfig) throw;
    throw Error(Errc::InvalidConfig, std::string("model: ") + e.what());
  }
}

}  // namespace

ModelSpec build_model(const RunConfig& c) { return make_model(c, c.q_interval); }

ModelSpec build_intertwine_model(const RunConfig& c) {
  const double mid = 0.5 * (c.q_interval.lo + c.q_interval.hi);
  return make_model(c, c.intertwine_q_interval.value_or(Interval{mid - 2.0, mid + 2.0}));
}

}  // namespace pdm
