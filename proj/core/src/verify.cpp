#include "pdm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pdm/errors.hpp"
#include "pdm/operators.hpp"
#include "pdm/parallel.hpp"
#include "pdm/potentials.hpp"

namespace pdm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json model_inputs(const ModelSpec& spec) {
  nlohmann::json j;
  j["generator"] = spec.generator().name();
  j["ordering"] = spec.ordering().name();
  const auto& p = spec.profile();
  if (p.is_constant()) {
    j["profile"] = "constant";
  } else {
    j["profile"] = {{"c1", p.c1()}, {"c2", p.c2()}, {"delta", p.delta()}};
  }
  j["q_interval"] = {spec.q_interval().lo, spec.q_interval().hi};
  j["alpha0"] = spec.alpha0();
  return j;
}

CheckItem at_most(std::string name, double value, double tol) {
  return {std::move(name), value, tol, "<=", value <= tol};
}

CheckItem at_least(std::string name, double value, double tol) {
  return {std::move(name), value, tol, ">=", value >= tol};
}

// Largest ratio seq[i+1]/seq[i]; below 1 means strictly decreasing. An
// all-zero sequence counts as decreasing.
CheckItem decreasing(const std::vector<double>& seq) {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] == 0.0 && seq[i] == 0.0) continue;
    const double ratio = seq[i - 1] > 0.0 ? seq[i] / seq[i - 1] : kInf;
    worst = std::max(worst, ratio);
    ok = ok && seq[i] < seq[i - 1];
  }
  return {"strictly_decreasing", worst, 1.0, "<", ok};
}

std::vector<double> q_spacings(const ModelSpec& spec, const std::vector<int>& sizes) {
  std::vector<double> h;
  for (int n : sizes) h.push_back(q_spacing(spec, n));
  return h;
}

void add_rate_checks(VerificationReport& r, const std::vector<double>& h, double min_rate) {
  r.checks.push_back(decreasing(r.sequence));
  const bool all_zero = std::all_of(r.sequence.begin(), r.sequence.end(), [](double v) { return v == 0.0; });
  if (all_zero) {
    r.notes.push_back("error is zero at every grid size");
    return;
  }
  r.rate = fit_rate(h, r.sequence);
  r.checks.push_back(at_least("rate", r.rate.value_or(-kInf), min_rate));
}

std::vector<cplx> lowest_bound(const Spectrum& s, int k) {
  auto b = s.bound_values();
  if (static_cast<int>(b.size()) < k) {
    throw Error(Errc::InsufficientBoundStates,
                "found " + std::to_string(b.size()) + " bound levels, need " + std::to_string(k));
  }
  b.resize(static_cast<std::size_t>(k));
  return b;
}

double nearest_distance(const std::vector<cplx>& values, cplx target) {
  double best = kInf;
  for (const auto& v : values) best = std::min(best, std::abs(v - target));
  return best;
}

void check_sizes(const std::vector<int>& sizes) {
  if (sizes.empty()) throw Error(Errc::TooFewNodes, "no grid sizes given");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < kMinNodes) throw Error(Errc::TooFewNodes, "grid size below minimum");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw Error(Errc::BadInterval, "grid sizes must ascend");
  }
}

}  // namespace

std::string_view to_string(Picture picture) noexcept {
  return picture == Picture::Reference ? "reference" : "target";
}

std::optional<Picture> picture_from_string(std::string_view text) noexcept {
  if (text == "reference") return Picture::Reference;
  if (text == "target") return Picture::Target;
  return std::nullopt;
}

std::vector<double> scarf2_levels(double v2) {
  const double a = std::abs(v2);
  std::vector<double> out;
  for (int n = 0; n < a - 0.5; ++n) {
    const double t = a - n - 0.5;
    out.push_back(-t * t);
  }
  return out;
}

std::vector<IndexedLevel> samsonov_roy_levels(int n_upper) {
  std::vector<IndexedLevel> out;
  for (int n = 1; n <= n_upper; ++n) {
    if (n == 2) continue;
    out.push_back({n, n * n / 4.0 - 25.0 / 16.0});
  }
  return out;
}

std::vector<double> oracle_levels(const ModelSpec& spec, int sr_n_upper) {
  std::vector<double> levels;
  if (const auto* s = spec.generator().scarf2_params()) {
    levels = scarf2_levels(s->v2);
  } else if (spec.generator().samsonov_roy_params()) {
    for (const auto& l : samsonov_roy_levels(sr_n_upper)) levels.push_back(l.energy);
  } else {
    throw Error(Errc::UnsupportedGenerator, "no analytic spectrum for generator " + spec.generator().name());
  }
  for (auto& e : levels) e += spec.alpha0();
  return levels;
}

void VerificationReport::finalize() {
  pass = std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass; });
}

std::optional<double> fit_rate(const std::vector<double>& h, const std::vector<double>& err) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < std::min(h.size(), err.size()); ++i) {
    if (!(err[i] > 0.0) || !(h[i] > 0.0) || !std::isfinite(err[i])) continue;
    const double x = std::log(h[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return std::nullopt;
  const double den = m * sxx - sx * sx;
  if (den == 0.0) return std::nullopt;
  return (m * sxy - sx * sy) / den;
}

double q_spacing(const ModelSpec& spec, int n) {
  return spec.q_interval().length() / (n + 1);
}

std::optional<double> continuum_threshold(const ModelSpec& spec) {
  if (!spec.generator().has_continuum()) return std::nullopt;
  const auto& g = spec.generator();
  const double a = reference_potential(g, spec.alpha0(), spec.q_interval().lo).real();
  const double b = reference_potential(g, spec.alpha0(), spec.q_interval().hi).real();
  return std::max(a, b);
}

PictureSolution solve_picture(const ModelSpec& spec, Picture picture, int n, ClassifyOptions options) {
  options.continuum_threshold = continuum_threshold(spec);
  if (picture == Picture::Reference) {
    Grid g = uniform_grid(spec.q_interval().lo, spec.q_interval().hi, n, GridKind::UniformQ);
    auto m = build_reference_matrix(spec, g);
    return {solve_classified(m.entries, g, options), std::move(g)};
  }
  Grid g = matched_domains(spec, n).first;
  auto m = build_target_matrix(spec, g);
  return {solve_classified(m.entries, g, options), std::move(g)};
}

VerificationReport check_isospectral(const ModelSpec& spec, const IsospectralOptions& o) {
  check_sizes(o.grid_sizes);
  if (o.k < 1 || 4 * o.k > o.grid_sizes.front()) {
    throw Error(Errc::InvalidConfig, "k must satisfy 1 <= k <= N/4");
  }
  VerificationReport r;
  r.kind = "isospectral";
  r.inputs = model_inputs(spec);
  r.inputs["k"] = o.k;
  r.inputs["tol"] = o.tol;
  r.inputs["im_tol"] = o.im_tol;
  r.grid_sizes = o.grid_sizes;

  ClassifyOptions co;
  co.im_tol = o.im_tol;
  co.edge_frac = o.edge_frac;
  const std::size_t m = o.grid_sizes.size();
  auto solved = parallel_map(2 * m, [&](std::size_t t) {
    const Picture p = t % 2 == 0 ? Picture::Reference : Picture::Target;
    return lowest_bound(solve_picture(spec, p, o.grid_sizes[t / 2], co).spectrum, o.k);
  });

  for (std::size_t s = 0; s < m; ++s) {
    const auto& hq = solved[2 * s];
    const auto& hx = solved[2 * s + 1];
    double worst = 0.0;
    const auto pairs = greedy_match(hq, hx);
    for (const auto& pr : pairs) worst = std::max(worst, pr.distance);
    r.sequence.push_back(worst);
    if (s + 1 == m) {
      for (const auto& pr : pairs) r.levels.push_back({static_cast<int>(pr.i), hx[pr.j], hq[pr.i], pr.distance});
      std::sort(r.levels.begin(), r.levels.end(),
                [](const LevelRow& a, const LevelRow& b) { return a.index < b.index; });
    }
  }
  r.checks.push_back(at_most("max_level_difference", r.sequence.back(), o.tol));
  if (m >= 2) add_rate_checks(r, q_spacings(spec, o.grid_sizes), o.min_rate);
  r.finalize();
  return r;
}

VerificationReport check_isospectral(const ModelSpec& spec, int n, int k, double tol) {
  IsospectralOptions o;
  o.grid_sizes = {n};
  o.k = k;
  o.tol = tol;
  return check_isospectral(spec, o);
}

VerificationReport check_intertwining(const ModelSpec& spec, const std::vector<int>& grid_sizes,
                                      double min_rate) {
  check_sizes(grid_sizes);
  if (grid_sizes.size() < 3) throw Error(Errc::InvalidConfig, "intertwining needs at least 3 grid sizes");
  VerificationReport r;
  r.kind = "intertwining";
  r.inputs = model_inputs(spec);
  r.inputs["min_rate"] = min_rate;
  r.grid_sizes = grid_sizes;
  r.secondary_label = "action_residual";
  const Interval xi = spec.x_interval();

  struct Point {
    double relative = 0.0;
    double action = 0.0;
    double h = 0.0;
  };
  auto points = parallel_map(grid_sizes.size(), [&](std::size_t s) {
    const Grid g = uniform_grid(xi.lo, xi.hi, grid_sizes[s], GridKind::UniformX);
    const auto h = build_target_matrix(spec, g);
    const auto eta = build_eta_matrix(spec, g);
    const Eigen::MatrixXcd res = eta.entries * h.entries - h.entries.adjoint() * eta.entries;
    Point p;
    p.relative = res.norm() / (eta.entries.norm() * h.entries.norm());
    const double mid = 0.5 * (xi.lo + xi.hi);
    const double half = 0.4 * xi.length();
    Eigen::VectorXcd bump = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double t = (g.nodes()[i] - mid) / half;
      if (std::abs(t) < 1.0) bump(static_cast<Eigen::Index>(i)) = std::exp(-1.0 / (1.0 - t * t));
    }
    p.action = (res * bump).cwiseAbs().maxCoeff();
    p.h = g.spacing();
    return p;
  });

  std::vector<double> h;
  for (const auto& p : points) {
    r.sequence.push_back(p.relative);
    r.secondary.push_back(p.action);
    h.push_back(p.h);
  }
  add_rate_checks(r, h, min_rate);
  r.finalize();
  return r;
}

VerificationReport check_analytic(const ModelSpec& spec, Picture picture, int n, const AnalyticOptions& o) {
  const auto oracle = oracle_levels(spec, o.sr_n_upper);
  VerificationReport r;
  r.kind = "analytic";
  r.inputs = model_inputs(spec);
  r.inputs["picture"] = std::string(to_string(picture));
  r.inputs["n"] = n;
  r.inputs["tol"] = o.tol;
  r.grid_sizes = {n};
  if (oracle.empty()) {
    r.notes.push_back("no bound states to compare");
    r.warning = true;
    r.finalize();
    return r;
  }

  ClassifyOptions co;
  co.im_tol = o.im_tol.value_or(o.tol);
  co.edge_frac = o.edge_frac;
  const auto sol = solve_picture(spec, picture, n, co);
  const auto bound = sol.spectrum.bound_values();

  std::vector<cplx> expected(oracle.begin(), oracle.end());
  const auto pairs = greedy_match(expected, bound);
  double worst = pairs.size() < expected.size() ? kInf : 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    LevelRow row{static_cast<int>(i), cplx{}, expected[i], kInf, false};
    for (const auto& p : pairs) {
      if (p.i == i) {
        row.computed = bound[p.j];
        row.error = p.distance;
        row.matched = true;
      }
    }
    worst = std::max(worst, row.error);
    r.levels.push_back(row);
  }
  r.sequence = {worst};
  r.checks.push_back(at_most("max_level_error", worst, o.tol));

  if (spec.generator().has_continuum()) {
    const double count = static_cast<double>(bound.size());
    const double want = static_cast<double>(expected.size());
    r.checks.push_back({"bound_count", count, want, "==", count == want});
  }
  if (spec.generator().samsonov_roy_params()) {
    const double d = nearest_distance(sol.spectrum.values, cplx(kSamsonovRoyMissingLevel + spec.alpha0(), 0.0));
    r.checks.push_back({"missing_level_clearance", d, o.missing_window, ">", d > o.missing_window});
  }
  r.finalize();
  return r;
}

VerificationReport check_analytic(const ModelSpec& spec, Picture picture, int n, double tol) {
  AnalyticOptions o;
  o.tol = tol;
  return check_analytic(spec, picture, n, o);
}

namespace {

VerificationReport sweep_impl(const ModelSpec& spec, Picture picture, const std::vector<int>& sizes,
                              double exact, double min_rate, nlohmann::json inputs) {
  check_sizes(sizes);
  VerificationReport r;
  r.kind = "convergence";
  r.inputs = std::move(inputs);
  r.inputs["picture"] = std::string(to_string(picture));
  r.inputs["exact"] = exact;
  r.grid_sizes = sizes;
  auto nearest = parallel_map(sizes.size(), [&](std::size_t s) {
    Spectrum sp;
    if (picture == Picture::Reference) {
      const Grid g = uniform_grid(spec.q_interval().lo, spec.q_interval().hi, sizes[s], GridKind::UniformQ);
      sp = eig(build_reference_matrix(spec, g));
    } else {
      sp = eig(build_target_matrix(spec, matched_domains(spec, sizes[s]).first));
    }
    cplx best = sp.values.front();
    for (const auto& v : sp.values) {
      if (std::abs(v - exact) < std::abs(best - exact)) best = v;
    }
    return best;
  });
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const double err = std::abs(nearest[s] - exact);
    r.sequence.push_back(err);
    if (s + 1 == sizes.size()) r.levels.push_back({0, nearest[s], cplx(exact, 0.0), err});
  }
  if (sizes.size() >= 2) {
    add_rate_checks(r, q_spacings(spec, sizes), min_rate);
  } else {
    r.notes.push_back("single grid size, no rate");
  }
  r.finalize();
  return r;
}

}  // namespace

VerificationReport convergence_sweep(const ModelSpec& spec, Picture picture, const std::vector<int>& grid_sizes,
                                     int oracle_level, double min_rate) {
  const auto oracle = oracle_levels(spec, std::max(5, 2 * oracle_level + 3));
  if (oracle_level < 0 || oracle_level >= static_cast<int>(oracle.size())) {
    throw Error(Errc::OutOfRange, "oracle level " + std::to_string(oracle_level) + " does not exist");
  }
  auto inputs = model_inputs(spec);
  inputs["oracle_level"] = oracle_level;
  return sweep_impl(spec, picture, grid_sizes, oracle[static_cast<std::size_t>(oracle_level)], min_rate,
                    std::move(inputs));
}

VerificationReport convergence_sweep_exact(const ModelSpec& spec, Picture picture,
                                           const std::vector<int>& grid_sizes, double exact, double min_rate) {
  return sweep_impl(spec, picture, grid_sizes, exact, min_rate, model_inputs(spec));
}

VerificationReport check_eigensolver(std::uint64_t seed, int cases, double tol, double trace_tol) {
  VerificationReport r;
  r.kind = "eigensolver";
  r.inputs = {{"seed", seed}, {"cases", cases}, {"tol", tol}, {"trace_tol", trace_tol}};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst_match = 0.0, worst_trace = 0.0;
  int mismatched = 0, nondeterministic = 0;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + c % 7;
    Eigen::MatrixXcd a(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) a(i, j) = cplx(normal(rng), normal(rng));
    }
    const auto first = eig(a);
    const auto second = eig(a);
    if (first.values != second.values) ++nondeterministic;
    const auto oracle = brute_oracle_small(a);
    const auto pairs = greedy_match(first.values, oracle);
    double worst = pairs.size() == oracle.size() && oracle.size() == first.size() ? 0.0 : kInf;
    for (const auto& p : pairs) worst = std::max(worst, p.distance);
    if (!(worst <= tol)) ++mismatched;
    worst_match = std::max(worst_match, worst);
    cplx sum = 0.0;
    for (const auto& v : first.values) sum += v;
    worst_trace = std::max(worst_trace, std::abs(sum - first.trace) / std::max(1.0, first.frobenius_norm));
    r.grid_sizes.push_back(n);
    r.sequence.push_back(worst);
  }
  r.checks.push_back(at_most("max_oracle_distance", worst_match, tol));
  r.checks.push_back(at_most("mismatched_cases", mismatched, 0.0));
  r.checks.push_back(at_most("max_trace_error", worst_trace, trace_tol));
  r.checks.push_back(at_most("nondeterministic_cases", nondeterministic, 0.0));
  r.finalize();
  return r;
}

}  // namespace pdm
