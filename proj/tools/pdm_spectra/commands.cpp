#include "pdm_spectra/commands.hpp"

#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdm/errors.hpp"
#include "pdm/operators.hpp"
#include "pdm/ordering.hpp"
#include "pdm/potentials.hpp"
#include "pdm/report_json.hpp"
#include "pdm/text_output.hpp"
#include "pdm/verify.hpp"

namespace pdm::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

fs::path out_dir(const RunConfig& c) {
  fs::path dir(c.output.dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::Io, "cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ',';
    line += format_double(v);
  }
  return line + "\n";
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void summarize(const VerificationReport& r, std::ostream& out) {
  out << r.kind << ": " << verdict(r.pass);
  if (r.warning) out << " (warning)";
  out << "\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << " = " << format_double(c.value) << " " << c.relation << " "
        << format_double(c.tolerance) << "  " << verdict(c.pass) << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

void save_report(const RunConfig& c, VerificationReport r, double seconds, const std::string& stem) {
  if (c.output.timing) r.runtime_seconds = seconds;
  write_file_atomic(out_dir(c) / (stem + ".json"), dump(to_json(r)));
}

template <typename Fn>
VerificationReport timed(const RunConfig& c, const std::string& stem, std::ostream& out, Fn&& fn) {
  const auto t0 = Clock::now();
  VerificationReport r = fn();
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  save_report(c, r, s, stem);
  summarize(r, out);
  return r;
}

}  // namespace

RunConfig resolve_config(const Overrides& o) {
  RunConfig c = o.config ? load_config(*o.config) : RunConfig{};
  if (o.out) c.output.dir = *o.out;
  if (o.picture) {
    const auto p = picture_from_string(*o.picture);
    if (!p) throw Error(Errc::InvalidConfig, "flag --picture: expected reference or target");
    c.picture = *p;
  }
  if (o.n) {
    if (*o.n < kMinNodes) throw Error(Errc::InvalidConfig, "flag --n: grid size below minimum");
    c.n = *o.n;
  }
  if (o.seed) c.seed = *o.seed;
  build_model(c);  // validate early
  return c;
}

int cmd_orderings(const std::optional<std::string>& dir, std::ostream& out) {
  std::ostringstream table, csv;
  table << std::left;
  csv << "name,alpha,beta,gamma,delta\n";
  table.width(24);
  table << "name";
  for (const char* h : {"alpha", "beta", "gamma"}) {
    table.width(8);
    table << h;
  }
  table << "delta\n";
  for (auto p : all_presets()) {
    const auto o = ordering_preset(p);
    std::string delta;
    try {
      delta = format_rational(delta_of(o));
    } catch (const Error& e) {
      if (e.code() != Errc::BetaMinusOne) throw;
      delta = "undefined (beta = -1)";
    }
    table.width(24);
    table << o.name();
    for (const auto& v : {o.alpha(), o.beta(), o.gamma()}) {
      table.width(8);
      table << format_rational(v);
    }
    table << delta << "\n";
    csv << o.name() << ',' << format_rational(o.alpha()) << ',' << format_rational(o.beta()) << ','
        << format_rational(o.gamma()) << ',' << delta << "\n";
  }
  out << table.str();
  if (dir) {
    RunConfig c;
    c.output.dir = *dir;
    write_file_atomic(out_dir(c) / "orderings.csv", csv.str());
  }
  return kOk;
}

int cmd_map(const RunConfig& c, std::ostream& out) {
  const ModelSpec spec = build_model(c);
  const auto& map = spec.map();
  std::string csv = "x,q,mu,M,ref_re,ref_im,target_re,target_im\n";
  const Interval q = spec.q_interval();
  const int m = c.map_samples;
  for (int i = 0; i < m; ++i) {
    const double qi = i == m - 1 ? q.hi : q.lo + (q.hi - q.lo) * i / (m - 1);
    const double x = map.x_of_q(qi);
    const auto s = spec.profile().eval(x);
    const cplx vr = reference_potential(spec.generator(), spec.alpha0(), qi);
    const cplx vt = target_potential(spec, x);
    csv += csv_row({x, qi, s.mu, s.mass, vr.real(), vr.imag(), vt.real(), vt.imag()});
  }
  const auto path = out_dir(c) / "map.csv";
  write_file_atomic(path, csv);
  out << "wrote " << m << " samples to " << path.string() << "\n";
  return kOk;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const ModelSpec spec = build_model(c);
  const bool reference = c.picture == Picture::Reference;
  const Grid grid = reference ? uniform_grid(spec.q_interval().lo, spec.q_interval().hi, c.n, GridKind::UniformQ)
                              : matched_domains(spec, c.n).first;
  const auto matrix = reference ? build_reference_matrix(spec, grid) : build_target_matrix(spec, grid);

  ClassifyOptions co;
  co.im_tol = c.tolerances.bound_im;
  co.edge_frac = c.tolerances.edge_frac;
  co.continuum_threshold = continuum_threshold(spec);
  EigOptions eo;
  if (co.continuum_threshold || c.output.vectors) {
    eo.want_vector = [co](cplx e) {
      return std::abs(e.imag()) <= co.im_tol && (!co.continuum_threshold || e.real() < *co.continuum_threshold);
    };
  }
  const auto t0 = Clock::now();
  const Spectrum sp = classify_spectrum(eig(matrix.entries, eo), grid, co);
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  json j;
  j["picture"] = std::string(to_string(c.picture));
  j["n"] = c.n;
  j["grid"] = std::string(to_string(grid.kind()));
  j["config"] = to_json(c);
  j["spectrum"] = to_json(sp);
  if (co.continuum_threshold) j["continuum_threshold"] = *co.continuum_threshold;
  if (c.output.timing) j["runtime_seconds"] = seconds;
  const fs::path dir = out_dir(c);
  write_file_atomic(dir / "spectrum.json", dump(j));

  if (c.output.vectors) {
    std::string csv = "x,param";
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (sp.bound[i] && sp.has_vector(i)) {
        cols.push_back(i);
        csv += ",e" + std::to_string(i) + "_re,e" + std::to_string(i) + "_im";
      }
    }
    csv += "\n";
    for (std::size_t r = 0; r < grid.size(); ++r) {
      csv += format_double(grid.nodes()[r]) + "," + format_double(grid.params()[r]);
      for (auto i : cols) {
        const cplx v = sp.vectors[i](static_cast<Eigen::Index>(r));
        csv += "," + format_double(v.real()) + "," + format_double(v.imag());
      }
      csv += "\n";
    }
    write_file_atomic(dir / "vectors.csv", csv);
  }

  out << to_string(c.picture) << " spectrum, N = " << c.n << ", bound levels:\n";
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (!sp.bound[i]) continue;
    out << "  E[" << i << "] = " << format_double(sp.values[i].real()) << " " << (sp.values[i].imag() < 0 ? "- " : "+ ")
        << format_double(std::abs(sp.values[i].imag())) << "i\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, const std::string& which, std::ostream& out) {
  const bool all = which == "all";
  if (!all && which != "isospectral" && which != "intertwine" && which != "analytic" && which != "eigensolver") {
    throw Error(Errc::InvalidConfig, "flag --which: expected isospectral, intertwine, analytic, eigensolver or all");
  }
  const ModelSpec spec = build_model(c);
  const auto& t = c.tolerances;
  bool pass = true;

  if (all || which == "isospectral") {
    IsospectralOptions o;
    o.grid_sizes = c.isospectral_n;
    o.k = c.k;
    o.tol = t.isospectral;
    o.im_tol = t.bound_im;
    o.edge_frac = t.edge_frac;
    o.min_rate = t.isospectral_rate;
    pass &= timed(c, "verify_isospectral", out, [&] { return check_isospectral(spec, o); }).pass;
  }
  if (all || which == "intertwine") {
    const ModelSpec local = build_intertwine_model(c);
    pass &= timed(c, "verify_intertwine", out, [&] {
              return check_intertwining(local, c.intertwine_n, t.intertwine_rate);
            }).pass;
  }
  if (all || which == "analytic") {
    const bool has_oracle = spec.generator().scarf2_params() || spec.generator().samsonov_roy_params();
    if (has_oracle || !all) {
      AnalyticOptions o;
      o.tol = c.picture == Picture::Reference ? t.analytic_reference : t.analytic_target;
      o.edge_frac = t.edge_frac;
      pass &= timed(c, "verify_analytic", out, [&] { return check_analytic(spec, c.picture, c.n, o); }).pass;
    } else {
      out << "analytic: skipped (no analytic spectrum for " << spec.generator().name() << ")\n";
    }
  }
  if (all || which == "eigensolver") {
    pass &= timed(c, "verify_eigensolver", out, [&] {
              return check_eigensolver(c.seed, c.eigensolver_cases, t.eigensolver);
            }).pass;
  }
  return pass ? kOk : kFailed;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const ModelSpec spec = build_model(c);
  const auto r = timed(c, "sweep", out, [&] {
    return convergence_sweep(spec, c.picture, c.sweep_n, c.oracle_level, c.tolerances.sweep_rate);
  });
  std::string csv = "n,h,error\n";
  for (std::size_t i = 0; i < r.grid_sizes.size(); ++i) {
    const int n = r.grid_sizes[i];
    csv += std::to_string(n) + "," + format_double(q_spacing(spec, n)) + "," + format_double(r.sequence[i]) + "\n";
  }
  write_file_atomic(out_dir(c) / "sweep.csv", csv);
  return r.pass ? kOk : kFailed;
}

int cmd_defaults(std::ostream& out) {
  out << dump(to_json(RunConfig{}));
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of position-dependent-mass Hamiltonians and their constant-mass references"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  std::string which = "all";
  app.add_option("--config", o.config, "JSON run configuration");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--picture", o.picture, "reference or target")->check(CLI::IsMember({"reference", "target"}));
  app.add_option("--n", o.n, "number of interior grid nodes");
  app.add_option("--seed", o.seed, "seed for the eigensolver validation suite");
  app.add_option("--which", which, "isospectral, intertwine, analytic, eigensolver or all");

  auto* orderings = app.add_subcommand("orderings", "table of ordering presets and their delta");
  auto* map = app.add_subcommand("map", "sample the Liouville map, mass and potentials to CSV");
  auto* solve = app.add_subcommand("solve", "solve one picture and write the spectrum");
  auto* verify = app.add_subcommand("verify", "run verification checks and write reports");
  auto* sweep = app.add_subcommand("sweep", "convergence sweep against the analytic level");
  auto* defaults = app.add_subcommand("defaults", "print the default configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*orderings) return cmd_orderings(o.out, out);
    if (*defaults) return cmd_defaults(out);
    const RunConfig c = resolve_config(o);
    if (*map) return cmd_map(c, out);
    if (*solve) return cmd_solve(c, out);
    if (*verify) return cmd_verify(c, which, out);
    if (*sweep) return cmd_sweep(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::InvalidConfig:
      case Errc::UnsupportedGenerator:
        return kConfigError;
      case Errc::InsufficientBoundStates:
        return kFailed;
      default:
        return kRuntimeError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kConfigError;
}

}  // namespace pdm::cli
