#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "hydro1d/errors.hpp"
#include "hydro1d/gridsolver.hpp"
#include "hydro1d/potential.hpp"
#include "hydro1d/regularized.hpp"
#include "hydro1d/spectrum.hpp"
#include "hydro1d/version.hpp"
#include "hydro1d/wkb.hpp"

namespace hydro1d::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Common {
  std::string format = "csv";
  std::string out;
  double tolerance = 1e-13;
  bool timestamp = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output path (default stdout)");
  sub->add_option("--tolerance", c.tolerance, "Relative tolerance for iterative steps")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--timestamp", c.timestamp, "Record the wall-clock time in the metadata");
}

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string csv_field(const Cell& c) {
  std::string s = cell_text(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

ordered_json cell_json(const Cell& c) {
  struct Visitor {
    ordered_json operator()(double v) const { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }
    ordered_json operator()(std::int64_t v) const { return v; }
    ordered_json operator()(bool v) const { return v; }
    ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

OutputRecord make_record(std::string schema, const std::string& command, const Common& c) {
  OutputRecord r;
  r.schema = std::move(schema);
  r.add_meta("schema", r.schema);
  r.add_meta("schema_version", std::int64_t{kSchemaVersion});
  r.add_meta("version", std::string(kVersion));
  r.add_meta("command", command);
  r.add_meta("tolerance", c.tolerance);
  if (c.timestamp) r.add_meta("timestamp", utc_now());
  return r;
}

void add_grid_meta(OutputRecord& r, const grid::Grid& g) {
  r.add_meta("half_width", g.half_width);
  r.add_meta("points", std::int64_t{g.points});
  r.add_meta("staggered", g.staggered);
}

const char* parity_name(Parity p) { return to_string(p); }

// --- subcommands -----------------------------------------------------------

struct SpectrumArgs {
  int n_max = 10;
};

OutputRecord cmd_spectrum(const SpectrumArgs& a, const Common& c) {
  OutputRecord r = make_record("spectrum", "spectrum", c);
  r.add_meta("n_max", std::int64_t{a.n_max});
  r.columns = {"n", "exact_energy", "wkb_energy", "parity", "nodes"};
  wkb::WKBConfig cfg;
  cfg.energy_tolerance = c.tolerance;
  cfg.quadrature_tolerance = c.tolerance;
  r.add_meta("maslov_offset", cfg.maslov_offset);
  for (int n = 0; n <= a.n_max; ++n) {
    const QuantumNumber q(n);
    r.rows.push_back({std::int64_t{n}, spectrum::exact_energy(q), wkb::wkb_energy(q, cfg),
                      std::string(parity_name(q.parity())), std::int64_t{spectrum::node_count(q)}});
  }
  return r;
}

struct WavefunctionArgs {
  int n = 0;
  double x_min = -10.0;
  double x_max = 10.0;
  long points = 2001;
  bool normalized = false;
};

OutputRecord cmd_wavefunction(const WavefunctionArgs& a, const Common& c) {
  if (a.points < 2) throw DomainError("wavefunction: --points must be at least 2");
  if (!(a.x_min < a.x_max)) throw DomainError("wavefunction: --x-min must be below --x-max");
  OutputRecord r = make_record("samples", "wavefunction", c);
  r.add_meta("n", std::int64_t{a.n});
  r.add_meta("x_min", a.x_min);
  r.add_meta("x_max", a.x_max);
  r.add_meta("points", std::int64_t{a.points});
  r.add_meta("normalized", a.normalized);
  const QuantumNumber q(a.n);
  std::optional<BoundState> state;
  if (a.normalized) {
    state = spectrum::normalize(q);
    r.add_meta("norm", state->norm);
  }
  r.columns = {"x", "psi"};
  const double span = static_cast<double>(a.points - 1);
  for (long i = 0; i < a.points; ++i) {
    const double x = (a.x_min * static_cast<double>(a.points - 1 - i) + a.x_max * static_cast<double>(i)) / span;
    const double psi = state ? spectrum::normalized_wavefunction(*state, x) : spectrum::wavefunction(q, x);
    r.rows.push_back({x, psi});
  }
  return r;
}

struct WkbArgs {
  std::optional<double> energy;
  std::optional<int> n;
  double maslov = 1.0;
};

OutputRecord cmd_wkb(const WkbArgs& a, const Common& c) {
  if (a.energy.has_value() == a.n.has_value()) {
    throw DomainError("wkb: give exactly one of --energy or --n");
  }
  wkb::WKBConfig cfg;
  cfg.maslov_offset = a.maslov;
  cfg.energy_tolerance = c.tolerance;
  cfg.quadrature_tolerance = c.tolerance;
  OutputRecord r = make_record("action", "wkb", c);
  r.add_meta("maslov_offset", a.maslov);
  double energy = 0.0;
  if (a.n) {
    const QuantumNumber q(*a.n);
    r.add_meta("n", std::int64_t{*a.n});
    energy = wkb::wkb_energy(q, cfg);
  } else {
    energy = *a.energy;
    r.add_meta("energy", energy);
  }
  const wkb::ActionResult res = wkb::action(energy, cfg);
  r.columns = {"energy", "action", "action_over_pi", "turning_left", "turning_right", "action_error"};
  r.rows.push_back({res.energy, res.action, res.action / std::numbers::pi, res.turning_points.first,
                    res.turning_points.second, res.error});
  return r;
}

struct GridArgs {
  std::optional<double> half_width;
  std::optional<long> points;
  bool nodal = false;
};

std::optional<grid::Grid> grid_override(const GridArgs& g, const grid::Grid& fallback) {
  if (!g.half_width && !g.points && !g.nodal) return std::nullopt;
  grid::Grid out = fallback;
  if (g.half_width) out.half_width = *g.half_width;
  if (g.points) out.points = *g.points;
  out.staggered = !g.nodal;
  return out;
}

struct ScanArgs {
  std::string family;
  std::vector<double> a;
  std::optional<double> b;
  std::optional<int> k_max;
  GridArgs grid;
};

OutputRecord cmd_scan(const ScanArgs& s, const Common& c, std::ostream& err) {
  const PotentialFamily family = parse_family(s.family);
  OutputRecord r = make_record("scan", "scan", c);
  r.add_meta("family", to_string(family));
  switch (family) {
    case PotentialFamily::soft_core: {
      const std::vector<double> a = s.a.empty() ? std::vector<double>{1e-2, 1e-3, 1e-4} : s.a;
      const auto g = grid_override(s.grid, {30.0, 6000, true});
      const auto scan = regularized::soft_core_ground_scan(a, g);
      r.add_meta("grid", std::string(g ? "explicit" : "core-resolving"));
      if (g) add_grid_meta(r, *g);
      r.add_meta("diverging", scan.diverging);
      r.columns = {"a", "ground_energy", "loudon_estimate", "ratio", "odd_energy", "points"};
      for (const auto& row : scan.rows) {
        r.rows.push_back({row.a, row.ground_energy, row.loudon, row.ratio, row.odd_energy,
                          std::int64_t{row.grid.points}});
      }
      return r;
    }
    case PotentialFamily::repulsive_core: {
      if (s.a.size() > 1) throw DomainError("scan: care family takes a single --a");
      const double a = s.a.empty() ? 1e-3 : s.a.front();
      const double b = s.b.value_or(5e-3);
      const int k_max = s.k_max.value_or(6);
      const auto g = grid_override(s.grid, regularized::core_resolving_grid(a));
      const auto res = regularized::care_interleaving(a, b, g, k_max);
      r.add_meta("a", a);
      r.add_meta("b", b);
      r.add_meta("k_max", std::int64_t{k_max});
      add_grid_meta(r, res.grid);
      r.add_meta("in_stated_regime", res.in_stated_regime);
      r.add_meta("interleaved", res.interleaved);
      if (!res.warning.empty()) {
        r.add_meta("warning", res.warning);
        err << "warning: " << res.warning << "\n";
      }
      r.columns = {"k", "energy", "parity", "nodes"};
      for (const auto& lvl : res.levels) {
        r.rows.push_back({std::int64_t{lvl.index}, lvl.energy, std::string(grid::to_string(lvl.parity)),
                          std::int64_t{lvl.nodes}});
      }
      return r;
    }
    case PotentialFamily::half_line: {
      const int k_max = s.k_max.value_or(3);
      const grid::Grid g = grid_override(s.grid, regularized::default_half_line_grid())
                               .value_or(regularized::default_half_line_grid());
      r.add_meta("k_max", std::int64_t{k_max});
      add_grid_meta(r, g);
      const auto energies = regularized::half_line_spectrum(g, k_max);
      r.columns = {"k", "energy", "odd_exact_energy", "relative_error"};
      for (std::size_t i = 0; i < energies.size(); ++i) {
        const double exact = spectrum::exact_energy(QuantumNumber(2 * static_cast<int>(i) + 1));
        r.rows.push_back({static_cast<std::int64_t>(i), energies[i], exact, std::abs(energies[i] / exact - 1.0)});
      }
      return r;
    }
    case PotentialFamily::pure_coulomb:
      break;
  }
  throw DomainError("scan: family must be soft-core, care or half-line");
}

struct SolveArgs {
  std::string potential = "pure-coulomb";
  std::optional<double> a;
  std::optional<double> b;
  int k_max = 4;
  int refine = 0;
  int level = 0;
  GridArgs grid;
};

OutputRecord cmd_solve(const SolveArgs& s, const Common& c, std::ostream& err) {
  grid::Hamiltonian ham;
  std::string label;
  if (s.potential == "harmonic") {
    ham = grid::harmonic_oscillator();
  } else if (s.potential == "box") {
    ham = grid::free_box();
  } else {
    PotentialSpec v;
    switch (parse_family(s.potential)) {
      case PotentialFamily::pure_coulomb: v = PotentialSpec::pure_coulomb(); break;
      case PotentialFamily::soft_core: v = PotentialSpec::soft_core(s.a.value_or(0.1)); break;
      case PotentialFamily::repulsive_core:
        v = PotentialSpec::repulsive_core(s.a.value_or(1e-3), s.b.value_or(5e-3));
        break;
      case PotentialFamily::half_line: v = PotentialSpec::half_line(); break;
    }
    ham = grid::hamiltonian(v);
  }
  grid::Grid g{30.0, 6000, true};
  if (s.grid.half_width) g.half_width = *s.grid.half_width;
  if (s.grid.points) g.points = *s.grid.points;
  g.staggered = !s.grid.nodal;

  grid::SolveOptions opts;
  opts.eigen_tolerance = c.tolerance;
  OutputRecord r = make_record(s.refine > 0 ? "scan" : "spectrum", "solve", c);
  r.add_meta("potential", ham.label);
  add_grid_meta(r, g);
  if (s.refine > 0) {
    const auto study = grid::refine(ham, g, s.level, s.refine, opts);
    r.add_meta("level", std::int64_t{s.level});
    r.add_meta("refinements", std::int64_t{s.refine});
    for (std::size_t i = 0; i < study.ratios.size(); ++i) {
      r.add_meta("ratio_" + std::to_string(i + 1), study.ratios[i]);
    }
    r.add_meta("extrapolated", study.extrapolated);
    r.columns = {"points", "energy"};
    for (std::size_t i = 0; i < study.points.size(); ++i) {
      r.rows.push_back({std::int64_t{study.points[i]}, study.energies[i]});
    }
    return r;
  }
  r.add_meta("k_max", std::int64_t{s.k_max});
  const auto res = grid::solve(ham, g, s.k_max, opts);
  r.add_meta("outer_turning_point", res.outer_turning_point);
  r.add_meta("wall_clearance", res.wall_clearance);
  if (res.wall_clearance < grid::kWallClearance) {
    err << "warning: walls at " << format_number(g.half_width) << " are within " << grid::kWallClearance
        << "x of the outermost turning point " << format_number(res.outer_turning_point)
        << "; box truncation may raise the upper levels\n";
  }
  r.columns = {"k", "energy", "parity", "nodes", "parity_residual"};
  for (const auto& lvl : res.levels) {
    r.rows.push_back({std::int64_t{lvl.index}, lvl.energy, std::string(grid::to_string(lvl.parity)),
                      std::int64_t{lvl.nodes}, lvl.parity_residual});
  }
  return r;
}

void add_grid_flags(CLI::App* sub, GridArgs& g) {
  sub->add_option("--half-width", g.half_width, "Grid half-width L")->check(CLI::PositiveNumber);
  sub->add_option("--points", g.points, "Grid point count N")->check(CLI::PositiveNumber);
  sub->add_flag("--nodal", g.nodal, "Use a nodal grid that includes x = 0");
}

int emit(const OutputRecord& r, const Common& c, std::ostream& out, std::ostream& err) {
  std::ostringstream buf;
  if (c.format == "json") {
    write_json(r, buf);
  } else {
    write_csv(r, buf);
  }
  if (c.out.empty()) {
    out << buf.str();
    return out ? kExitOk : kExitNumeric;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << c.out << "' for writing\n";
    return kExitUsage;
  }
  file << buf.str();
  return kExitOk;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const OutputRecord& r, std::ostream& os) {
  for (const auto& [key, value] : r.metadata) os << "# " << key << "=" << cell_text(value) << "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
}

void write_json(const OutputRecord& r, std::ostream& os) {
  ordered_json doc;
  ordered_json meta = ordered_json::object();
  for (const auto& [key, value] : r.metadata) meta[key] = cell_json(value);
  meta["columns"] = r.columns;
  doc["metadata"] = std::move(meta);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact, semiclassical and finite-difference spectra of the one-dimensional hydrogen atom",
               "hydro1d"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Common common;

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact and WKB energies with parity and node count");
  spectrum_cmd->add_option("--n-max", spectrum_args.n_max, "Highest quantum number")->check(CLI::NonNegativeNumber);
  add_common(spectrum_cmd, common);

  WavefunctionArgs wf_args;
  auto* wf_cmd = app.add_subcommand("wavefunction", "Sample an exact bound state on a uniform window");
  wf_cmd->add_option("--n", wf_args.n, "Quantum number")->required()->check(CLI::NonNegativeNumber);
  wf_cmd->add_option("--x-min", wf_args.x_min, "Left end of the window");
  wf_cmd->add_option("--x-max", wf_args.x_max, "Right end of the window");
  wf_cmd->add_option("--points", wf_args.points, "Number of samples");
  wf_cmd->add_flag("--normalized", wf_args.normalized, "Scale to unit L2 norm");
  add_common(wf_cmd, common);

  WkbArgs wkb_args;
  auto* wkb_cmd = app.add_subcommand("wkb", "Bohr-Sommerfeld action at an energy or the quantized energy of a level");
  auto* energy_opt = wkb_cmd->add_option("--energy", wkb_args.energy, "Energy E < 0");
  auto* n_opt = wkb_cmd->add_option("--n", wkb_args.n, "Quantum number")->check(CLI::NonNegativeNumber);
  energy_opt->excludes(n_opt);
  wkb_cmd->add_option("--maslov", wkb_args.maslov, "Maslov offset in (n + offset) pi");
  add_common(wkb_cmd, common);

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Regularized-potential studies");
  scan_cmd->add_option("--family", scan_args.family, "soft-core, care or half-line")->required();
  scan_cmd->add_option("--a", scan_args.a, "Core size(s), comma separated")->delimiter(',');
  scan_cmd->add_option("--b", scan_args.b, "Repulsive-core offset");
  scan_cmd->add_option("--k-max", scan_args.k_max, "Number of levels")->check(CLI::PositiveNumber);
  add_grid_flags(scan_cmd, scan_args.grid);
  add_common(scan_cmd, common);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Finite-difference eigenvalues of a chosen potential");
  solve_cmd->add_option("--potential", solve_args.potential,
                        "pure-coulomb, soft-core, care, half-line, harmonic or box");
  solve_cmd->add_option("--a", solve_args.a, "Core size");
  solve_cmd->add_option("--b", solve_args.b, "Repulsive-core offset");
  solve_cmd->add_option("--k-max", solve_args.k_max, "Number of levels")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--refine", solve_args.refine, "Grid halvings for a convergence study (0 = off)")
      ->check(CLI::Range(0, 4));
  solve_cmd->add_option("--level", solve_args.level, "Level tracked by --refine")->check(CLI::NonNegativeNumber);
  add_grid_flags(solve_cmd, solve_args.grid);
  add_common(solve_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::optional<OutputRecord> record;
    if (*spectrum_cmd) record = cmd_spectrum(spectrum_args, common);
    if (*wf_cmd) record = cmd_wavefunction(wf_args, common);
    if (*wkb_cmd) record = cmd_wkb(wkb_args, common);
    if (*scan_cmd) record = cmd_scan(scan_args, common, err);
    if (*solve_cmd) record = cmd_solve(solve_args, common, err);
    return emit(*record, common, out, err);
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << "\n"
        << "hint: rerun with --points " << e.suggested_points() << "\n";
    return kExitRegime;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (achieved error " << format_number(e.achieved_error()) << ")\n";
    return kExitNumeric;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hydro1d::cli
