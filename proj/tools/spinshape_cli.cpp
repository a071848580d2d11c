// spinshape: surface tensions, Wulff shapes and ground states of
// ferromagnetic lattice systems.
//
// Subcommands: phi, check-coercive, equiv, wulff, tension, discrete-wulff,
// approx. File formats are documented in the README; exit codes: 0 success,
// 2 validation error, 3 infeasible request.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "spinshape/approx.hpp"
#include "spinshape/ground_state.hpp"
#include "spinshape/io.hpp"
#include "spinshape/wulff.hpp"
#include "spinshape/wulff_discrete.hpp"
#include "spinshape/zonotope.hpp"

using namespace spinshape;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

VecQ parse_nu(const std::string& text) {
  VecQ nu;
  for (const std::string& part : split(text, ','))
    nu.push_back(rational_from_string(part));
  if (nu.empty()) throw std::invalid_argument("empty direction");
  return nu;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

int dimension_of(const ParsedSystem& parsed) {
  return std::visit([](const auto& s) { return s.dimension(); }, parsed);
}

const IsingSystem& undirected_or_throw(const ParsedSystem& parsed) {
  if (const auto* s = std::get_if<IsingSystem>(&parsed)) return *s;
  throw std::invalid_argument("this command needs an undirected homogeneous system file");
}

struct PhiOptions {
  std::string system;
  std::string directions;
  int grid = 0;
  std::string out;
};

int cmd_phi(const PhiOptions& opt) {
  ParsedSystem parsed = parse_system_file(opt.system);
  if (std::holds_alternative<PeriodicCoefficients>(parsed))
    throw std::invalid_argument(
        "periodic systems have no closed-form tension; use the tension command");
  int d = dimension_of(parsed);

  std::vector<VecD> dirs;
  if (opt.grid > 0) {
    dirs = unit_direction_sample(d, opt.grid);
  } else if (!opt.directions.empty()) {
    std::ifstream in(opt.directions);
    if (!in) throw std::invalid_argument("cannot open file: " + opt.directions);
    dirs = parse_directions(in);
  } else {
    throw std::invalid_argument("need --directions FILE or --grid N");
  }

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out);
  out << "# direction components, phi\n";
  for (const VecD& raw : dirs) {
    if (static_cast<int>(raw.size()) != d)
      throw std::invalid_argument("direction dimension mismatch");
    VecD nu = normalized(raw);
    double value = std::holds_alternative<IsingSystem>(parsed)
                       ? std::get<IsingSystem>(parsed).surface_tension(nu)
                       : std::get<DirectedIsingSystem>(parsed).surface_tension(nu);
    for (double c : nu) out << format_double(c) << ' ';
    out << ' ' << format_double(value) << '\n';
  }
  return 0;
}

int cmd_check_coercive(const std::string& system_path) {
  ParsedSystem parsed = parse_system_file(system_path);
  const IsingSystem& s = undirected_or_throw(parsed);
  std::cout << "coercive: " << (s.is_coercive() ? "yes" : "no") << '\n';
  std::cout << "support_rank: " << s.support_rank() << " of " << s.dimension() << '\n';
  if (s.support_rank() < s.dimension()) {
    std::cout << "sublattice: degenerate (support rank < d)\n";
    return 0;
  }
  SublatticeDecomposition dec = s.connectivity_sublattice();
  std::cout << "sublattice_index: " << dec.index << '\n';
  std::cout << "representatives:\n";
  for (const VecI& m : dec.representatives) {
    for (long long c : m) std::cout << c << ' ';
    std::cout << '\n';
  }
  return 0;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b) {
  ParsedSystem parsed_a = parse_system_file(path_a);
  ParsedSystem parsed_b = parse_system_file(path_b);
  const IsingSystem& a = undirected_or_throw(parsed_a);
  const IsingSystem& b = undirected_or_throw(parsed_b);
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("systems have different dimensions");
  GeneratingMeasure ma = a.generating_measure();
  GeneratingMeasure mb = b.generating_measure();
  bool eq = ma == mb;
  std::cout << "equivalent: " << (eq ? "yes" : "no") << '\n';
  bool ca = a.is_coercive(), cb = b.is_coercive();
  std::cout << "coercive_a: " << (ca ? "yes" : "no") << '\n';
  std::cout << "coercive_b: " << (cb ? "yes" : "no") << '\n';
  if (eq && ca != cb)
    std::cout << "note: equivalent systems with different coercivity\n";

  std::map<DirectionClass, std::pair<Rational, Rational>> table;
  for (const MeasureClass& c : ma.classes()) table[c.direction].first = c.s;
  for (const MeasureClass& c : mb.classes()) table[c.direction].second = c.s;
  std::cout << "class aggregates (direction, s_a, s_b):\n";
  for (const auto& [cls, pair] : table) {
    for (long long c : cls.primitive) std::cout << c << ' ';
    std::cout << ' ' << rational_to_string(pair.first) << ' '
              << rational_to_string(pair.second) << '\n';
  }
  return 0;
}

struct WulffOptions {
  std::string system;
  std::string svg;
  std::string csv;
  int samples = 360;
};

int cmd_wulff(const WulffOptions& opt) {
  ParsedSystem parsed = parse_system_file(opt.system);
  if (std::holds_alternative<PeriodicCoefficients>(parsed))
    throw std::invalid_argument("periodic Wulff shapes are not closed-form; use tension sweeps");
  int d = dimension_of(parsed);

  if (const auto* directed = std::get_if<DirectedIsingSystem>(&parsed)) {
    auto [zonotope, translation] = directed_wulff(*directed);
    if (d == 2) {
      PolygonD shifted;
      if (non_degenerate(zonotope)) {
        shifted = to_double(polygon_2d(zonotope));
      } else if (!zonotope.generators.empty()) {
        // all generators parallel: the body is the segment [-v, v]
        VecQ axis = zonotope.generators.front();
        VecQ v{Rational(0), Rational(0)};
        for (const VecQ& w : zonotope.generators) {
          Rational along = w[0] * axis[0] + w[1] * axis[1];
          for (int i = 0; i < 2; ++i) v[i] += along >= 0 ? w[i] : -w[i];
        }
        shifted.vertices = {{-to_double(v[0]), -to_double(v[1])},
                            {to_double(v[0]), to_double(v[1])}};
      }
      for (VecD& v : shifted.vertices)
        for (int i = 0; i < 2; ++i) v[i] += to_double(translation[i]);
      std::ofstream file;
      std::ostream& out = open_output(file, opt.csv);
      out << "# directed Wulff shape; translation";
      for (const Rational& t : translation) out << ' ' << rational_to_string(t);
      out << '\n';
      write_polygon_csv(out, shifted);
      if (!opt.svg.empty()) {
        std::ofstream svg(opt.svg);
        if (!svg) throw std::invalid_argument("cannot open output file: " + opt.svg);
        write_svg(svg,
                  {SvgPath{shifted.vertices, true, "fill:none;stroke:#1f77b4;stroke-width:3"}});
      }
      return 0;
    }
    std::ofstream file;
    std::ostream& out = open_output(file, opt.csv);
    out << "# direction components, support value of the translated Wulff shape\n";
    for (const VecD& nu : unit_direction_sample(d, opt.samples)) {
      double value = directed->surface_tension(nu);
      for (double c : nu) out << format_double(c) << ' ';
      out << ' ' << format_double(value) << '\n';
    }
    return 0;
  }

  const IsingSystem& s = std::get<IsingSystem>(parsed);
  if (d == 2) {
    Zonotope w = zonotope_from_measure(s.generating_measure());
    Polygon poly = polygon_2d(w);  // throws on degenerate support
    PolygonD pd = to_double(poly);
    std::ofstream file;
    std::ostream& out = open_output(file, opt.csv);
    write_polygon_csv(out, pd);
    if (!opt.svg.empty()) {
      std::ofstream svg(opt.svg);
      if (!svg) throw std::invalid_argument("cannot open output file: " + opt.svg);
      write_svg(svg, {SvgPath{pd.vertices, true, "fill:none;stroke:#1f77b4;stroke-width:3"}});
    }
    return 0;
  }
  std::ofstream file;
  std::ostream& out = open_output(file, opt.csv);
  out << "# direction components, support value f_W = phi\n";
  for (const VecD& nu : unit_direction_sample(d, opt.samples)) {
    double value = s.surface_tension(nu);
    for (double c : nu) out << format_double(c) << ' ';
    out << ' ' << format_double(value) << '\n';
  }
  return 0;
}

struct TensionOptions {
  std::string system;
  std::string nu;
  std::string sizes;
  std::string out;
};

int cmd_tension(const TensionOptions& opt) {
  ParsedSystem parsed = parse_system_file(opt.system);
  VecQ nu = parse_nu(opt.nu);
  std::vector<int> sizes;
  for (const std::string& t : split(opt.sizes, ',')) {
    int v = static_cast<int>(std::stoll(t));
    if (v < 1) throw std::invalid_argument("T values must be positive");
    sizes.push_back(v);
  }
  if (sizes.empty()) throw std::invalid_argument("need at least one T");

  TransitionCoefficients coefficients = std::visit(
      [](auto&& s) -> TransitionCoefficients { return std::move(s); }, std::move(parsed));
  std::vector<SweepRow> rows = surface_tension_sweep(coefficients, nu, sizes);

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out);
  out << "T,m_T,per_area,phi_analytic,rel_error\n";
  for (const SweepRow& row : rows) {
    out << row.size << ',' << rational_to_string(row.m) << ','
        << format_double(row.per_area) << ',' << format_double(row.analytic) << ','
        << format_double(row.rel_error) << '\n';
  }
  return 0;
}

struct DiscreteWulffOptions {
  std::string system;
  std::string eps;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string svg_prefix;
};

int cmd_discrete_wulff(const DiscreteWulffOptions& opt) {
  ParsedSystem parsed = parse_system_file(opt.system);
  const IsingSystem& s = undirected_or_throw(parsed);
  std::vector<double> eps_list;
  for (const std::string& e : split(opt.eps, ','))
    eps_list.push_back(std::strtod(e.c_str(), nullptr));
  if (eps_list.empty()) throw std::invalid_argument("need at least one eps");

  AnnealSchedule schedule;
  schedule.seed = opt.seed;
  WulffDiagnosticReport report = wulff_convergence_diagnostic(s, eps_list, schedule);

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out);
  out << "# seed " << opt.seed << "\n";
  out << "eps,N_eps,energy,energy_ratio,symdiff_fraction\n";
  for (const WulffDiagnosticRow& row : report.rows) {
    out << format_double(row.eps) << ',' << row.n_eps << ','
        << rational_to_string(row.energy) << ',' << format_double(row.energy_ratio) << ','
        << format_double(row.symdiff_fraction) << '\n';
    if (row.boundary_contact)
      std::cerr << "warning: minimizer touches the search box at eps = "
                << format_double(row.eps) << "\n";
  }

  if (!opt.svg_prefix.empty()) {
    PolygonD w = to_double(report.wulff_polygon);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const std::vector<VecI>& sites = report.minimizers[i];
      double eps = report.rows[i].eps;
      double cx = 0, cy = 0;
      for (const VecI& site : sites) {
        cx += static_cast<double>(site[0]) + 0.5;
        cy += static_cast<double>(site[1]) + 0.5;
      }
      if (!sites.empty()) {
        cx = eps * cx / sites.size();
        cy = eps * cy / sites.size();
      }
      std::vector<SvgPath> paths =
          cell_boundary_paths(sites, eps, cx, cy, "stroke:#d62728;stroke-width:1");
      paths.push_back(SvgPath{w.vertices, true, "fill:none;stroke:#1f77b4;stroke-width:3"});
      std::ofstream svg(opt.svg_prefix + std::to_string(i) + ".svg");
      if (!svg) throw std::invalid_argument("cannot open svg output");
      write_svg(svg, paths);
    }
  }
  return 0;
}

struct ApproxOptions {
  std::string measure;
  bool disk = false;
  int dim = 2;
  double eta = 0;
  long long denbound = 0;
  int samples = 3600;
  bool pad = false;
  std::string out;
};

int cmd_approx(const ApproxOptions& opt) {
  if (!(opt.eta > 0)) throw std::invalid_argument("--eta must be positive");
  if (opt.denbound < 1) throw std::invalid_argument("--denbound must be >= 1");
  ZonoidApproxOptions options;
  options.check_directions = opt.samples;
  options.coercive_padding = opt.pad;

  ZonoidApproxResult result = [&] {
    if (opt.disk) {
      auto disk = [](const VecD& z) { return norm2(z); };
      return approximate_zonoid(disk, opt.dim, opt.eta, opt.denbound, options);
    }
    if (opt.measure.empty()) throw std::invalid_argument("need --measure FILE or --disk");
    GeneratingMeasure target = parse_measure_file(opt.measure);
    return approximate_zonoid(target, opt.eta, opt.denbound, options);
  }();

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out);
  write_measure(out, result.measure);
  std::cerr << "sup_error: " << format_double(result.sup_error) << "\n"
            << "checked_directions: " << result.checked_directions << "\n"
            << "classes: " << result.measure.classes().size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface tensions, Wulff shapes and ground states of lattice spin systems"};
  app.require_subcommand(1);

  PhiOptions phi;
  CLI::App* phi_cmd = app.add_subcommand("phi", "evaluate the surface tension on directions");
  phi_cmd->add_option("--system", phi.system, "system file")->required();
  phi_cmd->add_option("--directions", phi.directions, "direction list file");
  phi_cmd->add_option("--grid", phi.grid, "number of sampled unit directions");
  phi_cmd->add_option("--out", phi.out, "output file (default stdout)");

  std::string coercive_system;
  CLI::App* co_cmd =
      app.add_subcommand("check-coercive", "coercivity verdict and sublattice report");
  co_cmd->add_option("--system", coercive_system, "system file")->required();

  std::string equiv_a, equiv_b;
  CLI::App* eq_cmd = app.add_subcommand("equiv", "decide equivalence of two systems");
  eq_cmd->add_option("--system-a", equiv_a, "first system file")->required();
  eq_cmd->add_option("--system-b", equiv_b, "second system file")->required();

  WulffOptions wulff;
  CLI::App* wu_cmd = app.add_subcommand("wulff", "Wulff shape polygon / support samples");
  wu_cmd->add_option("--system", wulff.system, "system file")->required();
  wu_cmd->add_option("--svg", wulff.svg, "write an SVG rendering (d = 2)");
  wu_cmd->add_option("--csv", wulff.csv, "output file (default stdout)");
  wu_cmd->add_option("--samples", wulff.samples, "directions for d >= 3 sampling");

  TensionOptions tension;
  CLI::App* te_cmd = app.add_subcommand("tension", "min-cut surface tension sweep (CSV)");
  te_cmd->add_option("--system", tension.system, "system file (homogeneous/directed/periodic)")
      ->required();
  te_cmd->add_option("--nu", tension.nu, "direction, comma separated rationals")->required();
  te_cmd->add_option("--T", tension.sizes, "cube sizes, comma separated")->required();
  te_cmd->add_option("--out", tension.out, "output CSV (default stdout)");

  DiscreteWulffOptions dw;
  CLI::App* dw_cmd =
      app.add_subcommand("discrete-wulff", "volume-constrained ground-state diagnostics");
  dw_cmd->add_option("--system", dw.system, "system file")->required();
  dw_cmd->add_option("--eps", dw.eps, "scales, comma separated")->required();
  dw_cmd->add_option("--seed", dw.seed, "annealing seed (default 1729)");
  dw_cmd->add_option("--out", dw.out, "output CSV (default stdout)");
  dw_cmd->add_option("--svg-prefix", dw.svg_prefix, "write overlay SVGs with this prefix");

  ApproxOptions approx;
  CLI::App* ap_cmd = app.add_subcommand("approx", "rational-zonotope approximation of a zonoid");
  ap_cmd->add_option("--measure", approx.measure, "target measure file");
  ap_cmd->add_flag("--disk", approx.disk, "approximate the unit disk/ball support function");
  ap_cmd->add_option("--dim", approx.dim, "dimension for --disk (default 2)");
  ap_cmd->add_option("--eta", approx.eta, "sup-error tolerance")->required();
  ap_cmd->add_option("--denbound", approx.denbound, "max-norm bound for directions")->required();
  ap_cmd->add_option("--samples", approx.samples, "error-check directions (default 3600)");
  ap_cmd->add_flag("--pad", approx.pad, "add coordinate-class mass (coercive padding)");
  ap_cmd->add_option("--out", approx.out, "output measure file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*phi_cmd) return cmd_phi(phi);
    if (*co_cmd) return cmd_check_coercive(coercive_system);
    if (*eq_cmd) return cmd_equiv(equiv_a, equiv_b);
    if (*wu_cmd) return cmd_wulff(wulff);
    if (*te_cmd) return cmd_tension(tension);
    if (*dw_cmd) return cmd_discrete_wulff(dw);
    if (*ap_cmd) return cmd_approx(approx);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
