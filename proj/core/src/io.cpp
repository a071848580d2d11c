#include "spinshape/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace spinshape {

namespace {

std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream probe(line);
    std::string token;
    if (probe >> token)
      lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

long long parse_int(const std::string& t) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + t + "'");
  }
}

}  // namespace

ParsedSystem parse_system(std::istream& in) {
  std::vector<std::string> lines = data_lines(in);
  bool directed = false;
  int period = 0;
  std::size_t first = 0;
  if (!lines.empty()) {
    std::vector<std::string> head = tokens_of(lines[0]);
    if (head.size() == 1 && head[0] == "directed") {
      directed = true;
      first = 1;
    } else if (head.size() == 2 && head[0] == "periodic") {
      period = static_cast<int>(parse_int(head[1]));
      first = 1;
    }
  }
  if (first >= lines.size()) {
    if (period > 0) return PeriodicCoefficients(1, period);
    if (directed) return DirectedIsingSystem::from_coefficients(1, {});
    return IsingSystem::symmetrize(1, {});
  }

  std::size_t width = tokens_of(lines[first]).size();
  if (width < 2) throw std::invalid_argument("system line needs k components and a value");
  int dim = period > 0 ? static_cast<int>((width - 1) / 2) : static_cast<int>(width - 1);
  if (period > 0 && width != 2 * static_cast<std::size_t>(dim) + 1)
    throw std::invalid_argument("periodic line needs base, offset and value");

  if (period > 0) {
    PeriodicCoefficients per(dim, period);
    for (std::size_t l = first; l < lines.size(); ++l) {
      std::vector<std::string> t = tokens_of(lines[l]);
      if (t.size() != width) throw std::invalid_argument("inconsistent system line width");
      VecI base(dim), k(dim);
      for (int i = 0; i < dim; ++i) base[i] = parse_int(t[i]);
      for (int i = 0; i < dim; ++i) k[i] = parse_int(t[dim + i]);
      per.set(base, k, rational_from_string(t[2 * dim]));
    }
    return per;
  }

  CoefficientMap map;
  for (std::size_t l = first; l < lines.size(); ++l) {
    std::vector<std::string> t = tokens_of(lines[l]);
    if (t.size() != width) throw std::invalid_argument("inconsistent system line width");
    VecI k(dim);
    for (int i = 0; i < dim; ++i) k[i] = parse_int(t[i]);
    Rational value = rational_from_string(t[dim]);
    map[k] += value;
  }
  if (directed) return DirectedIsingSystem::from_coefficients(dim, map);
  return IsingSystem::symmetrize(dim, map);
}

ParsedSystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_system(in);
}

namespace {

void write_map(std::ostream& out, const CoefficientMap& map) {
  for (const auto& [k, a] : map) {
    for (long long c : k) out << c << ' ';
    out << ' ' << rational_to_string(a) << '\n';
  }
}

}  // namespace

void write_system(std::ostream& out, const IsingSystem& system) {
  write_map(out, system.coefficients());
}

void write_system(std::ostream& out, const DirectedIsingSystem& system) {
  out << "directed\n";
  write_map(out, system.coefficients());
}

void write_system(std::ostream& out, const PeriodicCoefficients& system) {
  out << "periodic " << system.period() << '\n';
  for (const auto& [key, a] : system.entries()) {
    for (long long c : key.first) out << c << ' ';
    out << ' ';
    for (long long c : key.second) out << c << ' ';
    out << ' ' << rational_to_string(a) << '\n';
  }
}

GeneratingMeasure parse_measure(std::istream& in) {
  std::vector<std::string> lines = data_lines(in);
  if (lines.empty()) throw std::invalid_argument("empty measure file");
  std::size_t width = tokens_of(lines[0]).size();
  if (width < 2) throw std::invalid_argument("measure line needs p components and a weight");
  int dim = static_cast<int>(width - 1);
  std::map<DirectionClass, double> weights;
  for (const std::string& line : lines) {
    std::vector<std::string> t = tokens_of(line);
    if (t.size() != width) throw std::invalid_argument("inconsistent measure line width");
    VecI p(dim);
    for (int i = 0; i < dim; ++i) p[i] = parse_int(t[i]);
    auto [cls, mult] = primitive_direction(p);
    double lambda = std::strtod(t[dim].c_str(), nullptr);
    if (!(lambda > 0)) throw std::invalid_argument("measure weights must be positive");
    weights[cls] += lambda;
  }
  return GeneratingMeasure::from_weights(dim, weights);
}

GeneratingMeasure parse_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_measure(in);
}

void write_measure(std::ostream& out, const GeneratingMeasure& measure) {
  for (const MeasureClass& c : measure.classes()) {
    for (long long x : c.direction.primitive) out << x << ' ';
    out << ' ' << format_double(c.lambda) << '\n';
  }
}

std::vector<VecD> parse_directions(std::istream& in) {
  std::vector<VecD> dirs;
  for (const std::string& line : data_lines(in)) {
    std::vector<std::string> t = tokens_of(line);
    VecD v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = std::strtod(t[i].c_str(), nullptr);
    if (norm2(v) == 0) throw std::invalid_argument("zero direction in list");
    dirs.push_back(std::move(v));
  }
  return dirs;
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  double parsed = std::strtod(buffer, nullptr);
  if (parsed == x) {
    // try shorter representations that still round-trip
    for (int precision = 6; precision < 17; ++precision) {
      char shorter[64];
      std::snprintf(shorter, sizeof shorter, "%.*g", precision, x);
      if (std::strtod(shorter, nullptr) == x) return shorter;
    }
  }
  return buffer;
}

void write_svg(std::ostream& out, const std::vector<SvgPath>& paths) {
  double bound = 1e-9;
  for (const SvgPath& p : paths)
    for (const VecD& v : p.points) bound = std::max({bound, std::abs(v[0]), std::abs(v[1])});
  bound *= 1.05;
  auto sx = [bound](double x) { return 500.0 + 500.0 * x / bound; };
  auto sy = [bound](double y) { return 500.0 - 500.0 * y / bound; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  for (const SvgPath& p : paths) {
    if (p.points.empty()) continue;
    out << "  <path d=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i)
      out << (i == 0 ? "M " : "L ") << sx(p.points[i][0]) << ' ' << sy(p.points[i][1]) << ' ';
    if (p.closed) out << 'Z';
    out << "\" style=\"" << p.style << "\"/>\n";
  }
  out << "</svg>\n";
}

std::vector<SvgPath> cell_boundary_paths(const std::vector<VecI>& plus_sites, double scale,
                                         double shift_x, double shift_y,
                                         const std::string& style) {
  std::set<VecI> plus(plus_sites.begin(), plus_sites.end());
  std::vector<SvgPath> paths;
  for (const VecI& s : plus_sites) {
    double x0 = scale * s[0] - shift_x, y0 = scale * s[1] - shift_y;
    double x1 = x0 + scale, y1 = y0 + scale;
    auto edge = [&paths, &style](double ax, double ay, double bx, double by) {
      SvgPath p;
      p.points = {{ax, ay}, {bx, by}};
      p.style = style;
      paths.push_back(std::move(p));
    };
    if (!plus.count(VecI{s[0] - 1, s[1]})) edge(x0, y0, x0, y1);
    if (!plus.count(VecI{s[0] + 1, s[1]})) edge(x1, y0, x1, y1);
    if (!plus.count(VecI{s[0], s[1] - 1})) edge(x0, y0, x1, y0);
    if (!plus.count(VecI{s[0], s[1] + 1})) edge(x0, y1, x1, y1);
  }
  return paths;
}

void write_polygon_csv(std::ostream& out, const PolygonD& polygon) {
  out << "x,y\n";
  for (const VecD& v : polygon.vertices)
    out << format_double(v[0]) << ',' << format_double(v[1]) << '\n';
}

}  // namespace spinshape
