#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "spinshape/ground_state.hpp"
#include "spinshape/measure.hpp"
#include "spinshape/polygon.hpp"

namespace spinshape {

// System text format, shared with the CLI: one line per coefficient,
//   k_1 k_2 ... k_d  p/q
// `#` starts a comment, blank lines are skipped, the dimension is inferred
// from the first data line. Optional header line `directed` or `periodic N`;
// periodic lines read `base_1 .. base_d  k_1 .. k_d  p/q` with base taken
// mod N. Undirected coefficient maps are symmetrized on load (energies are
// unchanged by that).
using ParsedSystem = std::variant<IsingSystem, DirectedIsingSystem, PeriodicCoefficients>;

ParsedSystem parse_system(std::istream& in);
ParsedSystem parse_system_file(const std::string& path);

void write_system(std::ostream& out, const IsingSystem& system);
void write_system(std::ostream& out, const DirectedIsingSystem& system);
void write_system(std::ostream& out, const PeriodicCoefficients& system);

// Measure text format: lines `p_1 ... p_d  lambda`, lambda a decimal weight.
// Directions are canonicalized to primitive vectors; parallel lines merge.
GeneratingMeasure parse_measure(std::istream& in);
GeneratingMeasure parse_measure_file(const std::string& path);
void write_measure(std::ostream& out, const GeneratingMeasure& measure);

/// Direction list: one vector per line (integer or decimal components).
std::vector<VecD> parse_directions(std::istream& in);

/// Shortest string that round-trips the double.
std::string format_double(double x);

struct SvgPath {
  std::vector<VecD> points;
  bool closed = false;
  std::string style;  // e.g. "fill:none;stroke:#1f77b4;stroke-width:2"
};

/// 1000x1000 viewbox scaled to the symmetric bounding box of all paths,
/// y axis pointing up.
void write_svg(std::ostream& out, const std::vector<SvgPath>& paths);

/// Boundary of the union of unit cells at the +1 sites (grid segments
/// between a +1 cell and its complement), for minimizer overlays.
std::vector<SvgPath> cell_boundary_paths(const std::vector<VecI>& plus_sites, double scale,
                                         double shift_x, double shift_y,
                                         const std::string& style);

void write_polygon_csv(std::ostream& out, const PolygonD& polygon);

}  // namespace spinshape
