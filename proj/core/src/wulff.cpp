#include "spinshape/wulff.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "spinshape/prng.hpp"

namespace spinshape {

std::vector<VecD> unit_direction_sample(int dimension, int n) {
  std::vector<VecD> dirs;
  dirs.reserve(n);
  if (dimension == 1) {
    dirs.push_back({1.0});
    dirs.push_back({-1.0});
    return dirs;
  }
  if (dimension == 2) {
    for (int j = 0; j < n; ++j) {
      double theta = 2.0 * std::numbers::pi * j / n;
      dirs.push_back({std::cos(theta), std::sin(theta)});
    }
    return dirs;
  }
  Rng rng(0x5eed0d17ull ^ static_cast<std::uint64_t>(dimension));
  while (static_cast<int>(dirs.size()) < n) {
    VecD v(dimension);
    for (int i = 0; i < dimension; ++i) v[i] = rng.next_gaussian();
    double len = norm2(v);
    if (len < 1e-9) continue;
    for (double& c : v) c /= len;
    dirs.push_back(std::move(v));
  }
  return dirs;
}

PolygonD wulff_shape_2d(const std::function<double(const VecD&)>& phi, int n_halfplanes) {
  if (n_halfplanes < 3) throw std::invalid_argument("need at least 3 half-planes");
  std::vector<VecD> dirs = unit_direction_sample(2, n_halfplanes);
  std::vector<double> levels(dirs.size());
  double radius = 0;
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    levels[j] = phi(dirs[j]);
    if (!(levels[j] > 0))
      throw std::domain_error("degenerate Wulff shape; restrict to a subspace");
    radius = std::max(radius, levels[j]);
  }
  double r = 4 * radius;
  PolygonD poly;
  poly.vertices = {{-r, -r}, {r, -r}, {r, r}, {-r, r}};
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    poly = clip_polygon(poly, dirs[j], levels[j]);
    if (poly.vertices.size() < 3)
      throw std::domain_error("degenerate Wulff shape; restrict to a subspace");
  }
  return poly;
}

std::pair<Zonotope, VecQ> directed_wulff(const DirectedIsingSystem& system) {
  int d = system.dimension();
  Zonotope z;
  z.dim = d;
  VecQ translation(d, Rational(0));
  for (const auto& [k, a] : system.coefficients()) {
    VecQ half(d);
    for (int i = 0; i < d; ++i) {
      half[i] = 2 * a * Rational(k[i]);
      translation[i] += half[i];
    }
    z.generators.push_back(std::move(half));
  }
  return {std::move(z), std::move(translation)};
}

namespace {

double sup_support_diff(const std::function<double(const VecD&)>& fa,
                        const std::function<double(const VecD&)>& fb,
                        const std::vector<VecD>& dirs) {
  double sup = 0;
  for (const VecD& nu : dirs) sup = std::max(sup, std::abs(fa(nu) - fb(nu)));
  return sup;
}

void add_direction(std::vector<VecD>& dirs, const VecD& v) {
  double len = norm2(v);
  if (len < 1e-300) return;
  VecD u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / len;
  dirs.push_back(std::move(u));
}

void add_zonotope_features(std::vector<VecD>& dirs, const ZonotopeD& z) {
  for (const VecD& w : z.generators) {
    add_direction(dirs, w);
    if (z.dim == 2) add_direction(dirs, {w[1], -w[0]});
  }
  if (z.dim == 2 && z.generators.size() >= 2) {
    try {
      PolygonD poly = polygon_2d(z);
      for (const VecD& v : poly.vertices) add_direction(dirs, v);
    } catch (const std::domain_error&) {
      // degenerate: generator directions already cover the segment
    }
  }
}

void add_polygon_features(std::vector<VecD>& dirs, const PolygonD& p) {
  int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i) {
    add_direction(dirs, p.vertices[i]);
    const VecD& a = p.vertices[i];
    const VecD& b = p.vertices[(i + 1) % n];
    add_direction(dirs, {b[1] - a[1], a[0] - b[0]});
  }
}

double polygon_support(const PolygonD& p, const VecD& dir) {
  double best = -std::numeric_limits<double>::infinity();
  for (const VecD& v : p.vertices) best = std::max(best, dot(dir, v));
  return best;
}

}  // namespace

double hausdorff_distance(const ZonotopeD& a, const ZonotopeD& b, int n_samples) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  std::vector<VecD> dirs = unit_direction_sample(a.dim, n_samples);
  add_zonotope_features(dirs, a);
  add_zonotope_features(dirs, b);
  auto fa = [&a](const VecD& nu) { return support_function(a, nu); };
  auto fb = [&b](const VecD& nu) { return support_function(b, nu); };
  return sup_support_diff(fa, fb, dirs);
}

double hausdorff_distance(const Zonotope& a, const Zonotope& b, int n_samples) {
  return hausdorff_distance(to_double(a), to_double(b), n_samples);
}

double hausdorff_distance(const PolygonD& a, const PolygonD& b, int n_samples) {
  std::vector<VecD> dirs = unit_direction_sample(2, n_samples);
  add_polygon_features(dirs, a);
  add_polygon_features(dirs, b);
  auto fa = [&a](const VecD& nu) { return polygon_support(a, nu); };
  auto fb = [&b](const VecD& nu) { return polygon_support(b, nu); };
  return sup_support_diff(fa, fb, dirs);
}

}  // namespace spinshape
