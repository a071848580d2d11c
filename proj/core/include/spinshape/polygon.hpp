#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "spinshape/zonotope.hpp"

namespace spinshape {

/// Convex polygon, vertices in counterclockwise order (d = 2 only).
template <class S>
struct PolygonT {
  std::vector<std::vector<S>> vertices;
};

using Polygon = PolygonT<Rational>;
using PolygonD = PolygonT<double>;

template <class S>
S polygon_area(const PolygonT<S>& p) {
  S twice(0);
  int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i) {
    const auto& a = p.vertices[i];
    const auto& b = p.vertices[(i + 1) % n];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / S(2);
}

PolygonD to_double(const Polygon& p);

namespace detail {

// Strict weak order on nonzero 2d vectors by angle in [0, 2*pi), exact for
// rationals: quadrant first, then cross product.
template <class S>
bool angle_less(const std::vector<S>& a, const std::vector<S>& b) {
  auto half = [](const std::vector<S>& v) {
    // 0 for angle in [0, pi), 1 for [pi, 2 pi)
    if (v[1] > S(0) || (v[1] == S(0) && v[0] > S(0))) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  S cross = a[0] * b[1] - a[1] * b[0];
  return cross > S(0);
}

}  // namespace detail

/// The zonogon edge walk: orient generators into the upper half-plane, merge
/// parallels, sort by angle, concatenate the +/- edges. Vertex count is twice
/// the number of distinct direction classes. Throws std::domain_error on
/// degenerate input (generators spanning less than R^2).
template <class S>
PolygonT<S> polygon_2d(const ZonotopeT<S>& z) {
  if (z.dim != 2) throw std::invalid_argument("polygon_2d needs d = 2");
  // Orient into y > 0, or y == 0 and x > 0.
  std::vector<std::vector<S>> gens;
  for (const auto& w : z.generators) {
    if (w[1] > S(0) || (w[1] == S(0) && w[0] > S(0)))
      gens.push_back(w);
    else
      gens.push_back({S(-w[0]), S(-w[1])});
  }
  std::sort(gens.begin(), gens.end(),
            [](const auto& a, const auto& b) { return detail::angle_less(a, b); });
  std::vector<std::vector<S>> merged;
  for (const auto& g : gens) {
    if (!merged.empty()) {
      S cross = merged.back()[0] * g[1] - merged.back()[1] * g[0];
      if (cross == S(0)) {
        merged.back()[0] += g[0];
        merged.back()[1] += g[1];
        continue;
      }
    }
    merged.push_back(g);
  }
  if (merged.size() < 2) throw std::domain_error("degenerate zonotope: generators span a line");

  std::vector<S> v{S(0), S(0)};
  for (const auto& g : merged) {
    v[0] -= g[0];
    v[1] -= g[1];
  }
  PolygonT<S> poly;
  poly.vertices.push_back(v);
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    v[0] += S(2) * merged[i][0];
    v[1] += S(2) * merged[i][1];
    poly.vertices.push_back(v);
  }
  std::size_t m = poly.vertices.size();
  for (std::size_t i = 0; i < m; ++i)
    poly.vertices.push_back({S(-poly.vertices[i][0]), S(-poly.vertices[i][1])});
  return poly;
}

/// Integral of phi over the boundary: sum over edges of
/// phi(outward unit normal) * edge length.
double perimeter_energy_polygon(const std::function<double(const VecD&)>& phi, const PolygonD& p);

/// Exact path: by 1-homogeneity phi(n)*|e| = phi(rot(e)), with rot the
/// clockwise quarter turn of the edge vector, so rational vertices and an
/// exact support functional give an exact rational energy.
Rational perimeter_energy_polygon(const std::function<Rational(const VecQ&)>& phi,
                                  const Polygon& p);

/// One Sutherland-Hodgman pass: keeps the side <normal, x> <= offset.
PolygonD clip_polygon(const PolygonD& p, const VecD& normal, double offset);

bool polygon_contains(const PolygonD& p, const VecD& point, double tol = 1e-12);

}  // namespace spinshape
