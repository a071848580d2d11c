#include "spinshape/polygon.hpp"

#include <cmath>

namespace spinshape {

PolygonD to_double(const Polygon& p) {
  PolygonD d;
  d.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) d.vertices.push_back(to_vecd(v));
  return d;
}

double perimeter_energy_polygon(const std::function<double(const VecD&)>& phi, const PolygonD& p) {
  double total = 0;
  int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i) {
    const VecD& a = p.vertices[i];
    const VecD& b = p.vertices[(i + 1) % n];
    VecD e{b[0] - a[0], b[1] - a[1]};
    double len = norm2(e);
    if (len == 0) continue;
    VecD outward{e[1] / len, -e[0] / len};  // CCW orientation
    total += phi(outward) * len;
  }
  return total;
}

Rational perimeter_energy_polygon(const std::function<Rational(const VecQ&)>& phi,
                                  const Polygon& p) {
  Rational total = 0;
  int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i) {
    const VecQ& a = p.vertices[i];
    const VecQ& b = p.vertices[(i + 1) % n];
    VecQ rotated{b[1] - a[1], a[0] - b[0]};  // phi(rot(e)) = phi(n_hat) * |e|
    if (rotated[0] == 0 && rotated[1] == 0) continue;
    total += phi(rotated);
  }
  return total;
}

PolygonD clip_polygon(const PolygonD& p, const VecD& normal, double offset) {
  PolygonD out;
  int n = static_cast<int>(p.vertices.size());
  if (n == 0) return out;
  for (int i = 0; i < n; ++i) {
    const VecD& a = p.vertices[i];
    const VecD& b = p.vertices[(i + 1) % n];
    double da = dot(normal, a) - offset;
    double db = dot(normal, b) - offset;
    if (da <= 0) out.vertices.push_back(a);
    if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
      double t = da / (da - db);
      out.vertices.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  return out;
}

bool polygon_contains(const PolygonD& p, const VecD& point, double tol) {
  int n = static_cast<int>(p.vertices.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    const VecD& a = p.vertices[i];
    const VecD& b = p.vertices[(i + 1) % n];
    double cross = (b[0] - a[0]) * (point[1] - a[1]) - (b[1] - a[1]) * (point[0] - a[0]);
    if (cross < -tol) return false;
  }
  return true;
}

}  // namespace spinshape
