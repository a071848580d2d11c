#include "spinshape/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinshape {

double support_function(const Zonotope& z, const VecD& dir) {
  double f = 0;
  for (const auto& w : z.generators) {
    double inner = 0;
    for (int i = 0; i < z.dim; ++i) inner += dir[i] * to_double(w[i]);
    f += std::abs(inner);
  }
  return f;
}

namespace {

int rank_exact(const Zonotope& z) {
  std::vector<VecQ> rows = z.generators;
  int rank = 0;
  for (int col = 0; col < z.dim && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < z.dim; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

int rank_numeric(const ZonotopeD& z, double tol) {
  std::vector<VecD> rows = z.generators;
  for (VecD& r : rows) {
    double n = norm2(r);
    if (n > 0)
      for (double& c : r) c /= n;
  }
  int rank = 0;
  for (int col = 0; col < z.dim && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    double best = tol;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (std::abs(rows[r][col]) > best) {
        best = std::abs(rows[r][col]);
        pivot = r;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      double factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < z.dim; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool non_degenerate(const Zonotope& z) { return rank_exact(z) == z.dim; }

bool non_degenerate(const ZonotopeD& z, double tol) { return rank_numeric(z, tol) == z.dim; }

ZonotopeD to_double(const Zonotope& z) {
  ZonotopeD d;
  d.dim = z.dim;
  d.generators.reserve(z.generators.size());
  for (const auto& w : z.generators) d.generators.push_back(to_vecd(w));
  return d;
}

Zonotope zonotope_from_measure(const GeneratingMeasure& m) {
  if (!m.all_exact())
    throw std::invalid_argument(
        "zonotope_from_measure: measure has floating weights, use the numeric variant");
  Zonotope z;
  z.dim = m.dimension();
  for (const MeasureClass& c : m.classes()) {
    VecQ w(z.dim);
    for (int i = 0; i < z.dim; ++i) w[i] = 8 * c.s * Rational(c.direction.primitive[i]);
    z.generators.push_back(std::move(w));
  }
  return z;
}

ZonotopeD zonotope_from_measure_numeric(const GeneratingMeasure& m) {
  ZonotopeD z;
  z.dim = m.dimension();
  for (const MeasureClass& c : m.classes()) {
    double scale = 2.0 * c.lambda / norm2(c.direction.primitive);
    VecD w(z.dim);
    for (int i = 0; i < z.dim; ++i) w[i] = scale * static_cast<double>(c.direction.primitive[i]);
    z.generators.push_back(std::move(w));
  }
  return z;
}

GeneratingMeasure measure_from_zonotope(const Zonotope& z) {
  std::map<DirectionClass, Rational> s;
  for (const VecQ& w : z.generators) {
    Int den = 1;
    for (const Rational& c : w) den = lcm(den, denominator(c));
    VecI v(z.dim);
    for (int i = 0; i < z.dim; ++i) {
      Int scaled = numerator(w[i]) * (den / denominator(w[i]));
      v[i] = scaled.convert_to<long long>();
    }
    auto [cls, mult] = primitive_direction(v);
    // w = +-(mult/den) * p; the segment [-w, w] contributes 8s = mult/den.
    s[cls] += Rational(mult, den) / 8;
  }
  return GeneratingMeasure::from_exact_classes(z.dim, s);
}

namespace {

// Best rational approximation p/q with q <= max_den, by continued fractions.
std::pair<long long, long long> rationalize(double x, long long max_den) {
  bool neg = x < 0;
  if (neg) x = -x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a_floor = std::floor(r);
    if (a_floor > 9e18) break;
    long long a = static_cast<long long>(a_floor);
    if (q0 + a * q1 > max_den || (q1 > 0 && a > (9e17 / std::max<long long>(q1, 1)))) break;
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a_floor;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return {neg ? -1 : 1, 0};  // overflowed immediately
  return {neg ? -p1 : p1, q1};
}

}  // namespace

GeneratingMeasure measure_from_zonotope(const ZonotopeD& z, long long max_denominator,
                                        double tol) {
  std::map<DirectionClass, double> lambda;
  for (const VecD& w : z.generators) {
    int axis = 0;
    for (int i = 1; i < z.dim; ++i)
      if (std::abs(w[i]) > std::abs(w[axis])) axis = i;
    if (w[axis] == 0) throw std::invalid_argument("zero generator");

    long long common = 1;
    std::vector<std::pair<long long, long long>> ratios(z.dim);
    for (int i = 0; i < z.dim; ++i) {
      ratios[i] = rationalize(w[i] / w[axis], max_denominator);
      if (ratios[i].second == 0) throw std::invalid_argument("not a rational zonotope");
      common = std::lcm(common, ratios[i].second);
      if (common > max_denominator) throw std::invalid_argument("not a rational zonotope");
    }
    VecI v(z.dim);
    for (int i = 0; i < z.dim; ++i) v[i] = ratios[i].first * (common / ratios[i].second);
    auto [cls, mult] = primitive_direction(v);

    VecD unit_w = normalized(w);
    VecD unit_p = normalized(to_vecd(cls.primitive));
    double err_plus = 0, err_minus = 0;
    for (int i = 0; i < z.dim; ++i) {
      err_plus = std::max(err_plus, std::abs(unit_w[i] - unit_p[i]));
      err_minus = std::max(err_minus, std::abs(unit_w[i] + unit_p[i]));
    }
    if (std::min(err_plus, err_minus) > tol)
      throw std::invalid_argument("not a rational zonotope");
    lambda[cls] += norm2(w) / 2;
  }
  return GeneratingMeasure::from_weights(z.dim, lambda);
}

}  // namespace spinshape
