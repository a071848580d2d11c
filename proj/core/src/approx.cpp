#include "spinshape/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "spinshape/wulff.hpp"

namespace spinshape {

std::vector<DirectionClass> primitive_directions(int dimension, long long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::set<VecI> seen;
  Box box = Box::centered(dimension, bound);
  for (long long f = 0; f < box.site_count(); ++f) {
    VecI v = box.site_at(f);
    if (is_zero(v)) continue;
    auto [cls, mult] = primitive_direction(v);
    if (norm_inf(cls.primitive) <= bound) seen.insert(cls.primitive);
  }
  std::vector<DirectionClass> out;
  out.reserve(seen.size());
  for (const VecI& p : seen) out.push_back(DirectionClass{p});
  return out;
}

namespace {

struct Dictionary {
  std::vector<DirectionClass> classes;
  std::vector<VecD> units;
};

Dictionary make_dictionary(int dimension, long long bound) {
  Dictionary dict;
  dict.classes = primitive_directions(dimension, bound);
  dict.units.reserve(dict.classes.size());
  for (const DirectionClass& c : dict.classes)
    dict.units.push_back(normalized(to_vecd(c.primitive)));
  return dict;
}

double sup_error(const GeneratingMeasure& approx,
                 const std::function<double(const VecD&)>& target,
                 const std::vector<VecD>& dirs) {
  double sup = 0;
  for (const VecD& u : dirs) sup = std::max(sup, std::abs(approx.support(u) - target(u)));
  return sup;
}

// Ensures lambda on every coordinate class, small enough to keep the final
// sup-error below eta: a class of weight w adds at most 2w to f, so the
// total padding stays within half the remaining budget.
void apply_padding(std::map<DirectionClass, double>& weights, int dimension, double eta,
                   double err_before) {
  double budget = eta - err_before;
  if (budget <= 0) return;
  double lambda_pad = std::min(eta, budget / (16.0 * dimension)) * 4.0;
  for (int i = 0; i < dimension; ++i) {
    VecI e(dimension, 0);
    e[i] = 1;
    double& w = weights[DirectionClass{e}];
    w = std::max(w, lambda_pad);
  }
}

ZonoidApproxResult finish(std::map<DirectionClass, double> weights, int dimension,
                          const std::function<double(const VecD&)>& target, double eta,
                          const ZonoidApproxOptions& options) {
  std::vector<VecD> dirs = unit_direction_sample(dimension, options.check_directions);
  GeneratingMeasure measure = GeneratingMeasure::from_weights(dimension, weights);
  double err = sup_error(measure, target, dirs);
  if (options.coercive_padding) {
    apply_padding(weights, dimension, eta, err);
    measure = GeneratingMeasure::from_weights(dimension, weights);
    err = sup_error(measure, target, dirs);
  }
  if (!(err < eta))
    throw infeasible_error("approximation error " + std::to_string(err) +
                           " not below eta; increase denominator_bound");
  return ZonoidApproxResult{std::move(measure), err, static_cast<int>(dirs.size())};
}

}  // namespace

ZonoidApproxResult approximate_zonoid(const GeneratingMeasure& target, double eta,
                                      long long denominator_bound,
                                      const ZonoidApproxOptions& options) {
  if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
  int d = target.dimension();
  Dictionary dict = make_dictionary(d, denominator_bound);

  std::map<DirectionClass, double> weights;
  for (const MeasureClass& c : target.classes()) {
    VecD nu = normalized(to_vecd(c.direction.primitive));
    std::size_t best = 0;
    double best_cos = -1;
    for (std::size_t j = 0; j < dict.units.size(); ++j) {
      double cosine = std::abs(dot(nu, dict.units[j]));
      if (cosine > best_cos + 1e-15) {
        best_cos = cosine;
        best = j;
      }
    }
    weights[dict.classes[best]] += c.lambda;
  }

  auto target_support = [&target](const VecD& u) { return target.support(u); };
  return finish(std::move(weights), d, target_support, eta, options);
}

namespace {

// In the plane the generating density of a zonoid recovers from its support
// function as rho(theta) = (h + h'')(theta + pi/2) / 4. Quadrature of that
// density over the nearest-direction arcs of the dictionary gives the class
// weights directly; second differences on a fine grid integrate the kinks of
// polygonal h correctly.
std::map<DirectionClass, double> invert_support_2d(
    const std::function<double(const VecD&)>& support, const Dictionary& dict,
    int grid_size) {
  std::size_t m = dict.units.size();
  std::vector<double> atom_angle(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    double a = std::atan2(dict.units[j][1], dict.units[j][0]);
    atom_angle[2 * j] = a;
    atom_angle[2 * j + 1] = a > 0 ? a - std::numbers::pi : a + std::numbers::pi;
  }

  int g_count = grid_size;
  double step = 2 * std::numbers::pi / g_count;
  std::vector<double> h(g_count);
  for (int g = 0; g < g_count; ++g) {
    double theta = g * step;
    h[g] = support({std::cos(theta), std::sin(theta)});
  }

  std::map<DirectionClass, double> weights;
  std::vector<double> mass(m, 0);
  for (int g = 0; g < g_count; ++g) {
    double theta = g * step;
    int prev = (g + g_count - 1) % g_count;
    int next = (g + 1) % g_count;
    double second = (h[next] - 2 * h[g] + h[prev]) / (step * step);
    double rho = (h[g] + second) / 4;  // density at theta - pi/2
    if (rho <= 0) continue;           // garbage-in tolerated
    double at = theta - std::numbers::pi / 2;
    std::size_t best = 0;
    double best_dist = 10;
    for (std::size_t a = 0; a < atom_angle.size(); ++a) {
      double diff = std::abs(std::remainder(at - atom_angle[a], 2 * std::numbers::pi));
      if (diff < best_dist) {
        best_dist = diff;
        best = a;
      }
    }
    mass[best / 2] += rho * step;
  }
  for (std::size_t j = 0; j < m; ++j)
    if (mass[j] > 0) weights[dict.classes[j]] = mass[j] / 2;  // lambda per +- pair
  return weights;
}

}  // namespace

ZonoidApproxResult approximate_zonoid(const std::function<double(const VecD&)>& support,
                                      int dimension, double eta, long long denominator_bound,
                                      const ZonoidApproxOptions& options) {
  if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
  Dictionary dict = make_dictionary(dimension, denominator_bound);

  if (dimension == 2) {
    int grid = std::max(20000, 8 * options.check_directions);
    std::map<DirectionClass, double> weights = invert_support_2d(support, dict, grid);
    return finish(std::move(weights), dimension, support, eta, options);
  }

  // d >= 3: nonnegative least-squares fit of the class weights against
  // sampled support values.
  std::vector<VecD> dirs = unit_direction_sample(dimension, options.check_directions);
  std::size_t m = dict.units.size();
  std::size_t n = dirs.size();

  // Column-major design matrix: column j holds the support contribution of
  // a unit-weight class, 2|<u, nu_j>|.
  std::vector<std::vector<double>> cols(m, std::vector<double>(n));
  std::vector<double> col_norm2(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t t = 0; t < n; ++t) {
      double v = 2.0 * std::abs(dot(dirs[t], dict.units[j]));
      cols[j][t] = v;
      col_norm2[j] += v * v;
    }
  }
  std::vector<double> residual(n);
  double target_scale = 0;
  for (std::size_t t = 0; t < n; ++t) {
    residual[t] = support(dirs[t]);
    target_scale = std::max(target_scale, std::abs(residual[t]));
  }

  // Nonnegative least squares by cyclic coordinate descent.
  std::vector<double> x(m, 0);
  double tol = 1e-12 * std::max(target_scale, 1.0);
  for (int sweep = 0; sweep < 400; ++sweep) {
    double largest_move = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (col_norm2[j] == 0) continue;
      double g = 0;
      for (std::size_t t = 0; t < n; ++t) g += cols[j][t] * residual[t];
      double next = std::max(0.0, x[j] + g / col_norm2[j]);
      double delta = next - x[j];
      if (delta == 0) continue;
      for (std::size_t t = 0; t < n; ++t) residual[t] -= delta * cols[j][t];
      x[j] = next;
      largest_move = std::max(largest_move, std::abs(delta));
    }
    if (largest_move < tol) break;
  }

  std::map<DirectionClass, double> weights;
  for (std::size_t j = 0; j < m; ++j)
    if (x[j] > 1e-12 * std::max(target_scale, 1.0)) weights[dict.classes[j]] = x[j];
  return finish(std::move(weights), dimension, support, eta, options);
}

}  // namespace spinshape
