#include "spinshape/wulff_discrete.hpp"

#include <algorithm>
#include <cmath>

#include "spinshape/prng.hpp"
#include "spinshape/wulff.hpp"
#include "spinshape/zonotope.hpp"

namespace spinshape {

namespace {

// Spins on a padded flat grid: the search box plus an interaction-range
// collar fixed at -1, so neighbor reads from box sites never need bounds
// checks. Energies are kept in scaled integer units (coefficients times the
// common denominator); every flip delta is a multiple of 8.
class SpinGrid {
 public:
  SpinGrid(const IsingSystem& system, long long radius)
      : dim_(system.dimension()), radius_(radius), range_(std::max<long long>(system.range_inf(), 1)) {
    extent_ = 2 * (radius_ + range_) + 1;
    cells_ = 1;
    strides_.assign(dim_, 0);
    for (int a = dim_ - 1; a >= 0; --a) {
      strides_[a] = cells_;
      cells_ *= extent_;
    }
    spin_.assign(cells_, -1);
    in_box_.assign(cells_, 0);
    box_sites_ = 1;
    for (int i = 0; i < dim_; ++i) box_sites_ *= 2 * radius_ + 1;
    VecI site(dim_, -radius_);
    while (true) {
      in_box_[cell_of(site)] = 1;
      int axis = dim_ - 1;
      while (axis >= 0 && site[axis] == radius_) site[axis--] = -radius_;
      if (axis < 0) break;
      ++site[axis];
    }

    scale_ = 1;
    for (const auto& [k, a] : system.coefficients()) scale_ = lcm(scale_, denominator(a));
    for (const auto& [k, a] : system.coefficients()) {
      long long delta = 0;
      for (int i = 0; i < dim_; ++i) delta += k[i] * strides_[i];
      Int w = numerator(a) * (scale_ / denominator(a));
      if (w > (Int(1) << 40))
        throw std::invalid_argument("interaction coefficients too large for the grid solver");
      offsets_.push_back(delta);
      weights_.push_back(w.convert_to<long long>());
    }
  }

  int dimension() const { return dim_; }
  long long radius() const { return radius_; }
  long long cell_count() const { return cells_; }
  long long box_site_count() const { return box_sites_; }
  const Int& scale() const { return scale_; }
  int spin(long long cell) const { return spin_[cell]; }
  bool in_box(long long cell) const { return in_box_[cell] != 0; }

  long long cell_of(const VecI& site) const {
    long long c = 0;
    for (int i = 0; i < dim_; ++i) c += (site[i] + radius_ + range_) * strides_[i];
    return c;
  }

  VecI site_of(long long cell) const {
    VecI site(dim_);
    for (int i = 0; i < dim_; ++i) {
      site[i] = cell / strides_[i] - (radius_ + range_);
      cell %= strides_[i];
    }
    return site;
  }

  /// Energy change (scaled units) of flipping the box site at `cell`.
  long long flip_delta(long long cell) const {
    long long d = 0;
    int s = spin_[cell];
    for (std::size_t j = 0; j < offsets_.size(); ++j) {
      int nb = spin_[cell + offsets_[j]];
      d += 8 * weights_[j] * (s == nb ? 1 : -1);
    }
    return d;
  }

  void flip(long long cell) { spin_[cell] = -spin_[cell]; }

  /// Full scaled energy: sum over box sites and offsets, exterior-facing
  /// bonds doubled (ordered pairs with one endpoint outside count twice).
  long long total_energy() const {
    long long e = 0;
    for (long long cell = 0; cell < cells_; ++cell) {
      if (!in_box_[cell]) continue;
      for (std::size_t j = 0; j < offsets_.size(); ++j) {
        long long nb = cell + offsets_[j];
        if (spin_[cell] != spin_[nb]) e += 4 * weights_[j] * (in_box_[nb] ? 1 : 2);
      }
    }
    return e;
  }

  const std::vector<long long>& offsets() const { return offsets_; }

  bool has_opposite_neighbor(long long cell) const {
    int s = spin_[cell];
    for (long long off : offsets_)
      if (spin_[cell + off] != s) return true;
    return false;
  }

  std::vector<VecI> plus_sites() const {
    std::vector<VecI> sites;
    for (long long cell = 0; cell < cells_; ++cell)
      if (in_box_[cell] && spin_[cell] == 1) sites.push_back(site_of(cell));
    std::sort(sites.begin(), sites.end());
    return sites;
  }

  bool touches_boundary() const {
    for (long long cell = 0; cell < cells_; ++cell)
      if (in_box_[cell] && spin_[cell] == 1) {
        VecI s = site_of(cell);
        for (int i = 0; i < dim_; ++i)
          if ((s[i] < 0 ? -s[i] : s[i]) > radius_ - range_) return true;
      }
    return false;
  }

 private:
  int dim_;
  long long radius_;
  long long range_;
  long long extent_ = 0;
  long long cells_ = 0;
  std::vector<long long> strides_;
  std::vector<signed char> spin_;
  std::vector<signed char> in_box_;
  long long box_sites_ = 0;
  Int scale_;
  std::vector<long long> offsets_;
  std::vector<long long> weights_;
};

void check_problem(const VolumeConstrainedProblem& p) {
  if (p.box_radius < 1) throw std::invalid_argument("box radius must be >= 1");
  Box box = Box::centered(p.system.dimension(), p.box_radius);
  if (p.plus_count < 0 || p.plus_count > box.site_count())
    throw std::invalid_argument("plus_count out of range for the box");
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ConstrainedGroundState result_from_grid(const SpinGrid& grid, long long scaled_energy) {
  ConstrainedGroundState out;
  out.energy = Rational(Int(scaled_energy), grid.scale());
  out.plus_sites = grid.plus_sites();
  out.boundary_contact = grid.touches_boundary();
  return out;
}

}  // namespace

ConstrainedGroundState exact_constrained_ground_state(const VolumeConstrainedProblem& problem) {
  check_problem(problem);
  Box box = Box::centered(problem.system.dimension(), problem.box_radius);
  long long n = box.site_count();
  if (binomial(n, problem.plus_count) > 10000000)
    throw infeasible_error("enumeration budget exceeded; use annealing");

  SpinGrid grid(problem.system, problem.box_radius);
  std::vector<long long> cells(n);
  for (long long f = 0; f < n; ++f) cells[f] = grid.cell_of(box.site_at(f));

  long long energy = 0;
  long long best = -1;
  std::vector<long long> chosen, best_cells;

  // Depth-first enumeration of all plus-site subsets with incremental
  // energy updates.
  auto recurse = [&](auto&& self, long long start, long long need) -> void {
    if (need == 0) {
      if (best < 0 || energy < best) {
        best = energy;
        best_cells = chosen;
      }
      return;
    }
    for (long long i = start; i + need <= n; ++i) {
      energy += grid.flip_delta(cells[i]);
      grid.flip(cells[i]);
      chosen.push_back(cells[i]);
      self(self, i + 1, need - 1);
      chosen.pop_back();
      grid.flip(cells[i]);
      energy -= grid.flip_delta(cells[i]);
    }
  };
  recurse(recurse, 0, problem.plus_count);

  for (long long c : best_cells) grid.flip(c);
  return result_from_grid(grid, best);
}

namespace {

// Boundary-site index with O(1) insert/remove.
class ActiveSet {
 public:
  explicit ActiveSet(long long cells) : pos_(cells, -1) {}

  bool contains(long long cell) const { return pos_[cell] >= 0; }
  long long size() const { return static_cast<long long>(items_.size()); }
  long long at(long long i) const { return items_[i]; }

  void insert(long long cell) {
    if (pos_[cell] >= 0) return;
    pos_[cell] = static_cast<std::int32_t>(items_.size());
    items_.push_back(static_cast<std::int32_t>(cell));
  }

  void remove(long long cell) {
    std::int32_t p = pos_[cell];
    if (p < 0) return;
    std::int32_t last = items_.back();
    items_[p] = last;
    pos_[last] = p;
    items_.pop_back();
    pos_[cell] = -1;
  }

 private:
  std::vector<std::int32_t> items_;
  std::vector<std::int32_t> pos_;
};

}  // namespace

ConstrainedGroundState anneal_constrained_ground_state(
    const VolumeConstrainedProblem& problem, const AnnealSchedule& schedule,
    const std::vector<VecI>& initial_plus_sites) {
  check_problem(problem);
  if (!(schedule.cooling > 0 && schedule.cooling < 1))
    throw std::invalid_argument("cooling factor must be in (0,1)");
  if (schedule.sweeps_per_temperature < 1)
    throw std::invalid_argument("sweeps_per_temperature must be >= 1");

  int d = problem.system.dimension();
  SpinGrid grid(problem.system, problem.box_radius);
  double scale = to_double(grid.scale());

  if (!initial_plus_sites.empty()) {
    if (static_cast<long long>(initial_plus_sites.size()) != problem.plus_count)
      throw std::invalid_argument("initial set size does not match plus_count");
    Box box = Box::centered(d, problem.box_radius);
    for (const VecI& s : initial_plus_sites) {
      if (!box.contains(s)) throw std::invalid_argument("initial site outside the box");
      long long cell = grid.cell_of(s);
      if (grid.spin(cell) == 1) throw std::invalid_argument("duplicate initial site");
      grid.flip(cell);
    }
  } else {
    // Default start: the plus_count box sites closest to the origin.
    long long need = problem.plus_count;
    std::vector<std::pair<long long, VecI>> ball;  // (norm^2, site)
    long long r = std::max<long long>(2, static_cast<long long>(
                                             std::ceil(std::pow(double(need), 1.0 / d))));
    while (true) {
      r = std::min(r, problem.box_radius);
      ball.clear();
      Box probe = Box::centered(d, r);
      for (long long f = 0; f < probe.site_count(); ++f) {
        VecI s = probe.site_at(f);
        long long n2 = 0;
        for (long long c : s) n2 += c * c;
        ball.emplace_back(n2, std::move(s));
      }
      if (static_cast<long long>(ball.size()) >= need || r == problem.box_radius) break;
      r = r * 2 + 1;
    }
    std::sort(ball.begin(), ball.end());
    for (long long i = 0; i < need; ++i) grid.flip(grid.cell_of(ball[i].second));
  }

  long long energy = grid.total_energy();

  ActiveSet plus_boundary(grid.cell_count());
  ActiveSet minus_boundary(grid.cell_count());
  auto refresh = [&](long long cell) {
    if (!grid.in_box(cell)) return;
    bool active = grid.has_opposite_neighbor(cell);
    if (grid.spin(cell) == 1) {
      minus_boundary.remove(cell);
      if (active)
        plus_boundary.insert(cell);
      else
        plus_boundary.remove(cell);
    } else {
      plus_boundary.remove(cell);
      if (active)
        minus_boundary.insert(cell);
      else
        minus_boundary.remove(cell);
    }
  };
  for (long long cell = 0; cell < grid.cell_count(); ++cell) refresh(cell);

  Rng rng(schedule.seed);
  double t = schedule.initial_temperature;
  double t_stop = schedule.initial_temperature / 100.0;
  while (t > t_stop) {
    long long proposals =
        schedule.sweeps_per_temperature * std::max<long long>(1, plus_boundary.size());
    for (long long step = 0; step < proposals; ++step) {
      if (plus_boundary.size() == 0 || minus_boundary.size() == 0) break;
      long long a = plus_boundary.at(rng.next_below(plus_boundary.size()));
      long long b = minus_boundary.at(rng.next_below(minus_boundary.size()));
      long long delta = grid.flip_delta(a);
      grid.flip(a);
      delta += grid.flip_delta(b);
      grid.flip(b);
      bool accept = delta <= 0;
      if (!accept) {
        double unscaled = static_cast<double>(delta) / scale;
        accept = rng.next_double() < std::exp(-unscaled / t);
      }
      if (accept) {
        energy += delta;
        refresh(a);
        refresh(b);
        for (long long off : grid.offsets()) {
          refresh(a + off);
          refresh(b + off);
        }
      } else {
        grid.flip(b);
        grid.flip(a);
      }
    }
    t *= schedule.cooling;
  }

  return result_from_grid(grid, energy);
}

SpinConfiguration to_configuration(const VolumeConstrainedProblem& problem,
                                   const std::vector<VecI>& plus_sites) {
  Box box = Box::centered(problem.system.dimension(), problem.box_radius);
  std::vector<signed char> values(box.site_count(), -1);
  for (const VecI& s : plus_sites) values[box.flat_index(s)] = 1;
  return SpinConfiguration(std::move(box), std::move(values), ExteriorRule::constant(-1));
}

namespace {

// Warm start for the diagnostic: the plus_count sites whose scaled cell
// centers sit deepest inside W by its Minkowski gauge, i.e. the best lattice
// rendering of the predicted limit shape. The annealer is free to move away
// from it; energies stay honest upper bounds for the constrained minimum.
std::vector<VecI> gauge_start(const PolygonD& w, double eps, long long plus_count,
                              long long box_radius) {
  struct Edge {
    VecD normal;
    double offset;
  };
  std::vector<Edge> edges;
  int k = static_cast<int>(w.vertices.size());
  double w_reach = 0;
  for (int i = 0; i < k; ++i) {
    const VecD& a = w.vertices[i];
    const VecD& b = w.vertices[(i + 1) % k];
    VecD n{b[1] - a[1], a[0] - b[0]};
    double len = norm2(n);
    n[0] /= len;
    n[1] /= len;
    edges.push_back({n, dot(n, a)});
    w_reach = std::max({w_reach, std::abs(a[0]), std::abs(a[1])});
  }
  auto gauge = [&edges](double x, double y) {
    double g = 0;
    for (const Edge& e : edges) g = std::max(g, (e.normal[0] * x + e.normal[1] * y) / e.offset);
    return g;
  };

  std::vector<std::pair<double, VecI>> ranked;
  double threshold = 1.1;
  while (true) {
    ranked.clear();
    long long reach = std::min<long long>(
        box_radius, static_cast<long long>(std::ceil(threshold * w_reach / eps)) + 2);
    for (long long x = -reach; x <= reach; ++x)
      for (long long y = -reach; y <= reach; ++y) {
        double g = gauge(eps * (x + 0.5), eps * (y + 0.5));
        if (g <= threshold) ranked.emplace_back(g, VecI{x, y});
      }
    if (static_cast<long long>(ranked.size()) >= plus_count || reach >= box_radius) break;
    threshold *= 1.3;
  }
  if (static_cast<long long>(ranked.size()) < plus_count)
    throw std::logic_error("warm start could not collect enough sites");
  std::sort(ranked.begin(), ranked.end());
  std::vector<VecI> sites;
  sites.reserve(plus_count);
  for (long long i = 0; i < plus_count; ++i) sites.push_back(ranked[i].second);
  return sites;
}

double cell_polygon_intersection_area(const PolygonD& w, double x0, double y0, double x1,
                                      double y1) {
  PolygonD cell;
  cell.vertices = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  PolygonD clipped = cell;
  int n = static_cast<int>(w.vertices.size());
  for (int i = 0; i < n && clipped.vertices.size() >= 3; ++i) {
    const VecD& a = w.vertices[i];
    const VecD& b = w.vertices[(i + 1) % n];
    VecD normal{b[1] - a[1], a[0] - b[0]};  // inward-left for CCW; keep <= side
    clipped = clip_polygon(clipped, normal, dot(normal, a));
  }
  if (clipped.vertices.size() < 3) return 0;
  return polygon_area(clipped);
}

}  // namespace

WulffDiagnosticReport wulff_convergence_diagnostic(const IsingSystem& system,
                                                   const std::vector<double>& eps_list,
                                                   const AnnealSchedule& schedule) {
  if (system.dimension() != 2)
    throw std::invalid_argument("diagnostic implemented for d = 2 only");
  if (system.support_rank() < 2)
    throw std::domain_error("degenerate system: phi vanishes on some direction");

  WulffDiagnosticReport report;
  Zonotope w = zonotope_from_measure(system.generating_measure());
  report.wulff_polygon = polygon_2d(w);
  Rational area = polygon_area(report.wulff_polygon);
  report.wulff_area = to_double(area);
  auto phi = [&system](const VecQ& z) { return system.surface_tension(z); };
  report.wulff_perimeter_energy =
      to_double(perimeter_energy_polygon(std::function<Rational(const VecQ&)>(phi),
                                         report.wulff_polygon));
  PolygonD w_poly = to_double(report.wulff_polygon);

  for (std::size_t row_index = 0; row_index < eps_list.size(); ++row_index) {
    double eps = eps_list[row_index];
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    double side = std::sqrt(report.wulff_area) / eps;
    long long l = static_cast<long long>(std::floor(side + 1e-9));
    VolumeConstrainedProblem problem{system, l * l,
                                     3 * static_cast<long long>(std::ceil(side - 1e-9)), eps};

    WulffDiagnosticRow row;
    row.eps = eps;
    row.n_eps = problem.plus_count;

    ConstrainedGroundState state;
    Box box = Box::centered(2, problem.box_radius);
    if (binomial(box.site_count(), problem.plus_count) <= 10000000) {
      state = exact_constrained_ground_state(problem);
      row.exact = true;
    } else {
      AnnealSchedule per_row = schedule;
      per_row.seed = schedule.seed + row_index;
      std::vector<VecI> warm =
          gauge_start(w_poly, eps, problem.plus_count, problem.box_radius);
      state = anneal_constrained_ground_state(problem, per_row, warm);
      row.exact = false;
    }

    row.energy = state.energy;
    row.scaled_energy = to_double(state.energy) * eps;  // d = 2
    row.energy_ratio = row.scaled_energy / report.wulff_perimeter_energy;
    row.boundary_contact = state.boundary_contact;

    double cx = 0, cy = 0;
    for (const VecI& s : state.plus_sites) {
      cx += static_cast<double>(s[0]) + 0.5;
      cy += static_cast<double>(s[1]) + 0.5;
    }
    if (!state.plus_sites.empty()) {
      cx = eps * cx / state.plus_sites.size();
      cy = eps * cy / state.plus_sites.size();
    }
    double inter = 0;
    for (const VecI& s : state.plus_sites) {
      double x0 = eps * s[0] - cx, y0 = eps * s[1] - cy;
      inter += cell_polygon_intersection_area(w_poly, x0, y0, x0 + eps, y0 + eps);
    }
    double a_total = static_cast<double>(problem.plus_count) * eps * eps;
    double symdiff = a_total + report.wulff_area - 2 * inter;
    row.symdiff_fraction = symdiff / report.wulff_area;

    report.rows.push_back(row);
    report.minimizers.push_back(state.plus_sites);
  }
  return report;
}

std::vector<long long> class_occupancy(const std::vector<VecI>& plus_sites,
                                       const SublatticeDecomposition& decomposition) {
  std::map<VecI, std::size_t> rep_index;
  for (std::size_t i = 0; i < decomposition.representatives.size(); ++i)
    rep_index[decomposition.representatives[i]] = i;
  std::vector<long long> counts(decomposition.representatives.size(), 0);
  for (const VecI& s : plus_sites) {
    std::vector<Int> reduced = decomposition.basis.reduce(s);
    VecI rep(reduced.size());
    for (std::size_t i = 0; i < reduced.size(); ++i) rep[i] = reduced[i].convert_to<long long>();
    auto it = rep_index.find(rep);
    if (it == rep_index.end()) throw std::logic_error("representative not found");
    ++counts[it->second];
  }
  return counts;
}

}  // namespace spinshape
