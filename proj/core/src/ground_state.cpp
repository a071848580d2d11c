#include "spinshape/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "spinshape/maxflow.hpp"

namespace spinshape {

PeriodicCoefficients::PeriodicCoefficients(int dimension, int period)
    : dim_(dimension), period_(period) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (period < 1) throw std::invalid_argument("period must be >= 1");
}

VecI PeriodicCoefficients::reduce_base(const VecI& base) const {
  VecI r(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    r[i] = ((base[i] % period_) + period_) % period_;
  return r;
}

void PeriodicCoefficients::set(const VecI& base, const VecI& offset, const Rational& value) {
  if (static_cast<int>(base.size()) != dim_ || static_cast<int>(offset.size()) != dim_)
    throw std::invalid_argument("dimension mismatch");
  if (is_zero(offset)) throw std::invalid_argument("coefficient at offset 0 is not allowed");
  if (value < 0) throw std::invalid_argument("not ferromagnetic");
  if (value == 0) return;
  entries_[{reduce_base(base), offset}] = value;
}

Rational PeriodicCoefficients::coefficient(const VecI& site, const VecI& offset) const {
  auto it = entries_.find({reduce_base(site), offset});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<VecI> PeriodicCoefficients::offsets() const {
  std::set<VecI> ks;
  for (const auto& [key, a] : entries_) ks.insert(key.second);
  return {ks.begin(), ks.end()};
}

long long PeriodicCoefficients::range_inf() const {
  long long r = 0;
  for (const auto& [key, a] : entries_) r = std::max(r, norm_inf(key.second));
  return r;
}

namespace {

// Coefficient of ((u_i - u_{i+k})^+)^2 for the ordered pair (i, i+k):
//   undirected homogeneous   2*alpha_k
//   directed homogeneous     a_{-k}
//   periodic (undirected)    a_{i,i+k} + a_{i+k,i}
struct DirectedView {
  const TransitionCoefficients* coeffs;
  int dim;
  std::vector<VecI> offsets;  // closed under negation

  explicit DirectedView(const TransitionCoefficients& c) : coeffs(&c) {
    std::set<VecI> ks;
    std::visit(
        [&](const auto& sys) {
          dim = sys.dimension();
          for (const VecI& k : support_of(sys)) {
            ks.insert(k);
            ks.insert(negate(k));
          }
        },
        c);
    offsets.assign(ks.begin(), ks.end());
  }

  static std::vector<VecI> support_of(const IsingSystem& s) { return s.support(); }
  static std::vector<VecI> support_of(const DirectedIsingSystem& s) { return s.support(); }
  static std::vector<VecI> support_of(const PeriodicCoefficients& s) { return s.offsets(); }

  Rational value(const VecI& i, const VecI& k) const {
    if (const auto* sys = std::get_if<IsingSystem>(coeffs)) {
      auto it = sys->coefficients().find(k);
      return it == sys->coefficients().end() ? Rational(0) : 2 * it->second;
    }
    if (const auto* sys = std::get_if<DirectedIsingSystem>(coeffs)) {
      auto it = sys->coefficients().find(negate(k));
      return it == sys->coefficients().end() ? Rational(0) : it->second;
    }
    const auto& per = std::get<PeriodicCoefficients>(*coeffs);
    return per.coefficient(i, k) + per.coefficient(add(i, k), negate(k));
  }
};

int coefficient_dimension(const TransitionCoefficients& c) {
  return std::visit([](const auto& sys) { return sys.dimension(); }, c);
}

std::vector<VecD> orthonormal_frame(const VecD& nu) {
  int d = static_cast<int>(nu.size());
  std::vector<VecD> frame;
  std::vector<VecD> candidates{normalized(nu)};
  for (int i = 0; i < d; ++i) {
    VecD e(d, 0.0);
    e[i] = 1.0;
    candidates.push_back(std::move(e));
  }
  for (const VecD& c : candidates) {
    VecD v = c;
    for (const VecD& b : frame) {
      double proj = dot(v, b);
      for (int i = 0; i < d; ++i) v[i] -= proj * b[i];
    }
    double len = norm2(v);
    if (len < 1e-9) continue;
    for (double& x : v) x /= len;
    frame.push_back(std::move(v));
    if (static_cast<int>(frame.size()) == d) break;
  }
  return frame;
}

void check_nu(const VecQ& nu) {
  bool nonzero = false;
  for (const Rational& c : nu) nonzero |= c != 0;
  if (!nonzero) throw std::invalid_argument("nu must be nonzero");
}

}  // namespace

std::vector<VecI> transition_cube_sites(const VecQ& nu, int size) {
  check_nu(nu);
  if (size < 1) throw std::invalid_argument("cube size T must be >= 1");
  int d = static_cast<int>(nu.size());
  std::vector<VecD> frame = orthonormal_frame(to_vecd(nu));
  double half = size / 2.0;
  long long reach = static_cast<long long>(std::ceil(half * std::sqrt(double(d)))) + 1;
  Box bounding = Box::centered(d, reach);
  std::vector<VecI> sites;
  long long n = bounding.site_count();
  for (long long f = 0; f < n; ++f) {
    VecI site = bounding.site_at(f);
    VecD x = to_vecd(site);
    bool inside = true;
    for (const VecD& b : frame)
      if (std::abs(dot(x, b)) > half) {
        inside = false;
        break;
      }
    if (inside) sites.push_back(std::move(site));
  }
  return sites;
}

TransitionResult min_transition_energy(const TransitionProblem& problem) {
  check_nu(problem.nu);
  DirectedView view(problem.coefficients);
  if (static_cast<int>(problem.nu.size()) != view.dim)
    throw std::invalid_argument("nu dimension mismatch");
  std::vector<VecI> sites = transition_cube_sites(problem.nu, problem.size);
  int n = static_cast<int>(sites.size());
  std::map<VecI, int> site_index;
  for (int i = 0; i < n; ++i) site_index[sites[i]] = i;

  const int source = n, sink = n + 1;
  struct RatArc {
    int u, v;
    Rational cap;
  };
  std::vector<RatArc> rat_arcs;
  auto boundary_plus = [&](const VecI& site) { return dot(problem.nu, site) >= 0; };

  for (int ii = 0; ii < n; ++ii) {
    const VecI& i = sites[ii];
    for (const VecI& k : view.offsets) {
      VecI j = add(i, k);
      auto found = site_index.find(j);
      if (found != site_index.end()) {
        Rational c = view.value(i, k);
        if (c > 0) rat_arcs.push_back({ii, found->second, 4 * c});
      } else if (boundary_plus(j)) {
        // ordered pair (j, i) with exterior j at +1
        Rational c = view.value(j, negate(k));
        if (c > 0) rat_arcs.push_back({source, ii, 4 * c});
      } else {
        // ordered pair (i, j) with exterior j at -1
        Rational c = view.value(i, k);
        if (c > 0) rat_arcs.push_back({ii, sink, 4 * c});
      }
    }
  }

  Int scale = 1;
  for (const RatArc& a : rat_arcs) scale = lcm(scale, denominator(a.cap));
  MaxFlowGraph graph(n + 2);
  for (const RatArc& a : rat_arcs)
    graph.add_arc(a.u, a.v, numerator(a.cap) * (scale / denominator(a.cap)));

  Int flow = graph.max_flow(source, sink);
  Rational value(flow, scale);

  std::vector<char> plus_side = graph.source_side(source);
  VecI lo(view.dim, 0), hi(view.dim, 0);
  for (const VecI& s : sites)
    for (int a = 0; a < view.dim; ++a) {
      lo[a] = std::min(lo[a], s[a]);
      hi[a] = std::max(hi[a], s[a]);
    }
  Box box{lo, hi};
  std::vector<signed char> values(box.site_count());
  for (long long f = 0; f < box.site_count(); ++f) {
    VecI site = box.site_at(f);
    auto found = site_index.find(site);
    if (found != site_index.end())
      values[f] = plus_side[found->second] ? 1 : -1;
    else
      values[f] = boundary_plus(site) ? 1 : -1;
  }
  SpinConfiguration minimizer(std::move(box), std::move(values),
                              ExteriorRule::halfspace(problem.nu));
  return TransitionResult{std::move(value), std::move(minimizer), n};
}

Rational transition_energy(const TransitionProblem& problem, const SpinConfiguration& u) {
  check_nu(problem.nu);
  DirectedView view(problem.coefficients);
  std::vector<VecI> sites = transition_cube_sites(problem.nu, problem.size);
  std::set<VecI> cube(sites.begin(), sites.end());
  auto spin = [&](const VecI& site) -> int {
    if (cube.count(site)) return u.value(site);
    return dot(problem.nu, site) >= 0 ? 1 : -1;
  };
  Rational total = 0;
  for (const VecI& i : sites) {
    int ui = spin(i);
    for (const VecI& k : view.offsets) {
      VecI j = add(i, k);
      int uj = spin(j);
      if (ui > uj) total += 4 * view.value(i, k);
      if (!cube.count(j) && uj > ui) total += 4 * view.value(j, negate(k));
    }
  }
  return total;
}

SpinConfiguration flat_interface_configuration(const TransitionProblem& problem) {
  check_nu(problem.nu);
  int d = static_cast<int>(problem.nu.size());
  std::vector<VecI> sites = transition_cube_sites(problem.nu, problem.size);
  VecI lo(d, 0), hi(d, 0);
  for (const VecI& s : sites)
    for (int a = 0; a < d; ++a) {
      lo[a] = std::min(lo[a], s[a]);
      hi[a] = std::max(hi[a], s[a]);
    }
  Box box{lo, hi};
  std::vector<signed char> values(box.site_count());
  for (long long f = 0; f < box.site_count(); ++f)
    values[f] = dot(problem.nu, box.site_at(f)) >= 0 ? 1 : -1;
  return SpinConfiguration(std::move(box), std::move(values),
                           ExteriorRule::halfspace(problem.nu));
}

std::vector<SweepRow> surface_tension_sweep(const TransitionCoefficients& coefficients,
                                            const VecQ& nu, const std::vector<int>& sizes) {
  check_nu(nu);
  int d = coefficient_dimension(coefficients);
  VecD unit = normalized(to_vecd(nu));
  double analytic = std::numeric_limits<double>::quiet_NaN();
  if (const auto* sys = std::get_if<IsingSystem>(&coefficients))
    analytic = sys->surface_tension(unit);
  else if (const auto* sys = std::get_if<DirectedIsingSystem>(&coefficients))
    analytic = sys->surface_tension(unit);

  std::vector<SweepRow> rows;
  for (int t : sizes) {
    TransitionResult r = min_transition_energy({coefficients, nu, t});
    SweepRow row;
    row.size = t;
    row.m = r.value;
    row.per_area = to_double(r.value) / std::pow(double(t), d - 1);
    row.analytic = analytic;
    row.rel_error = std::isnan(analytic) || analytic == 0
                        ? std::numeric_limits<double>::quiet_NaN()
                        : std::abs(row.per_area - analytic) / analytic;
    rows.push_back(std::move(row));
  }
  return rows;
}

double homogenized_tension(const PeriodicCoefficients& coefficients, const VecQ& nu, int size) {
  TransitionResult r = min_transition_energy({coefficients, nu, size});
  return to_double(r.value) / std::pow(double(size), coefficients.dimension() - 1);
}

std::optional<SpinConfiguration> zero_energy_witness(const IsingSystem& system,
                                                     long long radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  int d = system.dimension();
  Box box = Box::centered(d, radius);
  long long n = box.site_count();
  std::vector<VecI> support = system.support();

  // Connected components of the interaction graph restricted to the box.
  std::vector<int> component(n, -1);
  int components = 0;
  std::vector<long long> stack;
  for (long long start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    component[start] = components;
    stack.push_back(start);
    while (!stack.empty()) {
      long long f = stack.back();
      stack.pop_back();
      VecI site = box.site_at(f);
      for (const VecI& k : support) {
        VecI nb = add(site, k);
        if (!box.contains(nb)) continue;
        long long g = box.flat_index(nb);
        if (component[g] < 0) {
          component[g] = components;
          stack.push_back(g);
        }
      }
    }
    ++components;
  }
  if (components < 2) return std::nullopt;

  // The residue-class parity pattern of the support span is constant on
  // every interaction orbit, so it extends to Z^d with zero energy. If it is
  // constant on the box the component split does not correspond to an
  // extendable nonconstant pattern (box-truncation artifact).
  SublatticeBasis span = SublatticeBasis::from_generators(d, support);
  ExteriorRule rule = ExteriorRule::sublattice_parity(span);
  std::vector<signed char> values(n);
  for (long long f = 0; f < n; ++f)
    values[f] = static_cast<signed char>(rule.value(box.site_at(f)));
  SpinConfiguration witness(std::move(box), std::move(values), std::move(rule));
  if (witness.constant_on_box()) return std::nullopt;
  return witness;
}

}  // namespace spinshape
