// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "spinshape/approx.hpp"
#include "spinshape/ground_state.hpp"
#include "spinshape/ising.hpp"
#include "spinshape/polygon.hpp"
#include "spinshape/prng.hpp"
#include "spinshape/wulff.hpp"
#include "spinshape/wulff_discrete.hpp"
#include "spinshape/zonotope.hpp"
#include "support/oracles.hpp"

using namespace spinshape;

namespace {

IsingSystem nearest_neighbour_2d() {
  return IsingSystem::from_coefficients(
      2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}});
}

IsingSystem range_two_only_2d() {
  Rational half(1, 2);
  return IsingSystem::from_coefficients(
      2, {{{2, 0}, half}, {{-2, 0}, half}, {{0, 2}, half}, {{0, -2}, half}});
}

// Returns an empty string on pass, a reason on failure.
using CriterionFn = std::function<std::string()>;

std::string criterion_commuting_square() {
  Rng rng(1001);
  for (int trial = 0; trial < 20; ++trial) {
    int d = trial % 2 == 0 ? 2 : 3;
    IsingSystem s = oracles::random_system(rng, d, 3, 1 + static_cast<int>(rng.next_below(4)));
    Zonotope w = zonotope_from_measure(s.generating_measure());
    for (int t = 0; t < 100; ++t) {
      VecQ z = oracles::random_rational_vector(rng, d);
      if (s.surface_tension(z) != support_function(w, z))
        return "surface tension and zonotope support differ on trial " + std::to_string(trial);
    }
  }
  return "";
}

std::string criterion_tension_convergence() {
  IsingSystem nn = nearest_neighbour_2d();
  std::vector<VecQ> directions{{Rational(0), Rational(1)}, {Rational(1), Rational(2)}};
  for (const VecQ& nu : directions) {
    TransitionResult r = min_transition_energy({nn, nu, 40});
    double phi = nn.surface_tension(normalized(to_vecd(nu)));
    double rel = std::abs(to_double(r.value) / 40.0 - phi) / phi;
    if (rel > 0.05) return "relative error " + std::to_string(rel) + " at T=40";
    for (int t = 1; t <= 4; ++t) {
      oracles::TransitionOracle o;
      o.kind = oracles::TransitionOracle::Kind::undirected;
      o.homogeneous = &nn.coefficients();
      Rational brute =
          oracles::brute_force_min_transition(o, transition_cube_sites(nu, t), nu);
      Rational cut = min_transition_energy({nn, nu, t}).value;
      if (brute != cut)
        return "brute force mismatch at T=" + std::to_string(t) + ": cut " +
               rational_to_string(cut) + " vs " + rational_to_string(brute);
    }
  }
  return "";
}

std::string criterion_equivalent_systems() {
  IsingSystem nn = nearest_neighbour_2d();
  IsingSystem far = range_two_only_2d();
  if (!equivalent(nn, far)) return "equivalent() returned false";
  if (!nn.is_coercive()) return "nearest-neighbour should be coercive";
  if (far.is_coercive()) return "distance-2 system should not be coercive";

  VecQ e2{Rational(0), Rational(1)};
  double phi = nn.surface_tension(VecD{0, 1});
  for (const IsingSystem* s : {&nn, &far}) {
    Rational m = min_transition_energy({*s, e2, 40}).value;
    double rel = std::abs(to_double(m) / 40.0 - phi) / phi;
    if (rel > 0.05) return "sweep off by " + std::to_string(rel);
  }

  auto witness = zero_energy_witness(far, 6);
  if (!witness.has_value()) return "no zero-energy witness for the distance-2 system";
  if (witness->constant_on_box()) return "witness is constant";
  if (far.energy(*witness) != 0) return "witness energy is not exactly 0";
  for (long long f = 0; f < witness->box().site_count(); ++f) {
    VecI s = witness->box().site_at(f);
    int expected = ((s[0] + s[1]) % 2 + 2) % 2 == 0 ? 1 : -1;
    if (witness->boxed_value(f) != expected) return "witness is not the checkerboard";
  }
  return "";
}

std::string criterion_coercivity_oracle() {
  // All supports built from at most 3 direction classes of {-2..2}^2; for
  // classes whose doubled vector stays in range the support may sit on p,
  // 2p, or both.
  std::vector<VecI> small{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  std::vector<VecI> large{{2, 1}, {1, 2}, {2, -1}, {1, -2}};
  std::vector<std::vector<std::vector<VecI>>> options;  // per class: support choices
  for (const VecI& p : small) {
    VecI p2{2 * p[0], 2 * p[1]};
    options.push_back({{p}, {p2}, {p, p2}});
  }
  for (const VecI& p : large) options.push_back({{p}});

  int instances = 0;
  for (int mask = 1; mask < 256; ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<int> chosen;
    for (int c = 0; c < 8; ++c)
      if (mask & (1 << c)) chosen.push_back(c);
    std::vector<int> pick(chosen.size(), 0);
    while (true) {
      CoefficientMap coeffs;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        for (const VecI& k : options[chosen[i]][pick[i]]) {
          coeffs[k] = 1;
          coeffs[negate(k)] = 1;
        }
      IsingSystem s = IsingSystem::from_coefficients(2, coeffs);
      ++instances;
      bool witness = zero_energy_witness(s, 6).has_value();
      if (witness == s.is_coercive()) {
        std::ostringstream why;
        why << "disagreement on support {";
        for (const auto& [k, a] : coeffs) why << " (" << k[0] << "," << k[1] << ")";
        why << " }";
        return why.str();
      }
      std::size_t axis = 0;
      while (axis < chosen.size()) {
        if (++pick[axis] < static_cast<int>(options[chosen[axis]].size())) break;
        pick[axis] = 0;
        ++axis;
      }
      if (axis == chosen.size()) break;
    }
  }
  if (instances < 500) return "family unexpectedly small: " + std::to_string(instances);
  return "";
}

std::string criterion_volume() {
  Zonotope z = make_zonotope(
      2, std::vector<VecQ>{{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                           {Rational(1), Rational(1)}});
  if (volume(z) != 12) return "formula volume is not 12";
  double mc = oracles::monte_carlo_zonogon_volume({{1, 0}, {0, 1}, {1, 1}}, 1000000, 99);
  if (std::abs(mc - 12.0) / 12.0 > 0.01)
    return "Monte-Carlo estimate " + std::to_string(mc) + " off by more than 1%";
  return "";
}

std::string criterion_wulff_identity() {
  Rng rng(1006);
  int done = 0;
  while (done < 10) {
    std::vector<VecQ> gens;
    int count = 2 + static_cast<int>(rng.next_below(3));
    for (int g = 0; g < count; ++g) {
      VecQ v{oracles::random_rational(rng), oracles::random_rational(rng)};
      if (v[0] == 0 && v[1] == 0) v[0] = 1;
      gens.push_back(std::move(v));
    }
    Zonotope z = make_zonotope(2, gens);
    if (!non_degenerate(z)) continue;
    ++done;
    Polygon w = polygon_2d(z);
    std::function<Rational(const VecQ&)> f = [&z](const VecQ& dir) {
      return support_function(z, dir);
    };
    if (perimeter_energy_polygon(f, w) != 2 * polygon_area(w))
      return "F(W) != 2|W| on zonogon " + std::to_string(done);
  }
  return "";
}

std::string criterion_zonoid_approximation() {
  auto disk = [](const VecD& z) { return norm2(z); };
  ZonoidApproxOptions opts;
  opts.check_directions = 3600;
  ZonoidApproxResult coarse = approximate_zonoid(disk, 2, 1.0, 10, opts);
  if (coarse.sup_error > 0.02)
    return "sup error " + std::to_string(coarse.sup_error) + " above 2% at bound 10";
  ZonoidApproxResult fine = approximate_zonoid(disk, 2, 1.0, 20, opts);
  if (!(fine.sup_error < coarse.sup_error))
    return "error did not decrease: " + std::to_string(coarse.sup_error) + " -> " +
           std::to_string(fine.sup_error);
  return "";
}

std::string criterion_discrete_wulff() {
  IsingSystem nn = nearest_neighbour_2d();
  AnnealSchedule schedule;  // defaults, kDefaultSeed
  WulffDiagnosticReport report =
      wulff_convergence_diagnostic(nn, {1.0 / 8, 1.0 / 16, 1.0 / 24}, schedule);
  const WulffDiagnosticRow& last = report.rows.back();
  if (std::abs(last.energy_ratio - 1.0) > 0.10)
    return "energy ratio " + std::to_string(last.energy_ratio) + " at eps=1/24";
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    if (!(report.rows[i].symdiff_fraction < report.rows[i - 1].symdiff_fraction))
      return "symmetric difference not decreasing at row " + std::to_string(i);
  return "";
}

std::string criterion_directed_reduction() {
  Rng rng(1009);
  for (int trial = 0; trial < 10; ++trial) {
    IsingSystem s = oracles::random_system(rng, 2, 2, 1 + static_cast<int>(rng.next_below(3)));
    DirectedIsingSystem embedded = DirectedIsingSystem::from_symmetric(s);
    auto [zon, translation] = directed_wulff(embedded);
    for (const Rational& t : translation)
      if (t != 0) return "symmetric system translated";
    Zonotope undirected = zonotope_from_measure(s.generating_measure());
    for (int t = 0; t < 20; ++t) {
      VecQ z = oracles::random_rational_vector(rng, 2);
      if (embedded.surface_tension(z) != s.surface_tension(z))
        return "directed tension differs";
      if (support_function(zon, z) != support_function(undirected, z))
        return "directed Wulff support differs";
    }
    if (trial < 3) {
      VecQ nu{Rational(1), Rational(1)};
      if (min_transition_energy({s, nu, 4}).value !=
          min_transition_energy({embedded, nu, 4}).value)
        return "directed and undirected min cuts differ";
    }
  }

  DirectedIsingSystem east = DirectedIsingSystem::from_coefficients(2, {{{1, 0}, 1}});
  auto [segment, translation] = directed_wulff(east);
  if (segment.generators.size() != 1 || !(segment.generators[0] == VecQ{2, 0}))
    return "directed Wulff of {(1,0):1} is not the centered segment of [0,(4,0)]";
  if (!(translation == VecQ{2, 0})) return "translation is not (2,0)";
  return "";
}

std::string criterion_periodic_sanity() {
  Rng rng(1010);
  for (int trial = 0; trial < 5; ++trial) {
    IsingSystem s = oracles::random_system(rng, 2, 2, 1 + static_cast<int>(rng.next_below(3)));
    PeriodicCoefficients per(2, 1);
    for (const auto& [k, a] : s.coefficients()) per.set(VecI{0, 0}, k, a);
    VecQ nu{Rational(0), Rational(1)};
    for (int t : {4, 8}) {
      Rational homogeneous = min_transition_energy({s, nu, t}).value;
      Rational periodic = min_transition_energy({per, nu, t}).value;
      if (homogeneous != periodic)
        return "period-1 mismatch at T=" + std::to_string(t) + " trial " +
               std::to_string(trial);
    }
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    CriterionFn fn;
  };
  std::vector<Criterion> criteria{
      {1, "commuting square (tension = zonotope support, exact)", 5, criterion_commuting_square},
      {2, "surface-tension convergence at T=40 + brute force at T<=4", 60,
       criterion_tension_convergence},
      {3, "equivalent systems, equal limits, differing coercivity", 60,
       criterion_equivalent_systems},
      {4, "coercivity classifier vs zero-energy witness oracle", 30, criterion_coercivity_oracle},
      {5, "zonotope volume formula vs Monte-Carlo membership", 10, criterion_volume},
      {6, "Wulff identity F(W) = 2|W| (exact rational)", 5, criterion_wulff_identity},
      {7, "zonoid approximation of the disk", 10, criterion_zonoid_approximation},
      {8, "discrete Wulff diagnostic (annealed, fixed seed)", 300, criterion_discrete_wulff},
      {9, "directed reduction and directed Wulff shapes", 5, criterion_directed_reduction},
      {10, "periodic sanity: period 1 = homogeneous", 30, criterion_periodic_sanity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.fn();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && elapsed > c.budget_seconds)
      reason = "runtime " + std::to_string(elapsed) + "s exceeds budget";
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    if (reason.empty()) {
      line << "PASS criterion " << c.id << " [" << elapsed << "s]: " << c.name;
    } else {
      line << "FAIL criterion " << c.id << " [" << elapsed << "s]: " << c.name << " -- "
           << reason;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  return failures;
}
