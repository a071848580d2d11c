#pragma once

// Independent oracles for the test suites. Everything here recomputes
// expected values from first principles (enumeration, union-find, sampling)
// without going through the library's solver paths.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "spinshape/ground_state.hpp"
#include "spinshape/ising.hpp"
#include "spinshape/prng.hpp"
#include "spinshape/vec.hpp"

namespace oracles {

using namespace spinshape;

// Number of equivalence classes of box sites under translation by the
// generators (union-find over the step graph). Equals the sublattice index
// when the box is large enough; callers should check stability in radius.
inline long long step_graph_components(int dim, const std::vector<VecI>& generators,
                                       long long radius) {
  Box box = Box::centered(dim, radius);
  long long n = box.site_count();
  std::vector<long long> parent(n);
  for (long long i = 0; i < n; ++i) parent[i] = i;
  std::function<long long(long long)> find = [&](long long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long long f = 0; f < n; ++f) {
    VecI site = box.site_at(f);
    for (const VecI& g : generators) {
      for (const VecI& step : {g, negate(g)}) {
        VecI nb = add(site, step);
        if (!box.contains(nb)) continue;
        long long a = find(f), b = find(box.flat_index(nb));
        if (a != b) parent[a] = b;
      }
    }
  }
  std::set<long long> roots;
  for (long long i = 0; i < n; ++i) roots.insert(find(i));
  return static_cast<long long>(roots.size());
}

// Direct ordered-pair sum for the cube-localized transition energy: every
// ordered pair (i, j) with i - j in the coefficient support and i or j in
// the cube, exterior spins +1 iff <x, nu> >= 0.
struct TransitionOracle {
  enum class Kind { undirected, directed, periodic };
  Kind kind;
  const CoefficientMap* homogeneous = nullptr;
  const PeriodicCoefficients* periodic = nullptr;

  Rational coefficient(const VecI& i, const VecI& j) const {
    if (kind == Kind::periodic) return periodic->coefficient(i, sub(j, i));
    auto it = homogeneous->find(sub(i, j));
    return it == homogeneous->end() ? Rational(0) : it->second;
  }

  Rational pair_term(const Rational& c, int ui, int uj) const {
    if (c == 0) return 0;
    int diff = ui - uj;
    if (kind == Kind::directed) diff = diff > 0 ? diff : 0;
    return c * diff * diff;
  }

  Rational energy(const std::set<VecI>& cube, const VecQ& nu,
                  const std::function<int(const VecI&)>& interior_spin) const {
    auto spin = [&](const VecI& x) {
      if (cube.count(x)) return interior_spin(x);
      return dot(nu, x) >= 0 ? 1 : -1;
    };
    std::vector<VecI> offsets;
    if (kind == Kind::periodic) {
      for (const VecI& k : periodic->offsets()) {
        offsets.push_back(k);
        offsets.push_back(negate(k));
      }
    } else {
      for (const auto& [k, a] : *homogeneous) offsets.push_back(k);
      for (const auto& [k, a] : *homogeneous) offsets.push_back(negate(k));
    }
    std::set<VecI> halo(cube.begin(), cube.end());
    for (const VecI& s : cube)
      for (const VecI& k : offsets) halo.insert(add(s, k));

    Rational total = 0;
    std::set<std::pair<VecI, VecI>> seen;
    for (const VecI& i : halo)
      for (const VecI& k : offsets) {
        VecI j = sub(i, k);  // ordered pair (i, j)
        if (!cube.count(i) && !cube.count(j)) continue;
        if (!seen.insert({i, j}).second) continue;
        total += pair_term(coefficient(i, j), spin(i), spin(j));
      }
    return total;
  }
};

// Exhaustive minimum of the transition problem over all 2^n interior
// configurations: Gray-code walk with integer-scaled per-flip deltas
// computed from the raw coefficient map (no library solver involved).
inline Rational brute_force_min_transition(const TransitionOracle& oracle,
                                           const std::vector<VecI>& cube_sites, const VecQ& nu) {
  std::set<VecI> cube(cube_sites.begin(), cube_sites.end());
  int n = static_cast<int>(cube_sites.size());
  if (n > 25) throw std::runtime_error("brute force cube too large");
  std::map<VecI, int> index;
  for (int i = 0; i < n; ++i) index[cube_sites[i]] = i;

  std::vector<VecI> offsets;
  if (oracle.kind == TransitionOracle::Kind::periodic) {
    for (const VecI& k : oracle.periodic->offsets()) {
      offsets.push_back(k);
      offsets.push_back(negate(k));
    }
  } else {
    for (const auto& [k, a] : *oracle.homogeneous) {
      offsets.push_back(k);
      offsets.push_back(negate(k));
    }
  }
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());

  struct Neighbor {
    int interior = -1;   // index of j when inside the cube
    int fixed_spin = 0;  // boundary value when outside
    long long c_ij = 0;  // scaled coefficient of the ordered pair (i, j)
    long long c_ji = 0;
  };
  Int scale = 1;
  for (const VecI& i : cube_sites)
    for (const VecI& k : offsets) {
      scale = lcm(scale, denominator(oracle.coefficient(i, add(i, k))));
      scale = lcm(scale, denominator(oracle.coefficient(add(i, k), i)));
    }
  auto scaled = [&](const Rational& c) {
    return (numerator(c) * (scale / denominator(c))).convert_to<long long>();
  };
  std::vector<std::vector<Neighbor>> neighbors(n);
  for (int s = 0; s < n; ++s) {
    const VecI& i = cube_sites[s];
    for (const VecI& k : offsets) {
      VecI j = add(i, k);
      Neighbor nb;
      nb.c_ij = scaled(oracle.coefficient(i, j));
      nb.c_ji = scaled(oracle.coefficient(j, i));
      if (nb.c_ij == 0 && nb.c_ji == 0) continue;
      auto found = index.find(j);
      if (found != index.end())
        nb.interior = found->second;
      else
        nb.fixed_spin = dot(nu, j) >= 0 ? 1 : -1;
      neighbors[s].push_back(nb);
    }
  }

  const bool directed = oracle.kind == TransitionOracle::Kind::directed;
  auto term = [directed](long long c, int x, int y) -> long long {
    if (directed) return x > y ? 4 * c : 0;
    return x != y ? 4 * c : 0;
  };

  std::vector<int> spin(n, -1);
  Rational start = oracle.energy(cube, nu, [](const VecI&) { return -1; });
  long long energy = (numerator(start) * (scale / denominator(start))).convert_to<long long>();
  long long best = energy;

  for (unsigned long long m = 1; m < (1ULL << n); ++m) {
    int s = __builtin_ctzll(m);
    int before = spin[s];
    int after = -before;
    long long delta = 0;
    for (const Neighbor& nb : neighbors[s]) {
      int uj = nb.interior >= 0 ? spin[nb.interior] : nb.fixed_spin;
      delta += term(nb.c_ij, after, uj) - term(nb.c_ij, before, uj);
      delta += term(nb.c_ji, uj, after) - term(nb.c_ji, uj, before);
    }
    spin[s] = after;
    energy += delta;
    if (energy < best) best = energy;
  }
  return Rational(Int(best), scale);
}

// Membership in a zonogon via its facet normals (rotations of the
// generators), no vertex enumeration involved.
inline bool zonogon_contains(const std::vector<VecD>& gens, const VecD& z) {
  for (const VecD& w : gens) {
    VecD normal{w[1], -w[0]};
    double f = 0;
    for (const VecD& v : gens) f += std::abs(dot(normal, v));
    if (std::abs(dot(normal, z)) > f + 1e-12) return false;
  }
  return true;
}

inline double monte_carlo_zonogon_volume(const std::vector<VecD>& gens, int samples,
                                         std::uint64_t seed) {
  double bx = 0, by = 0;
  for (const VecD& w : gens) {
    bx += std::abs(w[0]);
    by += std::abs(w[1]);
  }
  Rng rng(seed);
  long long hits = 0;
  for (int s = 0; s < samples; ++s) {
    VecD z{(2 * rng.next_double() - 1) * bx, (2 * rng.next_double() - 1) * by};
    if (zonogon_contains(gens, z)) ++hits;
  }
  return 4.0 * bx * by * static_cast<double>(hits) / samples;
}

// Deterministic random test data.
inline Rational random_positive_rational(Rng& rng) {
  return Rational(Int(1 + rng.next_below(9)), Int(1 + rng.next_below(9)));
}

inline Rational random_rational(Rng& rng) {
  Rational r(Int(static_cast<long long>(rng.next_below(19)) - 9), Int(1 + rng.next_below(9)));
  return r;
}

inline VecQ random_rational_vector(Rng& rng, int dim) {
  VecQ z(dim);
  for (int i = 0; i < dim; ++i) z[i] = random_rational(rng);
  return z;
}

// Random symmetric system with support in {-reach..reach}^d.
inline IsingSystem random_system(Rng& rng, int dim, long long reach, int classes) {
  CoefficientMap raw;
  int placed = 0;
  while (placed < classes) {
    VecI k(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      k[i] = static_cast<long long>(rng.next_below(2 * reach + 1)) - reach;
      zero &= k[i] == 0;
    }
    if (zero) continue;
    raw[k] = random_positive_rational(rng);
    ++placed;
  }
  return IsingSystem::symmetrize(dim, raw);
}

}  // namespace oracles
