#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spinshape/ising.hpp"
#include "spinshape/polygon.hpp"

namespace spinshape {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Ground state of the system under #{u_i = +1} = plus_count, searched on
/// the centered box of the given radius, exterior fixed at -1.
struct VolumeConstrainedProblem {
  IsingSystem system;
  long long plus_count = 0;
  long long box_radius = 1;
  double eps = 0;  // diagnostic scale only; eps^d * plus_count ~ |W_phi|
};

struct AnnealSchedule {
  double initial_temperature = 9.0;  // in energy units; stay below criticality
  double cooling = 0.97;             // geometric factor per level
  int sweeps_per_temperature = 30;   // proposals per level = sweeps * boundary size
  std::uint64_t seed = kDefaultSeed;
};

struct ConstrainedGroundState {
  Rational energy;  // exact, unnormalized
  std::vector<VecI> plus_sites;
  bool boundary_contact = false;  // minimizer within interaction range of the box edge
};

/// Exhaustive minimum; throws infeasible_error ("use annealing") when
/// C(sites, plus_count) exceeds 10^7.
ConstrainedGroundState exact_constrained_ground_state(const VolumeConstrainedProblem& problem);

/// Kawasaki-style annealing: swap proposals between boundary +1 and
/// boundary -1 sites, Metropolis acceptance, geometric cooling until
/// T < initial/100. Deterministic given the seed; the returned energy is the
/// exact energy of the final configuration (>= the true minimum).
/// An empty initial set means the default start, the plus_count box sites
/// closest to the origin.
ConstrainedGroundState anneal_constrained_ground_state(
    const VolumeConstrainedProblem& problem, const AnnealSchedule& schedule,
    const std::vector<VecI>& initial_plus_sites = {});

SpinConfiguration to_configuration(const VolumeConstrainedProblem& problem,
                                   const std::vector<VecI>& plus_sites);

struct WulffDiagnosticRow {
  double eps = 0;
  long long n_eps = 0;
  bool exact = false;  // exact solver vs annealing
  Rational energy;     // unnormalized E
  double scaled_energy = 0;     // eps^(d-1) * E
  double energy_ratio = 0;      // scaled_energy / F(W_phi)
  double symdiff_fraction = 0;  // |A_eps symdiff W_phi| / |W_phi|, barycenter-recentered
  bool boundary_contact = false;
};

struct WulffDiagnosticReport {
  Polygon wulff_polygon;  // the exact zonogon W_phi (d = 2)
  double wulff_area = 0;
  double wulff_perimeter_energy = 0;  // F_phi(W_phi) = 2 |W_phi|
  std::vector<WulffDiagnosticRow> rows;
  std::vector<std::vector<VecI>> minimizers;  // one per row
};

/// Per-eps constrained ground states with N_eps = floor(|W|^(1/d)/eps)^d on
/// the default box of radius 3*ceil(|W|^(1/d)/eps), compared against the
/// limit Wulff shape: energy ratio and symmetric-difference fraction.
/// Convergence is reported, not asserted. d = 2, support of full rank
/// (phi > 0) required.
WulffDiagnosticReport wulff_convergence_diagnostic(const IsingSystem& system,
                                                   const std::vector<double>& eps_list,
                                                   const AnnealSchedule& schedule);

/// +1 counts per residue class of the decomposition, aligned with its
/// representatives.
std::vector<long long> class_occupancy(const std::vector<VecI>& plus_sites,
                                       const SublatticeDecomposition& decomposition);

}  // namespace spinshape
