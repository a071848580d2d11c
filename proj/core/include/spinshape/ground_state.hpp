#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "spinshape/ising.hpp"

namespace spinshape {

/// N-periodic pair coefficients a_{i,i+k}, stored per (base mod N, offset).
/// Period-1 coefficients coincide with a homogeneous system.
class PeriodicCoefficients {
 public:
  PeriodicCoefficients(int dimension, int period);

  void set(const VecI& base, const VecI& offset, const Rational& value);
  Rational coefficient(const VecI& site, const VecI& offset) const;

  int dimension() const { return dim_; }
  int period() const { return period_; }
  const std::map<std::pair<VecI, VecI>, Rational>& entries() const { return entries_; }
  std::vector<VecI> offsets() const;
  long long range_inf() const;

 private:
  VecI reduce_base(const VecI& base) const;

  int dim_;
  int period_;
  std::map<std::pair<VecI, VecI>, Rational> entries_;
};

using TransitionCoefficients = std::variant<IsingSystem, DirectedIsingSystem, PeriodicCoefficients>;

/// Minimal transition energy m_T(nu): boundary values +1 on <i,nu> > 0 and
/// -1 on <i,nu> < 0 outside the rotated cube T*Q^nu, minimized over the
/// interior. m_T is computed UNNORMALIZED; divide once by T^(d-1) to get the
/// surface-tension estimate (the sweep does).
struct TransitionProblem {
  TransitionCoefficients coefficients;
  VecQ nu;   // nonzero; rational entries give exact boundary-side decisions
  int size;  // T >= 1
};

struct TransitionResult {
  Rational value;  // exact m_T(nu)
  SpinConfiguration minimizer;
  long long interior_site_count = 0;
};

/// Z^d intersected with the closed rotated cube T*Q^nu. Q^nu is the unit
/// cube centered at 0 with two faces orthogonal to nu, oriented by
/// deterministic Gram-Schmidt completion of nu with e_1, ..., e_d.
std::vector<VecI> transition_cube_sites(const VecQ& nu, int size);

/// Exact min cut of the two-terminal interaction graph. Exterior sites with
/// <i,nu> = 0 count as +1 (keeps the cut two-terminal; a convention the
/// paper's boundary condition leaves free).
TransitionResult min_transition_energy(const TransitionProblem& problem);

/// Direct evaluation of the cube-localized energy of a configuration
/// (independent of the min-cut path). Sites outside the cube are valued by
/// the halfspace boundary rule regardless of the configuration box.
Rational transition_energy(const TransitionProblem& problem, const SpinConfiguration& u);

/// u_i = +1 iff <i,nu> >= 0; its energy upper-bounds m_T.
SpinConfiguration flat_interface_configuration(const TransitionProblem& problem);

struct SweepRow {
  int size = 0;
  Rational m;            // exact m_T
  double per_area = 0;   // m_T / T^(d-1)
  double analytic = 0;   // phi(nu/|nu|) for homogeneous coefficients, NaN otherwise
  double rel_error = 0;  // |per_area - analytic| / analytic, NaN when no analytic value
};

std::vector<SweepRow> surface_tension_sweep(const TransitionCoefficients& coefficients,
                                            const VecQ& nu, const std::vector<int>& sizes);

/// m_T / T^(d-1) for a periodic system; raw value, no extrapolation.
double homogenized_tension(const PeriodicCoefficients& coefficients, const VecQ& nu, int size);

/// Searches the interaction graph on the centered box of the given radius
/// for a nonconstant zero-energy configuration. If the graph splits into
/// two or more components, the residue-class parity pattern of the support
/// span is returned (it extends to all of Z^d with zero energy); nullopt if
/// the graph is connected or no nonconstant extendable pattern exists.
std::optional<SpinConfiguration> zero_energy_witness(const IsingSystem& system,
                                                     long long radius);

}  // namespace spinshape
