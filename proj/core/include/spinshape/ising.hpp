#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "spinshape/lattice.hpp"
#include "spinshape/measure.hpp"
#include "spinshape/vec.hpp"

namespace spinshape {

using CoefficientMap = std::map<VecI, Rational>;

/// Axis-aligned integer box, both bounds inclusive.
struct Box {
  VecI lo, hi;

  int dimension() const { return static_cast<int>(lo.size()); }
  bool contains(const VecI& site) const;
  long long site_count() const;
  long long flat_index(const VecI& site) const;  // row-major
  VecI site_at(long long flat) const;

  static Box centered(int dimension, long long radius);
};

/// Value assigned to lattice sites outside a configuration's box.
class ExteriorRule {
 public:
  static ExteriorRule constant(int spin);
  /// +1 iff <site, nu> >= 0, exactly (rational nu).
  static ExteriorRule halfspace(VecQ nu);
  /// +1 iff the l1 norm of the canonical representative of the site modulo
  /// the sublattice is even. Constant on residue classes, so any pair
  /// interaction inside the sublattice sees equal spins.
  static ExteriorRule sublattice_parity(SublatticeBasis basis);

  int value(const VecI& site) const;

 private:
  enum class Kind { kConstant, kHalfspace, kSublatticeParity };
  Kind kind_ = Kind::kConstant;
  int spin_ = 1;
  VecQ nu_;
  std::shared_ptr<const SublatticeBasis> basis_;
};

/// Spins on a finite box; exterior sites are valued by the rule only.
class SpinConfiguration {
 public:
  SpinConfiguration(Box box, std::vector<signed char> values, ExteriorRule exterior);
  static SpinConfiguration constant(Box box, int spin, ExteriorRule exterior);

  const Box& box() const { return box_; }
  const ExteriorRule& exterior_rule() const { return exterior_; }
  int value(const VecI& site) const;
  int boxed_value(long long flat) const { return values_[flat]; }
  bool constant_on_box() const;
  std::vector<VecI> plus_sites() const;

 private:
  Box box_;
  std::vector<signed char> values_;
  ExteriorRule exterior_;
};

struct SublatticeDecomposition {
  SublatticeBasis basis;
  Int index;                        // M
  std::vector<VecI> representatives;  // m_1 = 0
};

/// Homogeneous ferromagnetic pair interactions alpha_k >= 0, symmetric
/// (alpha_{-k} = alpha_k) with finite support not containing 0. Immutable.
class IsingSystem {
 public:
  explicit IsingSystem(int dimension) : dim_(dimension) {}

  /// Replaces alpha_k and alpha_{-k} by their average; the quadratic-form
  /// energy of every configuration is unchanged. Throws "not ferromagnetic"
  /// on negative input coefficients.
  static IsingSystem symmetrize(int dimension, const CoefficientMap& raw);
  /// Validates that the map is already symmetric and positive.
  static IsingSystem from_coefficients(int dimension, const CoefficientMap& coefficients);

  int dimension() const { return dim_; }
  const CoefficientMap& coefficients() const { return coeffs_; }
  std::vector<VecI> support() const;
  long long range_inf() const;  // max ||k||_inf over the support, 0 if empty
  int support_rank() const;

  /// phi(z) = 4 sum_k alpha_k |<z,k>|; exact on rational z, positively
  /// homogeneous of degree one.
  Rational surface_tension(const VecQ& z) const;
  double surface_tension(const VecD& z) const;

  GeneratingMeasure generating_measure() const;

  /// True iff the interaction support spans all of Z^d over Z.
  bool is_coercive() const;

  /// Span of the support ("sites connected to 0"), its index M and residue
  /// representatives. Throws std::domain_error if the support rank is < d.
  SublatticeDecomposition connectivity_sublattice() const;

  /// Sum over ordered pairs (i,j) with i or j in the configuration's box of
  /// alpha_{i-j} (u_i - u_j)^2, exterior values from the rule. Exact.
  Rational energy(const SpinConfiguration& u) const;

 private:
  int dim_;
  CoefficientMap coeffs_;
};

/// Pair interactions without the symmetry requirement; the energy of a
/// configuration counts ((u_i - u_j)^+)^2 with coefficient a_{i-j}, so the
/// two orientations of a disagreement are penalized independently.
class DirectedIsingSystem {
 public:
  explicit DirectedIsingSystem(int dimension) : dim_(dimension) {}
  static DirectedIsingSystem from_coefficients(int dimension, const CoefficientMap& coefficients);

  /// The energy-preserving embedding of a symmetric system: a_k = 2 alpha_k,
  /// since (u_i-u_j)^2 = ((u_i-u_j)^+)^2 + ((u_j-u_i)^+)^2. Every energy,
  /// minimal-interface value and Wulff shape of the embedded system
  /// coincides exactly with the undirected one.
  static DirectedIsingSystem from_symmetric(const IsingSystem& system);

  int dimension() const { return dim_; }
  const CoefficientMap& coefficients() const { return coeffs_; }
  std::vector<VecI> support() const;
  long long range_inf() const;

  /// phi(z) = 4 sum_k a_k <k,z>^+.
  Rational surface_tension(const VecQ& z) const;
  double surface_tension(const VecD& z) const;

  Rational energy(const SpinConfiguration& u) const;

 private:
  int dim_;
  CoefficientMap coeffs_;
};

/// Undirected quadratic-form energy of an arbitrary (possibly asymmetric)
/// coefficient map; symmetrize() leaves this invariant.
Rational pair_energy(int dimension, const CoefficientMap& coefficients,
                     const SpinConfiguration& u);

/// Exact per-direction-class aggregate equality: the two systems generate
/// the same rational zonoid iff sum_{k in I(nu)} alpha_k ||k|| agree for
/// every class, i.e. iff the split-exact measures coincide.
bool equivalent(const IsingSystem& a, const IsingSystem& b);

/// The finite-support system with all class mass on the primitive vector:
/// alpha_{±p} = s(p). Requires an exact measure.
IsingSystem canonical_system(const GeneratingMeasure& measure);

}  // namespace spinshape
