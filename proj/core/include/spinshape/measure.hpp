#pragma once

#include <map>
#include <vector>

#include "spinshape/lattice.hpp"
#include "spinshape/vec.hpp"

namespace spinshape {

/// One symmetric atom pair lambda * (delta_nu + delta_{-nu}) with
/// nu = p/||p|| for the primitive direction p.
///
/// Weights sourced from Ising systems are kept in split-exact form: the
/// rational s with lambda = 4 * s * ||p||, so that the support function
/// contribution is the exact rational 8 * s * |<z,p>| and equivalence of
/// systems is decidable exactly. Free-standing measures (e.g. parsed from a
/// file or produced by quadrature) carry only the floating weight.
struct MeasureClass {
  DirectionClass direction;
  bool exact = false;
  Rational s = 0;       // valid iff exact
  double lambda = 0.0;  // always valid; equals 4*s*||p|| when exact
};

class GeneratingMeasure {
 public:
  GeneratingMeasure() = default;
  explicit GeneratingMeasure(int dimension) : dim_(dimension) {}

  static GeneratingMeasure from_exact_classes(int dimension,
                                              const std::map<DirectionClass, Rational>& s_by_class);
  static GeneratingMeasure from_weights(int dimension,
                                        const std::map<DirectionClass, double>& lambda_by_class);

  int dimension() const { return dim_; }
  const std::vector<MeasureClass>& classes() const { return classes_; }
  bool empty() const { return classes_.empty(); }
  bool all_exact() const;

  /// f(z) = sum over classes of 2*lambda*|<z,nu>| = sum of 8*s*|<z,p>|.
  Rational support(const VecQ& z) const;  // requires all_exact()
  double support(const VecD& z) const;

  /// Exact equality of the class->s maps; requires both measures exact.
  friend bool operator==(const GeneratingMeasure& a, const GeneratingMeasure& b);

 private:
  int dim_ = 0;
  std::vector<MeasureClass> classes_;  // sorted by direction, weights > 0
};

}  // namespace spinshape
