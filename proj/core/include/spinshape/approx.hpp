#pragma once

#include <functional>

#include "spinshape/measure.hpp"

namespace spinshape {

struct ZonoidApproxOptions {
  int check_directions = 3600;    // sup-error sample size
  bool coercive_padding = false;  // force mass on the coordinate classes
};

struct ZonoidApproxResult {
  GeneratingMeasure measure;
  double sup_error = 0;  // max |f_approx - f_target| over the checked directions
  int checked_directions = 0;
};

/// All primitive integer directions with max-norm <= bound (canonical sign).
std::vector<DirectionClass> primitive_directions(int dimension, long long bound);

/// Nearest-direction transport of the target's atoms onto the primitive
/// directions of max-norm <= denominator_bound. Throws infeasible_error
/// ("increase denominator_bound") when the reported sup-error is not < eta.
ZonoidApproxResult approximate_zonoid(const GeneratingMeasure& target, double eta,
                                      long long denominator_bound,
                                      const ZonoidApproxOptions& options = {});

/// Same contract for a support-function oracle: nonnegative least-squares
/// fit of the class weights against sampled values of the oracle.
ZonoidApproxResult approximate_zonoid(const std::function<double(const VecD&)>& support,
                                      int dimension, double eta, long long denominator_bound,
                                      const ZonoidApproxOptions& options = {});

}  // namespace spinshape
