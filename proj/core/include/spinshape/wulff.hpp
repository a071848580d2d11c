#pragma once

#include <functional>
#include <utility>

#include "spinshape/ising.hpp"
#include "spinshape/polygon.hpp"
#include "spinshape/zonotope.hpp"

namespace spinshape {

/// Intersection of the half-planes {w : <nu_j, w> <= phi(nu_j)} over
/// n_halfplanes uniformly sampled unit directions. Converges to the Wulff
/// shape W_phi in Hausdorff distance for Lipschitz phi > 0. Throws
/// std::domain_error ("degenerate Wulff shape; restrict to a subspace")
/// when phi <= 0 on a sampled direction.
PolygonD wulff_shape_2d(const std::function<double(const VecD&)>& phi, int n_halfplanes);

/// Wulff shape of a directed system: the Minkowski sum of the segments
/// [0, 4 a_k k], returned as the centered zonotope with generators 2 a_k k
/// plus the translation sum_k 2 a_k k. The support function of the
/// translated body is the directed surface tension.
std::pair<Zonotope, VecQ> directed_wulff(const DirectedIsingSystem& system);

/// Support-function estimate of the Hausdorff distance of two convex bodies:
/// max over sampled unit directions of |f_A - f_B|. The sample always
/// includes both bodies' generator directions and their normals (d = 2 also
/// polygon vertex directions), which makes the estimate exact for zonogons;
/// it is monotone under sample refinement.
double hausdorff_distance(const ZonotopeD& a, const ZonotopeD& b, int n_samples);
double hausdorff_distance(const Zonotope& a, const Zonotope& b, int n_samples);
double hausdorff_distance(const PolygonD& a, const PolygonD& b, int n_samples);

/// n quasi-uniform unit directions: the roots of unity for d = 2, a fixed
/// deterministically seeded Gaussian sample for d >= 3.
std::vector<VecD> unit_direction_sample(int dimension, int n);

}  // namespace spinshape
