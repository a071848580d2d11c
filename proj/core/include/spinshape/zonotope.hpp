#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "spinshape/measure.hpp"
#include "spinshape/vec.hpp"

namespace spinshape {

/// The centered body sum_i [-w_i, w_i]. Instantiated with Rational
/// generators (exact path: system-sourced measures, directed Wulff shapes)
/// or double generators (numeric path: free-standing measures).
template <class S>
struct ZonotopeT {
  int dim = 0;
  std::vector<std::vector<S>> generators;
};

using Zonotope = ZonotopeT<Rational>;
using ZonotopeD = ZonotopeT<double>;

template <class S>
ZonotopeT<S> make_zonotope(int dimension, std::vector<std::vector<S>> generators) {
  for (const auto& w : generators) {
    if (static_cast<int>(w.size()) != dimension)
      throw std::invalid_argument("generator dimension mismatch");
    bool nonzero = false;
    for (const S& c : w) nonzero |= !(c == S(0));
    if (!nonzero) throw std::invalid_argument("zero generator");
  }
  return ZonotopeT<S>{dimension, std::move(generators)};
}

template <class S>
S abs_value(const S& x) {
  return x < S(0) ? S(-x) : x;
}

/// f_W(z) = sum_i |<z, w_i>|.
template <class S>
S support_function(const ZonotopeT<S>& z, const std::vector<S>& dir) {
  if (static_cast<int>(dir.size()) != z.dim) throw std::invalid_argument("dimension mismatch");
  S f(0);
  for (const auto& w : z.generators) {
    S inner(0);
    for (int i = 0; i < z.dim; ++i) inner += dir[i] * w[i];
    f += abs_value(inner);
  }
  return f;
}

double support_function(const Zonotope& z, const VecD& dir);

namespace detail {

template <class S>
S det_recursive(std::vector<std::vector<S>>& m);

// |det| of the d x d matrix with the selected generators as rows.
template <class S>
S abs_det(const ZonotopeT<S>& z, const std::vector<int>& idx) {
  int d = z.dim;
  std::vector<std::vector<S>> m(d);
  for (int r = 0; r < d; ++r) m[r] = z.generators[idx[r]];
  S det = det_recursive(m);
  return abs_value(det);
}

template <class S>
S det_recursive(std::vector<std::vector<S>>& m) {
  // Fraction-free for rationals is unnecessary at these sizes (d <= 4ish).
  int d = static_cast<int>(m.size());
  if (d == 1) return m[0][0];
  if (d == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  S det(0);
  int sign = 1;
  for (int c = 0; c < d; ++c) {
    std::vector<std::vector<S>> minor;
    minor.reserve(d - 1);
    for (int r = 1; r < d; ++r) {
      std::vector<S> row;
      row.reserve(d - 1);
      for (int cc = 0; cc < d; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    S term = m[0][c] * det_recursive(minor);
    det += sign > 0 ? term : S(-term);
    sign = -sign;
  }
  return det;
}

}  // namespace detail

/// |W| = 2^d * sum over d-subsets of generators of |det|.
template <class S>
S volume(const ZonotopeT<S>& z) {
  int d = z.dim;
  int n = static_cast<int>(z.generators.size());
  if (n < d) return S(0);
  S total(0);
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    total += detail::abs_det(z, idx);
    int axis = d - 1;
    while (axis >= 0 && idx[axis] == n - d + axis) --axis;
    if (axis < 0) break;
    ++idx[axis];
    for (int i = axis + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  S scale(1);
  for (int i = 0; i < d; ++i) scale *= S(2);
  return scale * total;
}

bool non_degenerate(const Zonotope& z);
bool non_degenerate(const ZonotopeD& z, double tol = 1e-12);

ZonotopeD to_double(const Zonotope& z);

/// Exact construction from a system-sourced measure: generator 8*s*p per
/// class, so support_function(result, z) equals the measure's support
/// (and the source system's surface tension) exactly on rational z.
Zonotope zonotope_from_measure(const GeneratingMeasure& m);

/// Works for any measure: generator 2*lambda*p/||p|| per class.
ZonotopeD zonotope_from_measure_numeric(const GeneratingMeasure& m);

/// Per-class aggregation of ||w_i||/2 over parallel generators. Exact and
/// total for rational generators (a rational vector always has a rational
/// direction).
GeneratingMeasure measure_from_zonotope(const Zonotope& z);

/// Rationalizes each generator direction by continued fractions; throws
/// std::invalid_argument("not a rational zonotope") when a direction has no
/// rational representative within the bound/tolerance.
GeneratingMeasure measure_from_zonotope(const ZonotopeD& z, long long max_denominator = 1000000,
                                        double tol = 1e-9);

}  // namespace spinshape
