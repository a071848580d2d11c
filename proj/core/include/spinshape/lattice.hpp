#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinshape/rational.hpp"
#include "spinshape/vec.hpp"

namespace spinshape {

/// The unordered pair {v, -v} of a rational direction, keyed by its primitive
/// integer representative: gcd of the components is 1 and the first nonzero
/// component is positive.
struct DirectionClass {
  VecI primitive;

  friend bool operator==(const DirectionClass& a, const DirectionClass& b) {
    return a.primitive == b.primitive;
  }
  friend bool operator<(const DirectionClass& a, const DirectionClass& b) {
    return a.primitive < b.primitive;
  }
};

/// Splits a nonzero lattice vector as k = ±multiplier * primitive with
/// multiplier = gcd(|k_i|) > 0. Throws std::invalid_argument on k = 0.
std::pair<DirectionClass, long long> primitive_direction(const VecI& k);

/// Integer span of a set of lattice vectors, held as a column Hermite normal
/// form: columns in echelon order with positive pivots, entries left of a
/// pivot reduced into [0, pivot). Exact arbitrary-precision arithmetic
/// throughout; the basis generates exactly the Z-span of the inputs.
class SublatticeBasis {
 public:
  static SublatticeBasis from_generators(int dimension, const std::vector<VecI>& generators);

  int dimension() const { return dim_; }
  int rank() const { return static_cast<int>(cols_.size()); }
  const std::vector<std::vector<Int>>& columns() const { return cols_; }
  const std::vector<int>& pivot_rows() const { return pivots_; }

  /// |det| of the full-rank basis; nullopt when rank < dimension
  /// (index of the sublattice in Z^d is infinite).
  std::optional<Int> index() const;

  bool contains(const VecI& v) const;

  /// Canonical representative of v modulo the span: pivot-row coordinates
  /// reduced into [0, pivot), other coordinates adjusted accordingly.
  /// Two vectors are equivalent iff their representatives coincide.
  std::vector<Int> reduce(const VecI& v) const;

  /// All M = index representatives, lexicographically ordered with the zero
  /// vector first. Requires rank == dimension; throws std::domain_error
  /// ("degenerate sublattice") otherwise, std::runtime_error if M > cap.
  std::vector<VecI> residue_classes(long long cap = 1 << 20) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<Int>> cols_;
  std::vector<int> pivots_;
};

std::optional<Int> lattice_index(int dimension, const std::vector<VecI>& generators);

/// True iff the generators span all of Z^d over Z (index 1).
bool spans_full_lattice(int dimension, const std::vector<VecI>& generators);

}  // namespace spinshape
