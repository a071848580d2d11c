#include "spinshape/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spinshape {

std::pair<DirectionClass, long long> primitive_direction(const VecI& k) {
  if (is_zero(k)) throw std::invalid_argument("not a direction: zero vector");
  long long g = 0;
  for (long long c : k) g = std::gcd(g, c < 0 ? -c : c);
  VecI p(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) p[i] = k[i] / g;
  for (long long c : p) {
    if (c != 0) {
      if (c < 0) p = negate(p);
      break;
    }
  }
  return {DirectionClass{std::move(p)}, g};
}

namespace {

// Column operations on a d x m integer matrix, columns stored as vectors.
using Col = std::vector<Int>;

void negate_col(Col& c) {
  for (Int& x : c) x = -x;
}

}  // namespace

SublatticeBasis SublatticeBasis::from_generators(int dimension,
                                                 const std::vector<VecI>& generators) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<Col> m;
  for (const VecI& g : generators) {
    if (static_cast<int>(g.size()) != dimension)
      throw std::invalid_argument("generator dimension mismatch");
    if (is_zero(g)) continue;
    Col c(dimension);
    for (int i = 0; i < dimension; ++i) c[i] = g[i];
    m.push_back(std::move(c));
  }

  SublatticeBasis basis;
  basis.dim_ = dimension;

  std::size_t j = 0;
  for (int r = 0; r < dimension && j < m.size(); ++r) {
    std::size_t l = j;
    while (l < m.size() && m[l][r] == 0) ++l;
    if (l == m.size()) continue;
    std::swap(m[j], m[l]);
    // Zero out row r in all later columns with gcd column combinations.
    for (std::size_t c = j + 1; c < m.size(); ++c) {
      while (m[c][r] != 0) {
        Int q = floor_div(m[j][r], m[c][r]);
        for (int i = 0; i < dimension; ++i) m[j][i] -= q * m[c][i];
        std::swap(m[j], m[c]);
      }
    }
    if (m[j][r] < 0) negate_col(m[j]);
    // Reduce row r of earlier columns into [0, pivot).
    for (std::size_t c = 0; c < j; ++c) {
      Int q = floor_div(m[c][r], m[j][r]);
      if (q != 0)
        for (int i = 0; i < dimension; ++i) m[c][i] -= q * m[j][i];
    }
    basis.pivots_.push_back(r);
    ++j;
  }
  m.resize(j);
  basis.cols_ = std::move(m);
  return basis;
}

std::optional<Int> SublatticeBasis::index() const {
  if (rank() < dim_) return std::nullopt;
  Int det = 1;
  for (int j = 0; j < rank(); ++j) det *= cols_[j][pivots_[j]];
  return det;
}

std::vector<Int> SublatticeBasis::reduce(const VecI& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<Int> x(dim_);
  for (int i = 0; i < dim_; ++i) x[i] = v[i];
  for (int j = 0; j < rank(); ++j) {
    int r = pivots_[j];
    Int q = floor_div(x[r], cols_[j][r]);
    if (q != 0)
      for (int i = 0; i < dim_; ++i) x[i] -= q * cols_[j][i];
  }
  return x;
}

bool SublatticeBasis::contains(const VecI& v) const {
  for (const Int& c : reduce(v))
    if (c != 0) return false;
  return true;
}

std::vector<VecI> SublatticeBasis::residue_classes(long long cap) const {
  if (rank() < dim_) throw std::domain_error("degenerate sublattice");
  Int m = *index();
  if (m > cap) throw std::runtime_error("sublattice index too large to enumerate");

  std::vector<long long> radix(dim_);
  for (int j = 0; j < dim_; ++j) radix[j] = cols_[j][pivots_[j]].convert_to<long long>();

  std::vector<VecI> reps;
  reps.reserve(m.convert_to<std::size_t>());
  VecI cur(dim_, 0);
  // Mixed-radix enumeration of the fundamental box, lexicographic order.
  while (true) {
    reps.push_back(cur);
    int axis = dim_ - 1;
    while (axis >= 0) {
      if (++cur[axis] < radix[axis]) break;
      cur[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return reps;
}

std::optional<Int> lattice_index(int dimension, const std::vector<VecI>& generators) {
  return SublatticeBasis::from_generators(dimension, generators).index();
}

bool spans_full_lattice(int dimension, const std::vector<VecI>& generators) {
  auto idx = lattice_index(dimension, generators);
  return idx.has_value() && *idx == 1;
}

}  // namespace spinshape
