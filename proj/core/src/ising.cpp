#include "spinshape/ising.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinshape {

bool Box::contains(const VecI& site) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (site[i] < lo[i] || site[i] > hi[i]) return false;
  return true;
}

long long Box::site_count() const {
  long long n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) n *= hi[i] - lo[i] + 1;
  return n;
}

long long Box::flat_index(const VecI& site) const {
  long long idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    idx = idx * (hi[i] - lo[i] + 1) + (site[i] - lo[i]);
  return idx;
}

VecI Box::site_at(long long flat) const {
  VecI site(lo.size());
  for (std::size_t i = lo.size(); i-- > 0;) {
    long long extent = hi[i] - lo[i] + 1;
    site[i] = lo[i] + flat % extent;
    flat /= extent;
  }
  return site;
}

Box Box::centered(int dimension, long long radius) {
  return Box{VecI(dimension, -radius), VecI(dimension, radius)};
}

ExteriorRule ExteriorRule::constant(int spin) {
  if (spin != 1 && spin != -1) throw std::invalid_argument("spin must be +1 or -1");
  ExteriorRule r;
  r.kind_ = Kind::kConstant;
  r.spin_ = spin;
  return r;
}

ExteriorRule ExteriorRule::halfspace(VecQ nu) {
  bool nonzero = false;
  for (const Rational& c : nu) nonzero |= c != 0;
  if (!nonzero) throw std::invalid_argument("halfspace rule needs a nonzero normal");
  ExteriorRule r;
  r.kind_ = Kind::kHalfspace;
  r.nu_ = std::move(nu);
  return r;
}

ExteriorRule ExteriorRule::sublattice_parity(SublatticeBasis basis) {
  ExteriorRule r;
  r.kind_ = Kind::kSublatticeParity;
  r.basis_ = std::make_shared<const SublatticeBasis>(std::move(basis));
  return r;
}

int ExteriorRule::value(const VecI& site) const {
  switch (kind_) {
    case Kind::kConstant:
      return spin_;
    case Kind::kHalfspace:
      return dot(nu_, site) >= 0 ? 1 : -1;
    case Kind::kSublatticeParity: {
      Int p = 0;
      for (const Int& c : basis_->reduce(site)) p += abs(c);
      return (p % 2) == 0 ? 1 : -1;
    }
  }
  return 1;
}

SpinConfiguration::SpinConfiguration(Box box, std::vector<signed char> values,
                                     ExteriorRule exterior)
    : box_(std::move(box)), values_(std::move(values)), exterior_(std::move(exterior)) {
  if (static_cast<long long>(values_.size()) != box_.site_count())
    throw std::invalid_argument("configuration values do not cover the box");
  for (signed char v : values_)
    if (v != 1 && v != -1) throw std::invalid_argument("spins must be +1 or -1");
}

SpinConfiguration SpinConfiguration::constant(Box box, int spin, ExteriorRule exterior) {
  std::vector<signed char> values(box.site_count(), static_cast<signed char>(spin));
  return SpinConfiguration(std::move(box), std::move(values), std::move(exterior));
}

int SpinConfiguration::value(const VecI& site) const {
  if (box_.contains(site)) return values_[box_.flat_index(site)];
  return exterior_.value(site);
}

bool SpinConfiguration::constant_on_box() const {
  for (signed char v : values_)
    if (v != values_[0]) return false;
  return true;
}

std::vector<VecI> SpinConfiguration::plus_sites() const {
  std::vector<VecI> sites;
  for (long long f = 0; f < static_cast<long long>(values_.size()); ++f)
    if (values_[f] == 1) sites.push_back(box_.site_at(f));
  return sites;
}

namespace {

void check_coefficients(int dimension, const CoefficientMap& map, bool require_nonnegative) {
  for (const auto& [k, a] : map) {
    if (static_cast<int>(k.size()) != dimension)
      throw std::invalid_argument("coefficient key dimension mismatch");
    if (is_zero(k)) throw std::invalid_argument("coefficient at k = 0 is not allowed");
    if (require_nonnegative && a < 0) throw std::invalid_argument("not ferromagnetic");
  }
}

std::vector<VecI> map_support(const CoefficientMap& map) {
  std::vector<VecI> keys;
  keys.reserve(map.size());
  for (const auto& [k, a] : map) keys.push_back(k);
  return keys;
}

long long map_range_inf(const CoefficientMap& map) {
  long long r = 0;
  for (const auto& [k, a] : map) r = std::max(r, norm_inf(k));
  return r;
}

}  // namespace

IsingSystem IsingSystem::symmetrize(int dimension, const CoefficientMap& raw) {
  check_coefficients(dimension, raw, true);
  IsingSystem sys(dimension);
  for (const auto& [k, a] : raw) {
    VecI mk = negate(k);
    auto other = raw.find(mk);
    Rational avg = (a + (other == raw.end() ? Rational(0) : other->second)) / 2;
    if (avg == 0) continue;
    sys.coeffs_[k] = avg;
    sys.coeffs_[mk] = avg;
  }
  return sys;
}

IsingSystem IsingSystem::from_coefficients(int dimension, const CoefficientMap& coefficients) {
  check_coefficients(dimension, coefficients, true);
  IsingSystem sys(dimension);
  for (const auto& [k, a] : coefficients) {
    if (a == 0) continue;
    auto other = coefficients.find(negate(k));
    if (other == coefficients.end() || other->second != a)
      throw std::invalid_argument("coefficients are not symmetric; use symmetrize()");
    sys.coeffs_[k] = a;
  }
  return sys;
}

std::vector<VecI> IsingSystem::support() const { return map_support(coeffs_); }

long long IsingSystem::range_inf() const { return map_range_inf(coeffs_); }

int IsingSystem::support_rank() const {
  return SublatticeBasis::from_generators(dim_, support()).rank();
}

Rational IsingSystem::surface_tension(const VecQ& z) const {
  if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  Rational sum = 0;
  for (const auto& [k, a] : coeffs_) sum += a * abs(dot(z, k));
  return 4 * sum;
}

double IsingSystem::surface_tension(const VecD& z) const {
  if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  double sum = 0;
  for (const auto& [k, a] : coeffs_) sum += to_double(a) * std::abs(dot(z, k));
  return 4 * sum;
}

GeneratingMeasure IsingSystem::generating_measure() const {
  // s(p) = sum_{n>=1} n * alpha_{np}, accumulated over the positive ray only;
  // the symmetric twin -k contributes through its own class membership.
  std::map<DirectionClass, Rational> s;
  for (const auto& [k, a] : coeffs_) {
    auto [cls, mult] = primitive_direction(k);
    VecI rep = cls.primitive;
    bool positive_ray = true;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != mult * rep[i]) {
        positive_ray = false;
        break;
      }
    if (positive_ray) s[cls] += Rational(mult) * a;
  }
  return GeneratingMeasure::from_exact_classes(dim_, s);
}

bool IsingSystem::is_coercive() const { return spans_full_lattice(dim_, support()); }

SublatticeDecomposition IsingSystem::connectivity_sublattice() const {
  SublatticeBasis basis = SublatticeBasis::from_generators(dim_, support());
  if (basis.rank() < dim_)
    throw std::domain_error("degenerate system: interaction support has rank < d");
  Int index = *basis.index();
  std::vector<VecI> reps = basis.residue_classes();
  return SublatticeDecomposition{std::move(basis), std::move(index), std::move(reps)};
}

namespace {

// Sum over ordered pairs (i,j) with i or j in the box. Pairs with both
// endpoints inside appear once for each endpoint's loop iteration; pairs with
// one endpoint outside are counted for both orders via the explicit factor.
template <class TermFn>
Rational boxed_pair_sum(int /*dimension*/, const CoefficientMap& coeffs,
                        const SpinConfiguration& u, TermFn term) {
  const Box& box = u.box();
  Rational total = 0;
  long long n = box.site_count();
  for (long long f = 0; f < n; ++f) {
    VecI i = box.site_at(f);
    int ui = u.boxed_value(f);
    for (const auto& [k, a] : coeffs) {
      if (a == 0) continue;
      VecI jm = sub(i, k);  // ordered pair (i, i-k) carries coefficient a_k
      int ujm = u.value(jm);
      total += a * term(ui, ujm);
      VecI jp = add(i, k);  // ordered pair (i+k, i) also carries a_k
      if (!box.contains(jp)) total += a * term(u.value(jp), ui);
    }
  }
  return total;
}

Rational square_term(int x, int y) {
  int d = x - y;
  return Rational(d * d);
}

Rational positive_square_term(int x, int y) {
  int d = x - y;
  return d > 0 ? Rational(d * d) : Rational(0);
}

}  // namespace

Rational IsingSystem::energy(const SpinConfiguration& u) const {
  if (u.box().dimension() != dim_) throw std::invalid_argument("dimension mismatch");
  return boxed_pair_sum(dim_, coeffs_, u, square_term);
}

Rational pair_energy(int dimension, const CoefficientMap& coefficients,
                     const SpinConfiguration& u) {
  check_coefficients(dimension, coefficients, false);
  return boxed_pair_sum(dimension, coefficients, u, square_term);
}

DirectedIsingSystem DirectedIsingSystem::from_coefficients(int dimension,
                                                           const CoefficientMap& coefficients) {
  check_coefficients(dimension, coefficients, true);
  DirectedIsingSystem sys(dimension);
  for (const auto& [k, a] : coefficients)
    if (a != 0) sys.coeffs_[k] = a;
  return sys;
}

DirectedIsingSystem DirectedIsingSystem::from_symmetric(const IsingSystem& system) {
  DirectedIsingSystem sys(system.dimension());
  for (const auto& [k, a] : system.coefficients()) sys.coeffs_[k] = 2 * a;
  return sys;
}

std::vector<VecI> DirectedIsingSystem::support() const { return map_support(coeffs_); }

long long DirectedIsingSystem::range_inf() const { return map_range_inf(coeffs_); }

Rational DirectedIsingSystem::surface_tension(const VecQ& z) const {
  if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  Rational sum = 0;
  for (const auto& [k, a] : coeffs_) {
    Rational inner = dot(z, k);
    if (inner > 0) sum += a * inner;
  }
  return 4 * sum;
}

double DirectedIsingSystem::surface_tension(const VecD& z) const {
  if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  double sum = 0;
  for (const auto& [k, a] : coeffs_) {
    double inner = dot(z, k);
    if (inner > 0) sum += to_double(a) * inner;
  }
  return 4 * sum;
}

Rational DirectedIsingSystem::energy(const SpinConfiguration& u) const {
  if (u.box().dimension() != dim_) throw std::invalid_argument("dimension mismatch");
  return boxed_pair_sum(dim_, coeffs_, u, positive_square_term);
}

bool equivalent(const IsingSystem& a, const IsingSystem& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("cannot compare systems of different dimension");
  return a.generating_measure() == b.generating_measure();
}

IsingSystem canonical_system(const GeneratingMeasure& measure) {
  if (!measure.all_exact())
    throw std::invalid_argument("canonical_system needs an exact (system-sourced) measure");
  CoefficientMap coeffs;
  for (const MeasureClass& c : measure.classes()) {
    coeffs[c.direction.primitive] = c.s;
    coeffs[negate(c.direction.primitive)] = c.s;
  }
  return IsingSystem::from_coefficients(measure.dimension(), coeffs);
}

}  // namespace spinshape
