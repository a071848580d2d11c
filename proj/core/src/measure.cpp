#include "spinshape/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace spinshape {

GeneratingMeasure GeneratingMeasure::from_exact_classes(
    int dimension, const std::map<DirectionClass, Rational>& s_by_class) {
  GeneratingMeasure m(dimension);
  for (const auto& [cls, s] : s_by_class) {
    if (s < 0) throw std::invalid_argument("negative measure weight");
    if (s == 0) continue;
    if (static_cast<int>(cls.primitive.size()) != dimension)
      throw std::invalid_argument("direction dimension mismatch");
    MeasureClass c;
    c.direction = cls;
    c.exact = true;
    c.s = s;
    c.lambda = 4.0 * to_double(s) * norm2(cls.primitive);
    m.classes_.push_back(std::move(c));
  }
  return m;
}

GeneratingMeasure GeneratingMeasure::from_weights(
    int dimension, const std::map<DirectionClass, double>& lambda_by_class) {
  GeneratingMeasure m(dimension);
  for (const auto& [cls, lambda] : lambda_by_class) {
    if (lambda < 0) throw std::invalid_argument("negative measure weight");
    if (lambda == 0) continue;
    if (static_cast<int>(cls.primitive.size()) != dimension)
      throw std::invalid_argument("direction dimension mismatch");
    MeasureClass c;
    c.direction = cls;
    c.exact = false;
    c.lambda = lambda;
    m.classes_.push_back(std::move(c));
  }
  return m;
}

bool GeneratingMeasure::all_exact() const {
  for (const MeasureClass& c : classes_)
    if (!c.exact) return false;
  return true;
}

Rational GeneratingMeasure::support(const VecQ& z) const {
  if (!all_exact()) throw std::domain_error("support: measure has non-exact weights");
  Rational f = 0;
  for (const MeasureClass& c : classes_) f += 8 * c.s * abs(dot(z, c.direction.primitive));
  return f;
}

double GeneratingMeasure::support(const VecD& z) const {
  double f = 0;
  for (const MeasureClass& c : classes_) {
    double coef = c.exact ? 8.0 * to_double(c.s) : 2.0 * c.lambda / norm2(c.direction.primitive);
    f += coef * std::abs(dot(z, c.direction.primitive));
  }
  return f;
}

bool operator==(const GeneratingMeasure& a, const GeneratingMeasure& b) {
  if (a.dim_ != b.dim_ || a.classes_.size() != b.classes_.size()) return false;
  for (std::size_t i = 0; i < a.classes_.size(); ++i) {
    const MeasureClass& x = a.classes_[i];
    const MeasureClass& y = b.classes_[i];
    if (!(x.direction == y.direction)) return false;
    if (x.exact && y.exact) {
      if (x.s != y.s) return false;
    } else {
      if (x.lambda != y.lambda) return false;
    }
  }
  return true;
}

}  // namespace spinshape
