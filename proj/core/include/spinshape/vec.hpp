#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "spinshape/rational.hpp"

namespace spinshape {

// All vectors in one computation share the runtime dimension d >= 1.
using VecI = std::vector<long long>;  // lattice offsets and sites
using VecQ = std::vector<Rational>;   // exact rational points/directions
using VecD = std::vector<double>;

inline long long dot(const VecI& a, const VecI& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double dot(const VecD& a, const VecD& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const VecQ& a, const VecI& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

inline Rational dot(const VecQ& a, const VecQ& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double dot(const VecD& a, const VecI& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<double>(b[i]);
  return s;
}

inline VecI add(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecI sub(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecI negate(const VecI& a) {
  VecI r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const VecI& a) {
  for (long long c : a)
    if (c != 0) return false;
  return true;
}

inline long long norm1(const VecI& a) {
  long long s = 0;
  for (long long c : a) s += c < 0 ? -c : c;
  return s;
}

inline long long norm_inf(const VecI& a) {
  long long m = 0;
  for (long long c : a) m = std::max(m, c < 0 ? -c : c);
  return m;
}

inline double norm2(const VecD& a) { return std::sqrt(dot(a, a)); }

inline double norm2(const VecI& a) {
  double s = 0;
  for (long long c : a) s += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(s);
}

inline VecD to_vecd(const VecI& a) {
  VecD r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<double>(a[i]);
  return r;
}

inline VecD to_vecd(const VecQ& a) {
  VecD r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = to_double(a[i]);
  return r;
}

inline VecQ to_vecq(const VecI& a) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
  return r;
}

inline VecD normalized(const VecD& a) {
  double n = norm2(a);
  VecD r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / n;
  return r;
}

}  // namespace spinshape
