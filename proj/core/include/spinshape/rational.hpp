#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spinshape {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a request is well-formed but cannot be satisfied
/// (e.g. an approximation tolerance unreachable with the given bound).
/// Validation problems use std::invalid_argument / std::domain_error.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

/// Parses "p/q", an integer, or a finite decimal ("-3", "1/3", "0.25") into
/// an exact rational.
Rational rational_from_string(const std::string& text);

/// "p/q" if q != 1, otherwise "p".
std::string rational_to_string(const Rational& r);

Int floor_div(const Int& a, const Int& b);

}  // namespace spinshape
