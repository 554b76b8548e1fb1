#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace clifftwist {

// Exact arithmetic everywhere: arbitrary-precision rationals, always kept in
// lowest terms with positive denominator by the backing type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace clifftwist
