#ifndef PASYM_TEST_HELPERS_HPP
#define PASYM_TEST_HELPERS_HPP

#include <string>

#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym_test {

inline pasym::PrecisionContext ctx256() { return pasym::PrecisionContext::with_bits(256); }

// |a - b| <= 10^-exponent
inline bool near_abs(const pasym::Real& a, const pasym::Real& b, long exponent) {
  pasym::Real tol =
      pow_si(pasym::Real::from_long(10, a.precision()), -exponent);
  return abs(a - b) <= tol;
}

// |a - b| <= 2^-rel_bits * max(|a|,|b|)
inline bool near_rel(const pasym::Real& a, const pasym::Real& b, long rel_bits) {
  pasym::Real scale = max(abs(a), abs(b));
  return abs(a - b) <= scale.mul_2si(-rel_bits);
}

inline bool near_str(const pasym::Real& a, const std::string& decimal, long exponent) {
  return near_abs(a, pasym::Real::from_string(decimal, a.precision()), exponent);
}

}  // namespace pasym_test

#endif
