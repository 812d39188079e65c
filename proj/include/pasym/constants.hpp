#ifndef PASYM_CONSTANTS_HPP
#define PASYM_CONSTANTS_HPP

#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym {

// Fundamental constants, all evaluated fresh at the requested precision.

inline Real pi(unsigned bits) { return Real::pi(bits); }

/// alpha = pi/6.
inline Real alpha(unsigned bits) { return Real::pi(bits) / 6; }

/// pi * sqrt(2/3), the exponent growth rate in the leading factor.
Real growth_rate(unsigned bits);

/// b = 6/sqrt(36 + pi^2), the rationalizing substitution parameter.
Real b_sub(unsigned bits);

/// mu(n) = (pi/6) sqrt(24n - 1), n >= 1.
Real mu(long n, unsigned bits);

/// nu(m) = 2log6 + (2log2)m + 2m log m + 2m loglog m + 5m loglog m / log m,
/// m >= 2 (loglog 2 < 0 is fine).
Real nu(long m, unsigned bits);

/// ghat(m) = ((36/pi^2) nu(m)^2 + 1)/24, m >= 2.
Real g_hat(long m, unsigned bits);

// ctx-level conveniences
inline Real mu(long n, const PrecisionContext& ctx) { return mu(n, ctx.bits); }
inline Real nu(long m, const PrecisionContext& ctx) { return nu(m, ctx.bits); }
inline Real g_hat(long m, const PrecisionContext& ctx) { return g_hat(m, ctx.bits); }

}  // namespace pasym

#endif  // PASYM_CONSTANTS_HPP
