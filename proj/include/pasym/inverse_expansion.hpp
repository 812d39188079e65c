#ifndef PASYM_INVERSE_EXPANSION_HPP
#define PASYM_INVERSE_EXPANSION_HPP

#include <utility>

#include "pasym/band.hpp"
#include "pasym/partition_table.hpp"
#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym {

/// The nine auxiliary sums S_1(t)..S_9(t) entering the 1/p(n) coefficient
/// closed forms.  Inner terms (Pochhammers, factorials, binomials with
/// half-integer upper index) are exact rationals; powers of alpha = pi/6 are
/// applied at the end.  Empty summation ranges give 0.
Real S_sum(unsigned j, unsigned t, const PrecisionContext& ctx);

// Taylor coefficient families of T1(n) = exp(-mu(n) + pi sqrt(2n/3)) and
// T2(n) = (1 - 1/(24n)) (1 - 1/mu(n))^{-1}:
//   T1 = sum E1(t) n^{-t} + sum O1(t) n^{-t-1/2},   similarly T2 with E2, O2.
Real coeff_E1(unsigned t, const PrecisionContext& ctx);
Real coeff_O1(unsigned t, const PrecisionContext& ctx);
Real coeff_e2(unsigned t, const PrecisionContext& ctx);
Real coeff_o2(unsigned t, const PrecisionContext& ctx);
Real coeff_E2(unsigned t, const PrecisionContext& ctx);
Real coeff_O2(unsigned t, const PrecisionContext& ctx);

/// The four closed-form families: g_e(t) = g_e1(t) + g_e2(t) collects the
/// even-power coefficients, g_o(t) = g_o1(t) + g_o2(t) the odd ones.
struct GParts {
  Real g_e1;
  Real g_e2;
  Real g_o1;
  Real g_o2;
};
GParts g_parts(unsigned t, const PrecisionContext& ctx);

/// g(t): coefficient of n^{-t/2} in the 1/p(n) expansion relative to
/// 4 n sqrt(3) e^{-pi sqrt(2n/3)}.  g(2t) = g_e(t), g(2t+1) = g_o(t).
/// Memoized per (t, bits).
Real g_coeff(unsigned t, const PrecisionContext& ctx);

/// Same coefficient via the Cauchy product of the (E1,O1) and (E2,O2)
/// families; an algebraically independent route used for cross-checks.
Real g_coeff_convolution(unsigned t, const PrecisionContext& ctx);

/// Envelope bounds: |g(2t)| < even, |g(2t+1)| < odd, for t >= 1.
std::pair<Real, Real> g_envelopes(unsigned t, const PrecisionContext& ctx);

struct InverseErrorBudget {
  unsigned N;
  Real E2_N2;
  Real E2_Ne;
  Real E2_No;
  Real E2_N;  // = E2_Ne + E2_No + E2_N2
};
InverseErrorBudget inverse_error_budget(unsigned N, const PrecisionContext& ctx);

/// Smallest integer strictly greater than ghat(N+1).
long inverse_cutoff(unsigned N, const PrecisionContext& ctx);

/// Certified band for 1/p(n): prefactor 4 n sqrt(3) e^{-pi sqrt(2n/3)},
/// center sum_{t<=N} g(t) n^{-t/2}, radius E2_N * n^{-(N+1)/2}.
BoundedApprox inverse_band(long n, unsigned N, const PrecisionContext& ctx);

/// Checks the Lehmer-style enclosure
///   |p(n)(24n-1)/(sqrt(12) e^{mu(n)}) - (1 - 1/mu(n))| <= mu(n)^{-m}
/// with a certified comparison.  Requires m >= 2 and n > ghat(m);
/// (n, m) = (6, 2) is excluded by the theorem and raises ExclusionError.
CheckResult lehmer_band_check(const PartitionTable& table, long n, unsigned m,
                              const PrecisionContext& ctx);

}  // namespace pasym

#endif  // PASYM_INVERSE_EXPANSION_HPP
