#ifndef PASYM_SHIFT_EXPANSION_HPP
#define PASYM_SHIFT_EXPANSION_HPP

#include "pasym/band.hpp"
#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym {

/// Per-shift constants feeding the omega envelopes and error budgets.
/// alpha_k = mu(k); sin(alpha_k) and cos(alpha_k) are bounded away from zero
/// for every k, which keeps C1_star and C2_star finite.
struct ShiftConstants {
  unsigned k;
  Real alpha_k;
  Real C1;
  Real C2;
  Real C1_star;
  Real C2_star;
  Real Ce;
  Real Co;
};

/// Coefficient omega_k(t) of n^{-t/2} in the p(n+k) expansion relative to
/// the prefactor e^{pi sqrt(2n/3)}/(4 n sqrt(3)).  The inner sum over
/// l = 0..floor((t+1)/2) is accumulated as exact rationals; powers of pi are
/// applied last.  Memoized per (k, t, bits).
Real omega1(unsigned k, unsigned t, const PrecisionContext& ctx);

ShiftConstants shift_constants(unsigned k, const PrecisionContext& ctx);

/// Envelope bound for |omega_k(2t+1)|, t >= 1.
Real omega_odd_envelope(unsigned k, unsigned t, const PrecisionContext& ctx);
/// Envelope bound for |omega_k(2t)|, t >= 1.
Real omega_even_envelope(unsigned k, unsigned t, const PrecisionContext& ctx);

/// Error constants and cutoff for the order-N truncation of the p(n+k)
/// expansion.  E_N1 = E_N1_e + E_N1_o bounds the coefficient tail; E_N_total
/// adds the Lehmer-remainder term (1 + 3.7 k/N)(6/(pi sqrt(24)))^{N+1}.
struct ShiftErrorBudget {
  unsigned k;
  unsigned N;
  Real E_N1_e;
  Real E_N1_o;
  Real E_N1;
  Real E_N_total;
  long cutoff_n;  // smallest admissible n
};

ShiftErrorBudget shift_error_budget(unsigned k, unsigned N, const PrecisionContext& ctx);

/// Certified band for p(n+k): prefactor e^{pi sqrt(2n/3)}/(4 n sqrt(3)),
/// center sum_{t<=N} omega_k(t) n^{-t/2}, radius E_N_total * n^{-(N+1)/2}.
/// Throws CutoffError for n below the budget's cutoff.
BoundedApprox shift_band(long n, unsigned k, unsigned N, const PrecisionContext& ctx);

}  // namespace pasym

#endif  // PASYM_SHIFT_EXPANSION_HPP
