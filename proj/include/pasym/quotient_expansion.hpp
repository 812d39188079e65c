#ifndef PASYM_QUOTIENT_EXPANSION_HPP
#define PASYM_QUOTIENT_EXPANSION_HPP

#include <vector>

#include "pasym/band.hpp"
#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym {

/// Coefficient c_k(m) of n^{-m/2} in p(n+k)/p(n): the Cauchy product
/// c_k(m) = sum_{s<=m} omega_k(s) g(m-s).  c_k(0) = 1, c_k(1) = k pi/sqrt(6).
Real c_coeff(unsigned k, unsigned m, const PrecisionContext& ctx);

/// The four error pieces of the quotient theorem and their sum, plus the
/// integer cutoff n_N(k) = max{ floor(ghat(N+1))+1, (24k-1)^2 }.
struct QuotientErrorBudget {
  unsigned k;
  unsigned N;
  Real E_N1;     // bounds the product-remainder cross term
  Real E_N2;     // E_N^[1](k) (1 + 1/N)
  Real E_N3;     // E_N^[2] (1 + ... / N)
  Real E_N4;     // truncated-convolution tail, two pieces combined
  Real E_N_total;
  long cutoff;
};

QuotientErrorBudget quotient_error_budget(unsigned k, unsigned N, const PrecisionContext& ctx);

/// Certified band for p(n+k)/p(n): prefactor 1, center
/// sum_{m<=N} c_k(m) n^{-m/2}, radius E_N(k) n^{-(N+1)/2}.  Admissible for
/// n >= cutoff.
BoundedApprox ratio_band(long n, unsigned k, unsigned N, const PrecisionContext& ctx);

enum class ExpansionKind { ratio, shift, inverse };

/// The certified artifact of one expansion: coefficients 0..N, the error
/// constant multiplying n^{-(N+1)/2}, and the integer cutoff.
struct ExpansionTable {
  ExpansionKind kind;
  unsigned k;  // ignored for inverse
  unsigned N;
  std::vector<Real> coefficients;
  Real error_constant;
  long cutoff;
};

ExpansionTable make_expansion_table(ExpansionKind kind, unsigned k, unsigned N,
                                    const PrecisionContext& ctx);

}  // namespace pasym

#endif  // PASYM_QUOTIENT_EXPANSION_HPP
