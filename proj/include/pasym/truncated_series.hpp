#ifndef PASYM_TRUNCATED_SERIES_HPP
#define PASYM_TRUNCATED_SERIES_HPP

#include <gmpxx.h>

#include <vector>

#include "pasym/real.hpp"

namespace pasym {

/// Finite expansion sum_{t=0..M} a_t x^t in x = n^{-1/2}, with
/// high-precision coefficients.  Arithmetic is exact modulo x^{M+1}.
class TruncatedSeries {
 public:
  TruncatedSeries(unsigned order, unsigned bits);

  static TruncatedSeries constant(const Real& c, unsigned order);
  /// Monomial c * x^k.
  static TruncatedSeries monomial(const Real& c, unsigned k, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  unsigned bits() const { return bits_; }
  const Real& coeff(unsigned t) const;
  void set_coeff(unsigned t, const Real& v);

  TruncatedSeries truncated(unsigned new_order) const;
  /// Divide by x^s; requires the first s coefficients to be exactly zero.
  TruncatedSeries shifted_down(unsigned s) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const Real& s) const;

 private:
  unsigned bits_;
  std::vector<Real> coeffs_;
};

/// exp(S) = sum_{j<=M} S^j / j!; requires S(0) = 0 exactly (valuation >= 1
/// makes the sum finite).
TruncatedSeries exp_series(const TruncatedSeries& s);

/// S^r = sum_j C(r,j) (S-1)^j for rational r; requires S(0) = 1 exactly.
TruncatedSeries binomial_pow(const TruncatedSeries& s, const mpq_class& r);

/// Independent oracle for the shift coefficients omega_k(t): the Taylor
/// expansion in x = n^{-1/2} of
///   [sqrt(12) e^{mu(n+k)} / (24(n+k)-1)] (1 - 1/mu(n+k))
/// relative to the prefactor e^{pi sqrt(2n/3)} / (4 n sqrt(3)),
/// built only from exp_series and binomial_pow.
TruncatedSeries shift_ratio_series(unsigned k, unsigned order, unsigned bits);

/// Independent oracle for the inverse coefficients g(t): the expansion of
///   exp(-(mu(n) - pi sqrt(2n/3))) (1 - 1/(24n)) (1 - 1/mu(n))^{-1}.
TruncatedSeries inverse_ratio_series(unsigned order, unsigned bits);

}  // namespace pasym

#endif  // PASYM_TRUNCATED_SERIES_HPP
