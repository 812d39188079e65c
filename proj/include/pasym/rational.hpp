#ifndef PASYM_RATIONAL_HPP
#define PASYM_RATIONAL_HPP

#include <gmpxx.h>

#include "pasym/real.hpp"

namespace pasym {

/// Rising factorial (a)_j = a(a+1)...(a+j-1), exact; (a)_0 = 1.
mpq_class pochhammer(const mpq_class& a, unsigned long j);

/// Generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j! for
/// rational a, via the Pochhammer product formula C(a,j) = (-1)^j (-a)_j / j!.
mpq_class gen_binomial(const mpq_class& a, unsigned long j);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

/// Integer ceil(sqrt(k)), exact.
unsigned long ceil_sqrt(unsigned long k);

inline Real to_real(const mpq_class& q, mpfr_prec_t prec) { return Real::from_mpq(q, prec); }
inline Real to_real(const mpz_class& z, mpfr_prec_t prec) { return Real::from_mpz(z, prec); }

}  // namespace pasym

#endif  // PASYM_RATIONAL_HPP
