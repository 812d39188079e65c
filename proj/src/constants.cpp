#include "pasym/constants.hpp"

#include "pasym/errors.hpp"

namespace pasym {

Real growth_rate(unsigned bits) {
  return Real::pi(bits) * sqrt(Real::from_long(2, bits) / 3);
}

Real b_sub(unsigned bits) {
  Real p = Real::pi(bits);
  return Real::from_long(6, bits) / sqrt(36 + p * p);
}

Real mu(long n, unsigned bits) {
  if (n < 1) throw DomainError("mu: n must be >= 1");
  return alpha(bits) * sqrt(Real::from_long(24 * n - 1, bits));
}

Real nu(long m, unsigned bits) {
  if (m < 2) throw DomainError("nu: m must be >= 2");
  Real lm = log(Real::from_long(m, bits));
  Real llm = log(lm);
  return 2 * log(Real::from_long(6, bits)) + 2 * log(Real::from_long(2, bits)) * m +
         2 * m * lm + 2 * m * llm + 5 * m * llm / lm;
}

Real g_hat(long m, unsigned bits) {
  Real v = nu(m, bits);
  Real p = Real::pi(bits);
  return ((36 / (p * p)) * v * v + 1) / 24;
}

}  // namespace pasym
