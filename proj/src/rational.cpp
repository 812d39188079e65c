#include "pasym/rational.hpp"

namespace pasym {

mpq_class pochhammer(const mpq_class& a, unsigned long j) {
  mpq_class r(1);
  mpq_class f = a;
  for (unsigned long i = 0; i < j; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

mpq_class gen_binomial(const mpq_class& a, unsigned long j) {
  mpq_class r = pochhammer(-a, j);
  if (j % 2 == 1) r = -r;
  mpz_class jf = factorial(j);
  return r / mpq_class(jf);
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

unsigned long ceil_sqrt(unsigned long k) {
  mpz_class z(static_cast<unsigned long>(k));
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  unsigned long r = root.get_ui();
  return r * r == k ? r : r + 1;
}

}  // namespace pasym
