#include "pasym/inverse_expansion.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/rational.hpp"

namespace pasym {

namespace {

// ---------------------------------------------------------------------------
// Shared inner sums.  Everything downstream (S_1..S_9, the T1/T2 coefficient
// families, o2) is a short combination of these three:
//   inner_a(s) = sum_{u=1}^{s} (-1)^u (-s)_u / ((s+u)! (2u-1)!) alpha^{2u}
//   inner_b(s) = sum_{u=0}^{s} (-1)^u (-s)_u / ((s+u+1)! (2u)!) alpha^{2u}
//   chain_u(m) = sum_{r=0}^{m} (-alpha^{-2})^r C(-(2r+1)/2, m-r)
// The rational parts are carried exactly; the alpha powers are applied per
// term at working precision.
// ---------------------------------------------------------------------------

std::mutex g_cache_mutex;

Real inner_a_impl(unsigned s, unsigned bits) {
  Real a2 = alpha(bits) * alpha(bits);
  Real sum = Real::zero(bits);
  Real a_pow = Real::one(bits);
  // q_u = (-1)^u (-s)_u/((s+u)!(2u-1)!); all terms positive.
  mpq_class q(mpz_class(s), factorial(s + 1));  // u = 1
  for (unsigned u = 1; u <= s; ++u) {
    a_pow *= a2;
    sum += to_real(q, bits) * a_pow;
    // q_{u+1}/q_u = (s-u) / ((s+u+1)(2u+1)(2u))
    q *= mpq_class(mpz_class(s - u), mpz_class(s + u + 1) * (2 * u + 1) * (2 * u));
  }
  return sum;
}

Real inner_b_impl(unsigned s, unsigned bits) {
  Real a2 = alpha(bits) * alpha(bits);
  Real sum = Real::zero(bits);
  Real a_pow = Real::one(bits);
  mpq_class q(1, factorial(s + 1));  // u = 0
  for (unsigned u = 0; u <= s; ++u) {
    sum += to_real(q, bits) * a_pow;
    a_pow *= a2;
    // q_{u+1}/q_u = (s-u) / ((s+u+2)(2u+2)(2u+1))
    q *= mpq_class(mpz_class(s - u), mpz_class(s + u + 2) * (2 * u + 2) * (2 * u + 1));
  }
  return sum;
}

Real chain_u_impl(unsigned m, unsigned bits) {
  Real inv_a2 = 36 / (pi(bits) * pi(bits));
  Real sum = Real::zero(bits);
  Real pow = Real::one(bits);  // (-1/alpha^2)^r
  for (unsigned r = 0; r <= m; ++r) {
    sum += pow * to_real(gen_binomial(mpq_class(-(2 * static_cast<long>(r) + 1), 2), m - r), bits);
    pow *= -inv_a2;
  }
  return sum;
}

template <typename F>
Real cached(std::map<std::pair<unsigned, unsigned>, Real>& cache, unsigned key, unsigned bits,
            F&& compute) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find({key, bits});
    if (it != cache.end()) return it->second;
  }
  // compute outside the lock: the compute paths recurse into other caches
  Real value = compute();
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cache.emplace(std::make_pair(key, bits), std::move(value)).first->second;
}

Real inner_a(unsigned s, unsigned bits) {
  static std::map<std::pair<unsigned, unsigned>, Real> cache;
  return cached(cache, s, bits, [&] { return inner_a_impl(s, bits); });
}

Real inner_b(unsigned s, unsigned bits) {
  static std::map<std::pair<unsigned, unsigned>, Real> cache;
  return cached(cache, s, bits, [&] { return inner_b_impl(s, bits); });
}

Real chain_u(unsigned m, unsigned bits) {
  static std::map<std::pair<unsigned, unsigned>, Real> cache;
  return cached(cache, m, bits, [&] { return chain_u_impl(m, bits); });
}

// (1/2 - s)_{s+1}, exact.
mpq_class poch_half(unsigned s, unsigned len) {
  return pochhammer(mpq_class(1, 2) - static_cast<long>(s), len);
}

mpq_class pow_24(unsigned t, bool negate_odd) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 24, t);
  mpq_class q(1, p);
  if (negate_odd && t % 2 == 1) q = -q;
  return q;
}

// ---------------------------------------------------------------------------
// The nine sums.
// ---------------------------------------------------------------------------

Real S1_impl(unsigned t, unsigned bits) {
  if (t < 1) return Real::zero(bits);
  mpq_class pre = pow_24(t, true) * poch_half(t, t + 1) / static_cast<long>(t);
  return to_real(pre, bits) * inner_a(t, bits);
}

Real S2_impl(unsigned t, unsigned bits) {
  Real sum = Real::zero(bits);
  if (t < 3) return sum;
  Real a2 = alpha(bits) * alpha(bits);
  Real base = -1 / (1 + 1 / a2);  // (-(1+alpha^-2))^{-1}
  Real pow = Real::one(bits);
  for (unsigned s = 1; s + 2 <= t; ++s) {
    pow *= base;
    mpq_class pre = poch_half(s, s + 1) / static_cast<long>(s);
    sum += pow * to_real(pre, bits) * inner_a(s, bits);
  }
  return sum;
}

Real S3_impl(unsigned t, unsigned bits) {
  Real sum = Real::zero(bits);
  if (t < 2) return sum;
  for (unsigned s = 0; s + 2 <= t; ++s)
    sum += to_real(poch_half(s, s + 1), bits) * inner_b(s, bits) * chain_u(t - s - 1, bits);
  if (t % 2 == 0) sum = -sum;  // (-1)^{t-1}
  return sum;
}

Real S4_impl(unsigned t, unsigned bits) {
  Real sum = Real::zero(bits);
  if (t < 2) return sum;
  for (unsigned s = 0; s + 2 <= t; ++s) {
    unsigned m = t - s;  // >= 2
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 4, m);
    denom *= 2 * m - 3;
    mpq_class pre = poch_half(s, s + 1) * binomial(2 * m - 3, m - 1) / mpq_class(denom);
    if (s % 2 == 1) pre = -pre;
    sum += to_real(pre, bits) * inner_b(s, bits);
  }
  return sum;
}

Real S5_impl(unsigned t, unsigned bits) {
  if (t < 1) return Real::zero(bits);
  mpq_class pre = pochhammer(mpq_class(3, 2) - static_cast<long>(t), t);
  if (t % 2 == 0) pre = -pre;  // (-1)^{t-1}
  return to_real(pre, bits) * inner_b(t - 1, bits);
}

Real S6_impl(unsigned t, unsigned bits) {
  Real u = chain_u(t, bits);
  return t % 2 == 0 ? u : -u;
}

Real S7_impl(unsigned t, unsigned bits) {
  Real sum = Real::zero(bits);
  if (t < 2) return sum;
  for (unsigned s = 1; s + 1 <= t; ++s) {
    mpq_class pre = poch_half(s, s + 1) / static_cast<long>(s);
    sum += to_real(pre, bits) * inner_a(s, bits) * chain_u(t - s, bits);
  }
  return t % 2 == 0 ? sum : -sum;  // (-1)^t
}

Real S8_impl(unsigned t, unsigned bits) {
  Real sum = Real::zero(bits);
  if (t < 2) return sum;
  for (unsigned s = 1; s + 1 <= t; ++s) {
    unsigned m = t - s;  // >= 1
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 4, m);
    denom *= static_cast<unsigned long>(s) * (2 * m - 1);
    mpq_class pre = poch_half(s, s + 1) * binomial(2 * m - 1, m) / mpq_class(denom);
    if (s % 2 == 1) pre = -pre;
    sum += to_real(pre, bits) * inner_a(s, bits);
  }
  return sum;
}

Real S9_impl(unsigned t, unsigned bits) {
  Real sum = Real::zero(bits);
  if (t < 2) return sum;
  Real a2 = alpha(bits) * alpha(bits);
  Real base = -1 / (1 + 1 / a2);
  Real pow = Real::one(bits);
  for (unsigned s = 0; s + 2 <= t; ++s) {
    sum += pow * to_real(poch_half(s, s + 1), bits) * inner_b(s, bits);
    pow *= base;
  }
  return sum;
}

}  // namespace

Real S_sum(unsigned j, unsigned t, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  switch (j) {
    case 1: return S1_impl(t, bits);
    case 2: return S2_impl(t, bits);
    case 3: return S3_impl(t, bits);
    case 4: return S4_impl(t, bits);
    case 5: return S5_impl(t, bits);
    case 6: return S6_impl(t, bits);
    case 7: return S7_impl(t, bits);
    case 8: return S8_impl(t, bits);
    case 9: return S9_impl(t, bits);
    default: throw DomainError("S_sum: j must be in 1..9");
  }
}

// ---------------------------------------------------------------------------
// T1 / T2 coefficient families.
// ---------------------------------------------------------------------------

Real coeff_E1(unsigned t, const PrecisionContext& ctx) {
  if (t == 0) return Real::one(ctx.bits);
  return S1_impl(t, ctx.bits);
}

Real coeff_O1(unsigned t, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  mpq_class pre = pow_24(t, true) * poch_half(t, t + 1);
  return pi(bits) / (12 * sqrt(Real::from_long(6, bits))) * to_real(pre, bits) *
         inner_b(t, bits);
}

Real coeff_e2(unsigned t, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  if (t == 0) return Real::one(bits);
  Real p2 = pi(bits) * pi(bits);
  Real base = (1 + 36 / p2) / 24;  // (1 + alpha^-2)/24
  return 36 / (p2 + 36) * pow_si(base, static_cast<long>(t));
}

Real coeff_o2(unsigned t, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  mpq_class pre = pow_24(t, true);
  return 6 / (pi(bits) * sqrt(Real::from_long(24, bits))) * to_real(pre, bits) *
         chain_u(t, bits);
}

Real coeff_E2(unsigned t, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  Real p2 = pi(bits) * pi(bits);
  if (t == 0) return Real::one(bits);
  if (t == 1) return (36 - p2) / (24 * p2);
  Real base = (1 + 36 / p2) / 24;
  return 54 / (p2 * p2 * (1 + 36 / p2)) * pow_si(base, static_cast<long>(t) - 1);
}

Real coeff_O2(unsigned t, const PrecisionContext& ctx) {
  if (t == 0) return coeff_o2(0, ctx);
  return coeff_o2(t, ctx) - coeff_o2(t - 1, ctx) / 24;
}

// ---------------------------------------------------------------------------
// g families and g(t).
// ---------------------------------------------------------------------------

GParts g_parts(unsigned t, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  Real p = pi(bits);
  Real p2 = p * p;
  Real a2 = alpha(bits) * alpha(bits);
  Real sqrt6 = sqrt(Real::from_long(6, bits));

  Real ge1 = Real::zero(bits);
  if (t == 0) {
    ge1 = Real::one(bits);
  } else if (t == 1) {
    ge1 = (p2 * p2 - 288 * p2 + 10368) / (6912 * p2);
  } else {
    Real ratio = (1 + 1 / a2) / 24;
    ge1 = S1_impl(t, bits) + 3 * (1 - a2) / (2 * p2) * S1_impl(t - 1, bits) +
          3 / (2 * p2 * (1 + a2)) * pow_si(ratio, static_cast<long>(t) - 1) *
              (1 + S2_impl(t, bits));
  }

  Real ge2 = Real::zero(bits);
  if (t >= 1) {
    mpq_class inv24t = pow_24(t, false);
    ge2 = to_real(inv24t, bits) *
          (S3_impl(t, bits) / (1 + a2) - 8 / (1 + 1 / a2) * S4_impl(t, bits) +
           S5_impl(t, bits));
  }

  Real go1 = Real::zero(bits);
  if (t == 0) {
    go1 = sqrt6 / (2 * p);
  } else if (t == 1) {
    // the denominator 2304 is forced by the convolution identity (see tests)
    go1 = (p2 * p2 - 144 * p2 + 10368) / (2304 * sqrt6 * p2 * p);
  } else {
    mpq_class inv24t = pow_24(t, false);
    mpz_class p96;
    mpz_ui_pow_ui(p96.get_mpz_t(), 96, t);
    mpq_class central(binomial(2 * t - 1, t), mpz_class(2 * t - 1) * p96);
    go1 = sqrt6 / (2 * p) *
          (S1_impl(t, bits) + to_real(inv24t, bits) / (1 + a2) * (S6_impl(t, bits) + S7_impl(t, bits)) -
           2 / (1 + 1 / a2) * to_real(central, bits) -
           2 * a2 / (1 + a2) * to_real(inv24t, bits) * S8_impl(t, bits));
  }

  Real go2 = Real::zero(bits);
  if (t == 0) {
    go2 = p / (24 * sqrt6);
  } else {
    mpq_class inv24t = pow_24(t, false);
    go2 = p / (12 * sqrt6) * to_real(inv24t, bits) *
          (pow_si(1 + 1 / a2, static_cast<long>(t)) / ((1 + a2) * (1 + a2)) * S9_impl(t, bits) +
           (1 - a2) / a2 * S5_impl(t, bits) + S5_impl(t + 1, bits));
  }

  return GParts{std::move(ge1), std::move(ge2), std::move(go1), std::move(go2)};
}

Real g_coeff(unsigned t, const PrecisionContext& ctx) {
  static std::map<std::pair<unsigned, unsigned>, Real> cache;
  return cached(cache, t, ctx.bits, [&] {
    GParts parts = g_parts(t / 2, ctx);  // (t-1)/2 == t/2 for odd t
    return t % 2 == 0 ? parts.g_e1 + parts.g_e2 : parts.g_o1 + parts.g_o2;
  });
}

Real g_coeff_convolution(unsigned t, const PrecisionContext& ctx) {
  Real sum = Real::zero(ctx.bits);
  for (unsigned i = 0; i <= t; ++i) {
    unsigned j = t - i;
    Real t1 = i % 2 == 0 ? coeff_E1(i / 2, ctx) : coeff_O1((i - 1) / 2, ctx);
    Real t2 = j % 2 == 0 ? coeff_E2(j / 2, ctx) : coeff_O2((j - 1) / 2, ctx);
    sum += t1 * t2;
  }
  return sum;
}

namespace {

// Envelope constants for |g(2t)| and |g(2t+1)|.
Real env_C1(unsigned bits) {
  Real a2 = alpha(bits) * alpha(bits);
  Real s = sqrt(1 + a2);
  Real p2 = pi(bits) * pi(bits);
  return 3 * (cosh(s - 1) + sinh(s - 1)) / (2 * p2 * (1 + a2));
}

Real env_C2(unsigned bits) {
  Real a2 = alpha(bits) * alpha(bits);
  Real s = sqrt(1 + a2);
  return sqrt(Real::from_long(3, bits) / 2) / pi(bits) * (cosh(s - 1) + sinh(s - 1)) /
         (sqrt(1 + a2) * (1 + a2));
}

Real env_ratio(unsigned bits) {
  Real a2 = alpha(bits) * alpha(bits);
  return (1 + a2) / (24 * a2);
}

}  // namespace

std::pair<Real, Real> g_envelopes(unsigned t, const PrecisionContext& ctx) {
  if (t < 1) throw DomainError("g_envelopes: t must be >= 1");
  const unsigned bits = ctx.bits;
  Real tt = Real::from_unsigned(t, bits);
  Real even = env_C1(bits) * pow_si(env_ratio(bits), static_cast<long>(t) - 1) *
              (1 + Real::from_string("3.5", bits) / tt);
  Real odd = env_C2(bits) * pow_si(env_ratio(bits), static_cast<long>(t)) *
             (1 + Real::from_string("0.5", bits) / tt);
  return {std::move(even), std::move(odd)};
}

InverseErrorBudget inverse_error_budget(unsigned N, const PrecisionContext& ctx) {
  if (N < 1) throw DomainError("inverse_error_budget: N must be >= 1");
  const unsigned bits = ctx.bits;
  Real NN = Real::from_unsigned(N, bits);
  Real e22 = pow_si(6 / (pi(bits) * sqrt(Real::from_long(24, bits))), static_cast<long>(N) + 1) *
             (1 + 4 / NN);
  Real half = Real::from_long(1, bits) / 2;
  Real e2e = env_C1(bits) * pow(env_ratio(bits), (NN - 1) * half) * (1 + 8 / NN);
  Real e2o = env_C2(bits) * pow(env_ratio(bits), NN * half) * (1 + 3 / NN);
  Real total = e2e + e2o + e22;
  return InverseErrorBudget{N, std::move(e22), std::move(e2e), std::move(e2o), std::move(total)};
}

long inverse_cutoff(unsigned N, const PrecisionContext& ctx) {
  return certified_next_integer_above(
      [N](unsigned b) { return g_hat(static_cast<long>(N) + 1, b); }, ctx);
}

BoundedApprox inverse_band(long n, unsigned N, const PrecisionContext& ctx) {
  long cutoff = inverse_cutoff(N, ctx);
  if (n < cutoff)
    throw CutoffError("inverse_band: n below cutoff " + std::to_string(cutoff));
  const unsigned bits = ctx.bits;
  InverseErrorBudget budget = inverse_error_budget(N, ctx);
  Real nn = Real::from_long(n, bits);
  Real prefactor = 4 * nn * sqrt(Real::from_long(3, bits)) * exp(-(pi(bits) * sqrt(2 * nn / 3)));
  Real inv_sqrt_n = 1 / sqrt(nn);
  Real center = Real::zero(bits);
  Real x = Real::one(bits);
  for (unsigned t = 0; t <= N; ++t) {
    center += g_coeff(t, ctx) * x;
    x *= inv_sqrt_n;
  }
  Real radius = budget.E2_N * x;
  return BoundedApprox{std::move(prefactor), std::move(center), std::move(radius)};
}

CheckResult lehmer_band_check(const PartitionTable& table, long n, unsigned m,
                              const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("lehmer_band_check: m must be >= 2");
  if (n == 6 && m == 2)
    throw ExclusionError("lehmer_band_check: (n, m) = (6, 2) is excluded");
  long cutoff = certified_next_integer_above(
      [m](unsigned b) { return g_hat(static_cast<long>(m), b); }, ctx);
  if (n < cutoff)
    throw CutoffError("lehmer_band_check: n below cutoff " + std::to_string(cutoff));
  if (static_cast<std::size_t>(n) > table.n_max())
    throw SizingError("lehmer_band_check: oracle table too small", static_cast<std::size_t>(n));

  const mpz_class& pn = table.at(static_cast<std::size_t>(n));
  return certify_leq(
      [n, m, &pn](unsigned bits) {
        Real mun = mu(n, bits);
        Real lhs = abs(to_real(pn, bits) * (24 * n - 1) /
                           (sqrt(Real::from_long(12, bits)) * exp(mun)) -
                       (1 - 1 / mun));
        Real rhs = pow_si(mun, -static_cast<long>(m));
        return std::make_pair(std::move(lhs), std::move(rhs));
      },
      ctx);
}

}  // namespace pasym
