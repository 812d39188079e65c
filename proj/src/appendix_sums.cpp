#include "pasym/appendix_sums.hpp"

#include <utility>

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/inverse_expansion.hpp"
#include "pasym/rational.hpp"

namespace pasym {

namespace {

mpq_class poch_half_neg(long s, unsigned len) {
  return pochhammer(mpq_class(1, 2) - s, len);
}

// sum_{i=1}^{nn} (b-1)^i (b+1)^i (1/2-i)_i / ((2i-1) i!)
Real chain_bb(const Real& b, unsigned nn, unsigned bits) {
  Real bb = (b - 1) * (b + 1);
  Real pow = Real::one(bits);
  Real sum = Real::zero(bits);
  for (unsigned i = 1; i <= nn; ++i) {
    pow *= bb;
    mpq_class r = poch_half_neg(i, i) / mpq_class(mpz_class(2 * i - 1) * factorial(i));
    sum += pow * to_real(r, bits);
  }
  return sum;
}

// sum_{i=1}^{u} (b-1)^i (b+1)^{-i} (-t)_i / (i+t)!   (ratio < 0, alternating)
Real chain_ratio(const Real& b, bool minus_over_plus, unsigned t, unsigned u, unsigned bits) {
  Real base = minus_over_plus ? (b - 1) / (b + 1) : (b + 1) / (b - 1);
  Real pow = Real::one(bits);
  Real sum = Real::zero(bits);
  for (unsigned i = 1; i <= u; ++i) {
    pow *= base;
    mpq_class r = pochhammer(mpq_class(-static_cast<long>(t)), i) / mpq_class(factorial(i + t));
    sum += pow * to_real(r, bits);
  }
  return sum;
}

void require_tu(unsigned t, unsigned u, unsigned u_min) {
  if (t < 2 || u < u_min || u + 2 > t)
    throw RangeError("appendix inner sum: need t >= 2 and " + std::to_string(u_min) +
                     " <= u <= t-2");
}

// The closed forms cancel catastrophically: individual terms grow like
// (1/|b-1|)^{t+u} ~ 2^{3.2(t+u)} while the value stays small.  Evaluating
// with this much extra precision keeps the returned value accurate at the
// caller's precision.
unsigned headroom_bits(unsigned base, unsigned t, unsigned u) {
  return base + 4 * (t + u) + 96;
}

}  // namespace

Real t_tilde_direct(unsigned t, unsigned u, const PrecisionContext& ctx) {
  require_tu(t, u, 1);
  const unsigned bits = headroom_bits(ctx.bits, t, u);
  Real b = b_sub(bits);
  Real base = b * b - 1;
  Real pow = pow_si(base, static_cast<long>(u));
  Real sum = Real::zero(bits);
  for (unsigned s = 0; s + u + 2 <= t; ++s) {
    mpq_class r = pochhammer(mpq_class(-static_cast<long>(s + u)), u) *
                  poch_half_neg(s + u, 1 + s + u) /
                  mpq_class(mpz_class(s + u) * factorial(s + 2 * u));
    sum += pow * to_real(r, bits);
    pow *= base;
  }
  return sum;
}

Real t_tilde_closed(unsigned t, unsigned u, const PrecisionContext& ctx) {
  require_tu(t, u, 1);
  const unsigned bits = headroom_bits(ctx.bits, t, u);
  Real b = b_sub(bits);
  Real bm = b - 1;
  Real bp = b + 1;
  long tl = static_cast<long>(t);
  long ul = static_cast<long>(u);
  Real p12t = to_real(poch_half_neg(tl, t), bits);
  mpz_class tfact = factorial(t);
  Real A = bp * pow_si(bm, 2 * ul) + bm * pow_si(bp, 2 * ul);

  Real term1 = A / (4 * b * ul * pow_si(bm * bp, ul));
  Real term2 = -A * pow_si(bm * bp, tl - ul) * p12t / (4 * b * ul * to_real(tfact, bits));
  mpq_class rat3 = pochhammer(mpq_class(-tl), u) * (tl - ul);
  rat3 /= mpq_class(mpz_class(mpz_class(2) * (tl - 1) * tl * (2 * tl - 1) * ul) * factorial(t + u));
  Real term3 = (bm * bp * (tl - 1) * (2 * tl - 1) + Real::from_long(2 * tl * ul + 2 * ul * ul, bits)) *
               pow_si(bm * bp, tl - 1) * p12t * to_real(rat3, bits);
  Real term4 = -pow_si(bm, tl - ul) * pow_si(bp, tl + ul) * p12t / (2 * ul) *
               chain_ratio(b, true, t, u, bits);
  Real term5 = (pow_si(bp, 2 * ul) - pow_si(bm, 2 * ul)) / pow_si(bm * bp, ul) / (4 * b * ul) *
               chain_bb(b, t, bits);
  Real term6 = -pow_si(bm, tl + ul) * pow_si(bp, tl - ul) * p12t / (2 * ul) *
               chain_ratio(b, false, t, u, bits);
  return term1 + term2 + term3 + term4 + term5 + term6;
}

Real t_prime_closed(unsigned t, unsigned u, const PrecisionContext& ctx) {
  require_tu(t, u, 0);
  const unsigned bits = headroom_bits(ctx.bits, t, u);
  Real b = b_sub(bits);
  Real bm = b - 1;
  Real bp = b + 1;
  long tl = static_cast<long>(t);
  long ul = static_cast<long>(u);
  Real p12t = to_real(poch_half_neg(tl, t), bits);
  Real A = pow_si(bm, 2 * ul) + pow_si(bp, 2 * ul);
  long odd = 2 * ul + 1;

  Real term1 = A / (2 * odd * pow_si(bm * bp, tl + ul - 1));
  Real term2 = -A * pow_si(bm * bp, 1 - ul) * p12t / (2 * odd * to_real(factorial(t), bits));
  mpq_class rat3 = pochhammer(mpq_class(-tl), u) * (tl - ul);
  rat3 /= mpq_class(mpz_class(mpz_class(tl) * (2 * tl - 1) * odd) * factorial(t + u));
  Real term3 = (2 * b * b * tl - b * b - Real::from_long(2 * tl - 2 * ul - 2, bits)) *
               p12t * to_real(rat3, bits);
  Real term4 = (A - b * pow_si(bm, 2 * ul) + b * pow_si(bp, 2 * ul)) /
               (2 * odd * pow_si(bm * bp, tl + ul)) * chain_bb(b, t, bits);
  Real term5 = -b * pow_si(bp, ul + 1) * p12t / (odd * pow_si(bm, ul)) *
               chain_ratio(b, true, t, u, bits);
  Real term6 = -b * pow_si(bm, ul + 1) * p12t / (odd * pow_si(bp, ul)) *
               chain_ratio(b, false, t, u, bits);
  return term1 + term2 + term3 + term4 + term5 + term6;
}

Real t_prime_direct(unsigned t, unsigned u, const PrecisionContext& ctx) {
  require_tu(t, u, 0);
  const unsigned bits = headroom_bits(ctx.bits, t, u);
  Real b = b_sub(bits);
  Real rbase = b * b / (1 - b * b);
  Real sum = Real::zero(bits);
  for (unsigned s = 0; s + u + 2 <= t; ++s) {
    mpq_class pre = pochhammer(mpq_class(-static_cast<long>(s + u)), u) *
                    poch_half_neg(s + u, 1 + s + u) / mpq_class(factorial(1 + s + 2 * u));
    Real rsum = Real::zero(bits);
    Real rpow = Real::one(bits);
    for (unsigned r = 0; r + u + s + 1 <= t; ++r) {
      rsum += rpow *
              to_real(gen_binomial(mpq_class(-(2 * static_cast<long>(r) + 1), 2), t - u - s - r - 1),
                      bits);
      rpow *= -rbase;
    }
    sum += to_real(pre, bits) * rsum;
  }
  return sum;
}

Real s3_via_closed(unsigned t, const PrecisionContext& ctx) {
  if (t < 2) throw RangeError("s3_via_closed: t must be >= 2");
  const unsigned bits = headroom_bits(ctx.bits, t, t);
  Real b = b_sub(bits);
  Real base = -(1 - b * b) / (b * b);  // (-1)^u alpha^{2u}
  Real pow = Real::one(bits);
  Real sum = Real::zero(bits);
  for (unsigned u = 0; u + 2 <= t; ++u) {
    sum += pow * to_real(mpq_class(1, factorial(2 * u)), bits) * t_prime_closed(t, u, ctx);
    pow *= base;
  }
  // the (-1)^{t-1} prefactor of the original definition carries over
  if (t % 2 == 0) sum = -sum;
  return sum;
}

Real s2_via_closed(unsigned t, const PrecisionContext& ctx) {
  if (t < 2) throw RangeError("s2_via_closed: t must be >= 2");
  const unsigned bits = headroom_bits(ctx.bits, t, t);
  Real b = b_sub(bits);
  Real base = -(1 - b * b) / (b * b);
  Real pow = Real::one(bits);
  Real sum = Real::zero(bits);
  for (unsigned u = 1; u + 2 <= t; ++u) {
    pow *= base;
    sum += pow * to_real(mpq_class(1, factorial(2 * u - 1)), bits) * t_tilde_closed(t, u, ctx);
  }
  return sum;
}

std::vector<FactCase> fact_checks(const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits;
  std::vector<FactCase> out;
  Real a2 = alpha(bits) * alpha(bits);
  Real ratio = a2 / (1 + a2);

  bool ok = true;
  for (unsigned t = 2; t <= 500; ++t) {
    Real lhs = pow_si(ratio, static_cast<long>(t) - 1) / sqrt(Real::from_unsigned(t, bits));
    Real rhs = Real::one(bits) / (2 * static_cast<long>(t));
    if (!(lhs <= rhs)) ok = false;
  }
  out.push_back({"geometric_vs_sqrt_t", ok});

  ok = true;
  for (unsigned t = 0; t <= 60; ++t) {
    mpq_class lhs = pochhammer(mpq_class(1, 2) - static_cast<long>(t), t);
    if (t % 2 == 1) lhs = -lhs;
    mpz_class four_t;
    mpz_ui_pow_ui(four_t.get_mpz_t(), 4, t);
    mpq_class rhs(binomial(2 * t, t) * factorial(t), four_t);
    rhs.canonicalize();
    if (lhs != rhs) ok = false;
  }
  out.push_back({"half_pochhammer_central_binomial", ok});

  ok = true;
  Real x = ratio;
  Real exact = 1 - sqrt(1 - x);
  for (unsigned t = 2; t <= 60; ++t) {
    Real partial = Real::zero(bits);
    Real xq = Real::one(bits);
    for (unsigned m = 1; m <= t; ++m) {
      xq *= x / 4;
      partial += to_real(mpq_class(binomial(2 * m, m), mpz_class(2 * m - 1)), bits) * xq;
    }
    // tail bound via C(2s,s) <= 4^s/sqrt(pi s) and 2s-1 >= 2t for s > t
    Real tt = Real::from_unsigned(t, bits);
    Real bound = pow_si(x, static_cast<long>(t) + 1) /
                 ((1 - x) * 2 * tt * sqrt(pi(bits) * tt));
    if (!(abs(exact - partial) <= bound)) ok = false;
  }
  out.push_back({"sqrt_series_tail", ok});
  return out;
}

S2SplitResult s2_split_check(unsigned t, const PrecisionContext& ctx) {
  if (t < 2) throw RangeError("s2_split_check: t must be >= 2");
  const unsigned bits = ctx.bits;
  Real a2 = alpha(bits) * alpha(bits);
  Real ratio = a2 / (1 + a2);
  Real sq = sqrt(1 + a2);
  Real sq_m = sq - 1;
  Real sq_p = sq + 1;
  long tl = static_cast<long>(t);

  mpq_class p12t_q = poch_half_neg(tl, t);
  Real p12t = to_real(p12t_q, bits);
  Real sign_t = Real::from_long(t % 2 == 0 ? 1 : -1, bits);  // (-1)^t

  // part 1
  Real part1 = Real::zero(bits);
  {
    Real a_pow = Real::one(bits);
    Real inner = Real::zero(bits);
    for (unsigned u = 1; u + 2 <= t; ++u) {
      a_pow *= a2;
      mpq_class r = pochhammer(mpq_class(-tl), u) / mpq_class(factorial(t + u) * factorial(2 * u));
      if (u % 2 == 1) r = -r;
      long uu = static_cast<long>(u);
      Real weight = Real::from_long(-2 * (tl - uu) * uu * (tl + uu), bits) /
                        Real::from_long((tl - 1) * tl * (2 * tl - 1), bits) +
                    Real::from_long(tl - uu, bits) / tl * ratio;
      inner += to_real(r, bits) * a_pow * weight;
    }
    part1 = p12t * sign_t * pow_si(ratio, tl - 1) * inner;
  }

  // part 2
  Real part2 = Real::zero(bits);
  {
    Real m_pow = Real::one(bits);
    Real p_pow = Real::one(bits);
    for (unsigned u = 1; u + 2 <= t; ++u) {
      m_pow *= sq_m * sq_m;
      p_pow *= sq_p * sq_p;
      Real f = to_real(mpq_class(1, factorial(2 * u)), bits);
      part2 += (sq_p * m_pow - sq_m * p_pow) * f;
    }
    part2 = part2 / 2;
  }

  // part 3: geometric factor with exponent t
  Real part3 = Real::zero(bits);
  {
    Real m_pow = Real::one(bits);
    Real p_pow = Real::one(bits);
    Real inner = Real::zero(bits);
    for (unsigned u = 1; u + 2 <= t; ++u) {
      m_pow *= sq_m * sq_m;
      p_pow *= sq_p * sq_p;
      inner += (sq_p * m_pow - sq_m * p_pow) * to_real(mpq_class(1, factorial(2 * u)), bits);
    }
    part3 = -sign_t * p12t / (2 * to_real(factorial(t), bits)) * pow_si(ratio, tl) * inner;
  }

  // part 4
  Real part4 = Real::zero(bits);
  {
    Real m_pow = Real::one(bits);
    Real p_pow = Real::one(bits);
    for (unsigned u = 1; u + 2 <= t; ++u) {
      m_pow *= sq_m * sq_m;
      p_pow *= sq_p * sq_p;
      Real in1 = Real::zero(bits);
      Real in2 = Real::zero(bits);
      Real r1 = Real::one(bits);
      Real r2 = Real::one(bits);
      for (unsigned s = 1; s <= u; ++s) {
        mpq_class r = pochhammer(mpq_class(-tl), s) / mpq_class(factorial(t + s));
        if (s % 2 == 1) r = -r;
        r1 *= sq_m / sq_p;
        r2 *= sq_p / sq_m;
        in1 += to_real(r, bits) * r1;
        in2 += to_real(r, bits) * r2;
      }
      part4 += (p_pow * in1 + m_pow * in2) * to_real(mpq_class(1, factorial(2 * u)), bits);
    }
    part4 = -sign_t * p12t * pow_si(ratio, tl) * part4;
  }

  // part 5: the outer u-sum runs to t-2, like the weights it descends from
  Real part5 = Real::zero(bits);
  {
    Real m_pow = Real::one(bits);
    Real p_pow = Real::one(bits);
    Real lead = Real::zero(bits);
    for (unsigned u = 1; u + 2 <= t; ++u) {
      m_pow *= sq_m * sq_m;
      p_pow *= sq_p * sq_p;
      lead += (p_pow - m_pow) * to_real(mpq_class(1, factorial(2 * u)), bits);
    }
    Real tail = Real::zero(bits);
    Real rpow = Real::one(bits);
    for (unsigned s = 1; s <= t; ++s) {
      mpq_class r = poch_half_neg(s, s) / mpq_class(mpz_class(2 * s - 1) * factorial(s));
      if (s % 2 == 1) r = -r;
      rpow *= ratio;
      tail += to_real(r, bits) * rpow;
    }
    part5 = sq / 2 * lead * tail;
  }

  Real direct = S_sum(2, t, ctx);
  Real total = part1 + part2 + part3 + part4 + part5;

  // the split identity is exact; compare against the working-precision margin
  Real scale = max(max(abs(total), abs(direct)), Real::one(bits));
  Real margin = scale.mul_2si(ctx.margin_exponent - static_cast<long>(bits));
  bool matches = abs(total - direct) <= margin;

  Real tt = Real::from_unsigned(t, bits);
  bool env1 = abs(part1) <= Real::from_string("0.1", bits) / tt;
  bool env3 = abs(part3) <= Real::from_string("0.003", bits) / tt;
  bool env4 = abs(part4) <= Real::from_string("0.2", bits) / tt;

  std::vector<Real> parts;
  parts.reserve(5);
  parts.push_back(std::move(part1));
  parts.push_back(std::move(part2));
  parts.push_back(std::move(part3));
  parts.push_back(std::move(part4));
  parts.push_back(std::move(part5));
  return S2SplitResult{std::move(parts), std::move(total), std::move(direct),
                       matches, env1, env3, env4};
}

}  // namespace pasym
