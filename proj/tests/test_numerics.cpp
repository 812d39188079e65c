#include <doctest.h>

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/precision.hpp"
#include "pasym/rational.hpp"
#include "test_helpers.hpp"

using namespace pasym;
using pasym_test::ctx256;
using pasym_test::near_abs;
using pasym_test::near_str;

// Reference decimals below were computed by evaluating the defining formulas
// at 256 bits and rounding (independently cross-checked at 50 decimal digits).

TEST_CASE("mu at small arguments") {
  auto ctx = ctx256();
  // mu(1) = (pi/6) sqrt(23)
  Real m1 = mu(1, ctx);
  CHECK(near_str(m1, "2.511091513582264489764646728767429863777", 35));
  CHECK(m1 == alpha(ctx.bits) * sqrt(Real::from_long(23, ctx.bits)));
  // mu(6) = (pi/6) sqrt(143)
  Real m6 = mu(6, ctx);
  CHECK(m6 == alpha(ctx.bits) * sqrt(Real::from_long(143, ctx.bits)));
  CHECK(near_str(m6, "6.261330683373095631210786064709994607257", 35));
  CHECK_THROWS_AS(mu(0, ctx), DomainError);
}

TEST_CASE("nu and g_hat") {
  auto ctx = ctx256();
  // nu(2) = 2log6 + 4log2 + 4log2 + 4 loglog2 + 10 loglog2/log2
  Real l2 = log(Real::from_long(2, ctx.bits));
  Real ll2 = log(l2);
  Real expected =
      2 * log(Real::from_long(6, ctx.bits)) + 8 * l2 + 4 * ll2 + 10 * ll2 / l2;
  CHECK(near_abs(nu(2, ctx), expected, 70));
  CHECK(near_str(nu(2, ctx), "2.374980971160039026438077257707991060361", 35));
  CHECK(near_str(nu(5, ctx), "38.76031913240445930320794739015364604158", 34));
  CHECK(near_str(g_hat(2, ctx), "0.8989251317703501832250702182440517575197", 35));
  CHECK(near_str(g_hat(5, ctx), "228.3733623747564118309493036007262200729", 33));
  CHECK_THROWS_AS(nu(1, ctx), DomainError);
  CHECK_THROWS_AS(g_hat(1, ctx), DomainError);
}

TEST_CASE("constants invariants") {
  auto ctx = ctx256();
  CHECK(near_str(alpha(ctx.bits), "0.5235987755982988730771072305465838140329", 15));
  // b satisfies sqrt(36 + pi^2) = 6 / b
  Real b = b_sub(ctx.bits);
  Real p = pi(ctx.bits);
  CHECK(pasym_test::near_rel(sqrt(36 + p * p), 6 / b, 200));
}

TEST_CASE("pochhammer and generalized binomial") {
  CHECK(pochhammer(mpq_class(-5, 2), 3) == mpq_class(-15, 8));
  CHECK(pochhammer(mpq_class(7, 3), 0) == 1);
  CHECK(pochhammer(mpq_class(-1), 1) == -1);
  // C(-1/2, 2) = (-1/2)(-3/2)/2 = 3/8
  CHECK(gen_binomial(mpq_class(-1, 2), 2) == mpq_class(3, 8));
  CHECK(gen_binomial(mpq_class(5), 2) == 10);
  CHECK(ceil_sqrt(1) == 1);
  CHECK(ceil_sqrt(4) == 2);
  CHECK(ceil_sqrt(5) == 3);
  CHECK(ceil_sqrt(17) == 5);
}

TEST_CASE("g_hat growth properties") {
  auto ctx = ctx256();
  // monotone for 2 <= m <= 50
  Real prev = g_hat(2, ctx);
  for (long m = 3; m <= 50; ++m) {
    Real cur = g_hat(m, ctx);
    CHECK(cur > prev);
    prev = cur;
  }
  // ghat(N+1) > N^2/2 for 1 <= N <= 50
  for (long N = 1; N <= 50; ++N) {
    Real lhs = g_hat(N + 1, ctx);
    Real rhs = Real::from_long(N * N, ctx.bits) / 2;
    CHECK(lhs > rhs);
  }
}

TEST_CASE("doubling bits does not move leading digits") {
  auto lo = PrecisionContext::with_bits(256);
  auto hi = PrecisionContext::with_bits(512);
  for (long n = 1; n <= 100; n += 9) {
    CHECK(pasym_test::near_rel(mu(n, lo), mu(n, hi), 200));
  }
  for (long m = 2; m <= 100; m += 7) {
    CHECK(pasym_test::near_rel(nu(m, lo), nu(m, hi), 180));
    CHECK(pasym_test::near_rel(g_hat(m, lo), g_hat(m, hi), 180));
  }
}

TEST_CASE("certified comparison margin policy") {
  auto ctx = ctx256();
  // clear separation: certified pass regardless of precision
  CheckResult r = certify_leq(
      [](unsigned bits) {
        return std::make_pair(Real::from_long(1, bits), Real::from_long(2, bits));
      },
      ctx);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.bits_used == 256);

  // reversed: certified fail
  r = certify_leq(
      [](unsigned bits) {
        return std::make_pair(Real::from_long(2, bits), Real::from_long(1, bits));
      },
      ctx);
  CHECK(r.status == CheckStatus::fail);

  // exactly equal values can never clear the margin: ambiguous at max_bits
  auto tight = PrecisionContext::with_bits(64, 128);
  r = certify_leq(
      [](unsigned bits) {
        Real x = sqrt(Real::from_long(2, bits));
        return std::make_pair(x, x);
      },
      tight);
  CHECK(r.status == CheckStatus::ambiguous);

  // a pass that cleared the margin must not flip at doubled precision
  auto eval = [](unsigned bits) {
    Real lhs = exp(Real::from_long(1, bits));          // e
    Real rhs = Real::from_string("2.7182819", bits);   // slightly above e
    return std::make_pair(lhs, rhs);
  };
  CheckResult a = certify_leq(eval, ctx);
  CheckResult b2 = certify_leq(eval, ctx.at_bits(512));
  CHECK(a.status == CheckStatus::pass);
  CHECK(a.status == b2.status);
}

TEST_CASE("margin escalation decides a tight comparison at higher precision") {
  // gap of 1e-50 is below the 256-bit margin (~1.2e-38 * scale) but clears
  // the 512-bit margin
  auto ctx = ctx256();
  CheckResult r = certify_leq(
      [](unsigned bits) {
        Real lhs = exp(Real::one(bits));
        Real rhs = exp(Real::one(bits)) + Real::from_string("1e-50", bits);
        return std::make_pair(std::move(lhs), std::move(rhs));
      },
      ctx);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.bits_used == 512);
  // and the reversed orientation fails at the same escalated precision
  r = certify_leq(
      [](unsigned bits) {
        Real lhs = exp(Real::one(bits)) + Real::from_string("1e-50", bits);
        Real rhs = exp(Real::one(bits));
        return std::make_pair(std::move(lhs), std::move(rhs));
      },
      ctx);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.bits_used == 512);
}

TEST_CASE("certified floor") {
  auto ctx = ctx256();
  long f = certified_floor([](unsigned bits) { return g_hat(2, bits); }, ctx);
  CHECK(f == 0);  // ghat(2) ~ 0.8989
  f = certified_floor([](unsigned bits) { return g_hat(5, bits); }, ctx);
  CHECK(f == 228);
  CHECK(certified_next_integer_above([](unsigned bits) { return g_hat(2, bits); }, ctx) == 1);
  // a value that is exactly an integer stays ambiguous
  CHECK_THROWS_AS(certified_floor(
                      [](unsigned bits) { return Real::from_long(7, bits); },
                      PrecisionContext::with_bits(64, 128)),
                  AmbiguousError);
}

TEST_CASE("precision context validation") {
  CHECK_THROWS_AS(PrecisionContext::with_bits(32), DomainError);
  auto ctx = PrecisionContext::with_bits(256);
  CHECK(ctx.margin_exponent == 128);
  CHECK(ctx.output_digits() == 72);
}
