#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/inverse_expansion.hpp"
#include "pasym/partition_table.hpp"
#include "pasym/shift_expansion.hpp"
#include "pasym/truncated_series.hpp"
#include "test_helpers.hpp"

using namespace pasym;
using pasym_test::ctx256;
using pasym_test::near_rel;
using pasym_test::near_str;

TEST_CASE("S_j spot values") {
  auto ctx = ctx256();
  // S_1(1) = alpha^2/192
  Real a2 = alpha(ctx.bits) * alpha(ctx.bits);
  CHECK(near_rel(S_sum(1, 1, ctx), a2 / 192, 220));
  // S_2(2) = 0 (empty range)
  CHECK(S_sum(2, 2, ctx).is_zero());
  // S_6(0) = 1 (single term, C(-1/2, 0) = 1)
  CHECK(near_rel(S_sum(6, 0, ctx), Real::one(ctx.bits), 250));
  CHECK_THROWS_AS(S_sum(0, 1, ctx), DomainError);
  CHECK_THROWS_AS(S_sum(10, 1, ctx), DomainError);
}

TEST_CASE("g parts small-t branches") {
  auto ctx = ctx256();
  Real p = pi(ctx.bits);
  Real p2 = p * p;
  Real sqrt6 = sqrt(Real::from_long(6, ctx.bits));
  GParts g0 = g_parts(0, ctx);
  CHECK(g0.g_e1 == Real::one(ctx.bits));
  CHECK(g0.g_e2.is_zero());
  CHECK(near_rel(g0.g_o1, sqrt6 / (2 * p), 240));
  CHECK(near_rel(g0.g_o2, p / (24 * sqrt6), 240));
  GParts g1 = g_parts(1, ctx);
  CHECK(near_rel(g1.g_e1, (p2 * p2 - 288 * p2 + 10368) / (6912 * p2), 220));
}

TEST_CASE("g coefficients: closed-form anchors") {
  auto ctx = ctx256();
  Real p = pi(ctx.bits);
  Real sqrt6 = sqrt(Real::from_long(6, ctx.bits));
  CHECK(g_coeff(0, ctx) == Real::one(ctx.bits));
  // g(1) = sqrt6/(2 pi) + pi/(24 sqrt6)
  CHECK(near_rel(g_coeff(1, ctx), sqrt6 / (2 * p) + p / (24 * sqrt6), 220));
  CHECK(near_str(g_coeff(1, ctx), "0.4432879768735823912672688734562536476162", 35));
  // this closed form is g(3) = g_o(1), not g(1)
  Real p2 = p * p;
  Real g3 = (2239488 - 432 * p2 * p2 + p2 * p2 * p2) / (497664 * sqrt6 * p2 * p);
  CHECK(near_rel(g_coeff(3, ctx), g3, 200));
  CHECK(near_str(g_coeff(2, ctx), "0.1325763362854235203919237218689716885555", 35));
  CHECK(near_str(g_coeff(4, ctx), "0.02624525501221521197085080986985586198668", 35));
}

TEST_CASE("the t = 1 odd branch constant is 2304, not 2306") {
  // With 2306 the convolution identity fails by ~5e-5; with 2304 it holds to
  // working precision.
  auto ctx = ctx256();
  Real p = pi(ctx.bits);
  Real p2 = p * p;
  Real sqrt6 = sqrt(Real::from_long(6, ctx.bits));
  Real go1_2304 = (p2 * p2 - 144 * p2 + 10368) / (2304 * sqrt6 * p2 * p);
  Real go1_2306 = (p2 * p2 - 144 * p2 + 10368) / (2306 * sqrt6 * p2 * p);
  Real conv = g_coeff_convolution(3, ctx);  // = g_o(1) = g_o1(1) + g_o2(1)
  GParts parts = g_parts(1, ctx);
  CHECK(near_rel(conv - parts.g_o2, go1_2304, 128));
  CHECK_FALSE(near_rel(conv - parts.g_o2, go1_2306, 20));
}

TEST_CASE("family plumbing identities") {
  auto ctx = ctx256();
  CHECK(coeff_E1(0, ctx) == Real::one(ctx.bits));
  CHECK(coeff_e2(0, ctx) == Real::one(ctx.bits));
  CHECK(coeff_E2(0, ctx) == Real::one(ctx.bits));
  // E2(t) = e2(t) - e2(t-1)/24 for t >= 2 (the closed geometric branch)
  for (unsigned t = 2; t <= 12; ++t)
    CHECK(near_rel(coeff_E2(t, ctx), coeff_e2(t, ctx) - coeff_e2(t - 1, ctx) / 24, 200));
  // O2 is definitionally the 1/24-difference of o2
  for (unsigned t = 1; t <= 12; ++t)
    CHECK(near_rel(coeff_O2(t, ctx), coeff_o2(t, ctx) - coeff_o2(t - 1, ctx) / 24, 220));
}

TEST_CASE("convolution equivalence for t <= 20") {
  auto ctx = ctx256();
  for (unsigned t = 0; t <= 20; ++t)
    CHECK(near_rel(g_coeff(t, ctx), g_coeff_convolution(t, ctx), 128));
}

TEST_CASE("g agrees with the independent series oracle") {
  auto ctx = ctx256();
  TruncatedSeries oracle = inverse_ratio_series(10, ctx.bits);
  for (unsigned t = 0; t <= 10; ++t)
    CHECK(near_rel(g_coeff(t, ctx), oracle.coeff(t), 128));
}

TEST_CASE("g envelopes") {
  auto ctx = ctx256();
  CHECK_THROWS_AS(g_envelopes(0, ctx), DomainError);
  auto [even1, odd1] = g_envelopes(1, ctx);
  CHECK(abs(g_coeff(2, ctx)) < even1);
  CHECK(abs(g_coeff(3, ctx)) < odd1);
  // geometric decay with ratio (1+a^2)/(24 a^2)
  Real a2 = alpha(ctx.bits) * alpha(ctx.bits);
  Real q = (1 + a2) / (24 * a2);
  for (unsigned t = 1; t <= 39; ++t) {
    auto [e_t, o_t] = g_envelopes(t, ctx);
    auto [e_n, o_n] = g_envelopes(t + 1, ctx);
    CHECK(e_n < e_t);
    CHECK(o_n < o_t);
    CHECK(near_rel((1 + Real::from_string("3.5", ctx.bits) / static_cast<long>(t)) * e_n,
                   (1 + Real::from_string("3.5", ctx.bits) / (static_cast<long>(t) + 1)) * e_t * q,
                   180));
  }
  // full sweep t <= 40
  for (unsigned t = 1; t <= 40; ++t) {
    auto [even, odd] = g_envelopes(t, ctx);
    CHECK(abs(g_coeff(2 * t, ctx)) < even);
    CHECK(abs(g_coeff(2 * t + 1, ctx)) < odd);
  }
}

TEST_CASE("S2 envelope: published constant vs smallest passing integer") {
  // The sum converges to its limit super-geometrically, so the 54.9/t
  // envelope is extremely loose: over t in {2..200} the smallest integer
  // constant that works is 2, attained at t = 2 where S2 vanishes.
  auto ctx = ctx256();
  Real a2 = alpha(ctx.bits) * alpha(ctx.bits);
  Real limit = cosh(sqrt(1 + a2) - 1) - 1;
  Real worst = Real::zero(ctx.bits);
  for (unsigned t = 2; t <= 200; ++t) {
    Real v = abs(S_sum(2, t, ctx) / limit - 1) * static_cast<long>(t);
    if (v > worst) worst = v;
  }
  CHECK(worst <= Real::from_string("54.9", ctx.bits));
  CHECK(worst <= Real::from_long(2, ctx.bits));
  CHECK(worst > Real::from_string("1.99", ctx.bits));
}

TEST_CASE("inverse error budget") {
  auto ctx = ctx256();
  InverseErrorBudget b1 = inverse_error_budget(1, ctx);
  // E2_N2(1) = (6/(pi sqrt 24))^2 * 5
  Real expected = pow_si(6 / (pi(ctx.bits) * sqrt(Real::from_long(24, ctx.bits))), 2) * 5;
  CHECK(near_rel(b1.E2_N2, expected, 220));
  CHECK(near_str(b1.E2_N2, "0.7599088773175332858290959740729572917827", 35));
  CHECK(near_str(b1.E2_N, "2.523683162410918063277092071092344479062", 34));
  // E2_N <= 4.1 for N in 1..20
  Real cap = Real::from_string("4.1", ctx.bits);
  for (unsigned N = 1; N <= 20; ++N) CHECK(inverse_error_budget(N, ctx).E2_N <= cap);
  CHECK_THROWS_AS(inverse_error_budget(0, ctx), DomainError);
}

TEST_CASE("inverse band contains exact values") {
  auto ctx = ctx256();
  PartitionTable table(600);
  for (auto [n, N] : {std::pair<long, unsigned>{100, 1}, {400, 4}, {229, 4}, {40, 2}, {1, 1}}) {
    BoundedApprox band = inverse_band(n, N, ctx);
    Real target =
        1 / (Real::from_mpz(table.at(static_cast<std::size_t>(n)), ctx.bits) * band.prefactor);
    CHECK(abs(target - band.center) <= band.radius);
    CHECK(band.radius.sign() > 0);
  }
  // radius decreasing in n
  Real r100 = inverse_band(100, 2, ctx).radius;
  Real r200 = inverse_band(200, 2, ctx).radius;
  CHECK(r200 < r100);
  // cutoff: ghat(5) ~ 228.4, so N = 4 needs n >= 229
  CHECK(inverse_cutoff(4, ctx) == 229);
  CHECK_THROWS_AS(inverse_band(228, 4, ctx), CutoffError);
}

TEST_CASE("memoized coefficients are safe under concurrent access") {
  auto ctx = ctx256();
  Real reference = g_coeff(25, ctx) + omega1(2, 25, ctx);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (unsigned t = 0; t <= 25; ++t) {
        Real a = g_coeff(t, ctx);
        Real b = g_coeff_convolution(t, ctx);
        Real o = omega1(2, t, ctx);
        (void)o;
        if (!near_rel(a, b, 128)) ++mismatches;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(mismatches == 0);
  CHECK(g_coeff(25, ctx) + omega1(2, 25, ctx) == reference);
}

TEST_CASE("lehmer band check") {
  auto ctx = ctx256();
  PartitionTable table(1100);
  CHECK(lehmer_band_check(table, 10, 2, ctx).passed());
  CHECK(lehmer_band_check(table, 1000, 4, ctx).passed());
  CHECK(lehmer_band_check(table, 1, 2, ctx).passed());
  CHECK_THROWS_AS(lehmer_band_check(table, 6, 2, ctx), ExclusionError);
  CHECK_THROWS_AS(lehmer_band_check(table, 7, 1, ctx), DomainError);
  CHECK_THROWS_AS(lehmer_band_check(table, 39, 3, ctx), CutoffError);  // ghat(3) ~ 39.84
  CHECK_THROWS_AS(lehmer_band_check(table, 2000, 2, ctx), SizingError);
}
