#include "pasym/shift_expansion.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/rational.hpp"

namespace pasym {

namespace {

std::mutex g_omega_mutex;
std::map<std::tuple<unsigned, unsigned, unsigned>, Real>& omega_cache() {
  static std::map<std::tuple<unsigned, unsigned, unsigned>, Real> cache;
  return cache;
}

Real omega1_impl(unsigned k, unsigned t, unsigned bits) {
  // ((24k-1)/(4 sqrt 6))^t * sum_{l=0}^{floor((t+1)/2)}
  //   C(t+1,l) (t+1-l)/(t+1-2l)! (-1)^l (pi/6)^{t-2l} (24k-1)^{-l}
  const long w = 24 * static_cast<long>(k) - 1;
  Real p = pi(bits);
  Real sum = Real::zero(bits);
  for (unsigned l = 0; 2 * l <= t + 1; ++l) {
    mpq_class rat(binomial(t + 1, l) * (t + 1 - l), factorial(t + 1 - 2 * l));
    if (l % 2 == 1) rat = -rat;
    // fold the 6^-(t-2l) and (24k-1)^-l factors into the rational part
    long e6 = static_cast<long>(t) - 2 * static_cast<long>(l);
    mpz_class six_pow;
    mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, static_cast<unsigned long>(e6 >= 0 ? e6 : -e6));
    if (e6 >= 0)
      rat /= six_pow;
    else
      rat *= six_pow;
    mpz_class w_pow;
    mpz_ui_pow_ui(w_pow.get_mpz_t(), static_cast<unsigned long>(w), l);
    rat /= w_pow;
    rat.canonicalize();
    sum += to_real(rat, bits) * pow_si(p, e6);
  }
  Real front = pow_si(Real::from_long(w, bits) / (4 * sqrt(Real::from_long(6, bits))),
                      static_cast<long>(t));
  return front * sum;
}

}  // namespace

Real omega1(unsigned k, unsigned t, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("omega1: k must be >= 1");
  std::lock_guard<std::mutex> lock(g_omega_mutex);
  auto key = std::make_tuple(k, t, ctx.bits);
  auto it = omega_cache().find(key);
  if (it == omega_cache().end())
    it = omega_cache().emplace(key, omega1_impl(k, t, ctx.bits)).first;
  return it->second;
}

ShiftConstants shift_constants(unsigned k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("shift_constants: k must be >= 1");
  const unsigned bits = ctx.bits;
  const unsigned long c = ceil_sqrt(k);
  Real ak = mu(static_cast<long>(k), bits);

  // C1(k) = 3k(3c+1)^2 ak^{6c+4} / (2c (6c+4)!)
  Real C1 = to_real(mpq_class(mpz_class(3 * static_cast<long>(k)) * (3 * c + 1) * (3 * c + 1),
                              mpz_class(2 * c) * factorial(6 * c + 4)),
                    bits) *
            pow_si(ak, static_cast<long>(6 * c + 4));
  // C2(k) = 9k(3c+1)^2 ak^{6c+3} / ((6c+1)(6c+3)!)
  Real C2 = to_real(mpq_class(mpz_class(9 * static_cast<long>(k)) * (3 * c + 1) * (3 * c + 1),
                              mpz_class(6 * c + 1) * factorial(6 * c + 3)),
                    bits) *
            pow_si(ak, static_cast<long>(6 * c + 3));

  Real abs_cos = abs(cos(ak));
  Real abs_sin = abs(sin(ak));
  Real C1s = (ak * ak * (cosh(ak) - 1) + 4 * C1) / (4 * abs_cos);
  Real C2s = (1 + 3 * (ak * ak * sinh(ak) + 4 * C2) / (4 * abs_sin)) / 2;
  const long w = 24 * static_cast<long>(k) - 1;
  Real Ce = 2 * C2s + Real::from_long(w, bits) * (1 + C2s) / 6;
  Real Co = 2 * C1s + Real::from_long(w, bits) * (1 + 2 * C1s) / 6;
  return ShiftConstants{k, std::move(ak), std::move(C1), std::move(C2),
                        std::move(C1s), std::move(C2s), std::move(Ce), std::move(Co)};
}

Real omega_odd_envelope(unsigned k, unsigned t, const PrecisionContext& ctx) {
  if (t < 1) throw DomainError("omega_odd_envelope: t must be >= 1");
  const unsigned bits = ctx.bits;
  ShiftConstants sc = shift_constants(k, ctx);
  const long w = 24 * static_cast<long>(k) - 1;
  Real tt = Real::from_unsigned(t, bits);
  return pow_si(Real::from_long(w, bits) / 24, static_cast<long>(t)) *
         sqrt(6 / pow_si(pi(bits), 3)) * sqrt(tt + 1) * abs(cos(sc.alpha_k)) *
         (1 + sc.C1_star / tt);
}

Real omega_even_envelope(unsigned k, unsigned t, const PrecisionContext& ctx) {
  if (t < 1) throw DomainError("omega_even_envelope: t must be >= 1");
  const unsigned bits = ctx.bits;
  ShiftConstants sc = shift_constants(k, ctx);
  const long w = 24 * static_cast<long>(k) - 1;
  Real tt = Real::from_unsigned(t, bits);
  return pow_si(Real::from_long(w, bits) / 24, static_cast<long>(t)) *
         (2 * sqrt(tt) / (sqrt(pi(bits)) * sc.alpha_k)) * abs(sin(sc.alpha_k)) *
         (1 + sc.C2_star / tt);
}

namespace {

Real half_power(long base_num, long base_den, unsigned exp_num, unsigned bits) {
  // (base_num/base_den)^(exp_num/2)
  Real b = Real::from_long(base_num, bits) / base_den;
  return pow(b, Real::from_unsigned(exp_num, bits) / 2);
}

}  // namespace

ShiftErrorBudget shift_error_budget(unsigned k, unsigned N, const PrecisionContext& ctx) {
  if (k < 1 || N < 1) throw DomainError("shift_error_budget: k, N must be >= 1");
  const unsigned bits = ctx.bits;
  ShiftConstants sc = shift_constants(k, ctx);
  const long w = 24 * static_cast<long>(k) - 1;
  Real NN = Real::from_unsigned(N, bits);

  // even tail: sqrt(2)|sin a_k|/(sqrt(pi) a_k) ((24k-1)/24)^{(N+1)/2} sqrt(N+1) (1 + Ce/N)
  Real e_even = sqrt(Real::from_long(2, bits)) * abs(sin(sc.alpha_k)) /
                (sqrt(pi(bits)) * sc.alpha_k) * half_power(w, 24, N + 1, bits) *
                sqrt(NN + 1) * (1 + sc.Ce / NN);
  // odd part: (3/pi^3)^{1/2} |cos a_k| ((24k-1)/24)^{N/2} sqrt(N+2) (1 + Co/N)
  Real e_odd = sqrt(3 / pow_si(pi(bits), 3)) * abs(cos(sc.alpha_k)) *
               half_power(w, 24, N, bits) * sqrt(NN + 2) * (1 + sc.Co / NN);
  Real e_n1 = e_even + e_odd;
  // remainder of the enclosure step: (1 + 3.7 k/N) (6/(pi sqrt(24)))^{N+1}
  Real lehmer_term = (1 + Real::from_string("3.7", bits) * static_cast<long>(k) / NN) *
                     pow_si(6 / (pi(bits) * sqrt(Real::from_long(24, bits))),
                            static_cast<long>(N) + 1);
  Real total = e_n1 + lehmer_term;

  // cutoff max{ghat(N+1), (24k-1)^2}, as the smallest admissible integer
  long ghat_cut = certified_next_integer_above(
      [N](unsigned b) { return g_hat(static_cast<long>(N) + 1, b); }, ctx);
  long sq = w * w;
  long cutoff = ghat_cut > sq ? ghat_cut : sq;

  return ShiftErrorBudget{k, N, std::move(e_even), std::move(e_odd), std::move(e_n1),
                          std::move(total), cutoff};
}

BoundedApprox shift_band(long n, unsigned k, unsigned N, const PrecisionContext& ctx) {
  ShiftErrorBudget budget = shift_error_budget(k, N, ctx);
  if (n < budget.cutoff_n)
    throw CutoffError("shift_band: n below cutoff n_N(k) = " + std::to_string(budget.cutoff_n));
  const unsigned bits = ctx.bits;
  Real nn = Real::from_long(n, bits);
  Real prefactor = exp(pi(bits) * sqrt(2 * nn / 3)) / (4 * nn * sqrt(Real::from_long(3, bits)));
  Real inv_sqrt_n = 1 / sqrt(nn);
  Real center = Real::zero(bits);
  Real x = Real::one(bits);
  for (unsigned t = 0; t <= N; ++t) {
    center += omega1(k, t, ctx) * x;
    x *= inv_sqrt_n;
  }
  Real radius = budget.E_N_total * x;  // x = n^{-(N+1)/2} after the loop
  return BoundedApprox{std::move(prefactor), std::move(center), std::move(radius)};
}

}  // namespace pasym
