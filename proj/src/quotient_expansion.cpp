#include "pasym/quotient_expansion.hpp"

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/inverse_expansion.hpp"
#include "pasym/shift_expansion.hpp"

namespace pasym {

Real c_coeff(unsigned k, unsigned m, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("c_coeff: k must be >= 1");
  Real sum = Real::zero(ctx.bits);
  for (unsigned s = 0; s <= m; ++s) sum += omega1(k, s, ctx) * g_coeff(m - s, ctx);
  return sum;
}

QuotientErrorBudget quotient_error_budget(unsigned k, unsigned N, const PrecisionContext& ctx) {
  if (k < 1 || N < 1) throw DomainError("quotient_error_budget: k, N must be >= 1");
  const unsigned bits = ctx.bits;
  ShiftConstants sc = shift_constants(k, ctx);
  ShiftErrorBudget shift = shift_error_budget(k, N, ctx);
  InverseErrorBudget inv = inverse_error_budget(N, ctx);
  Real NN = Real::from_unsigned(N, bits);
  const long kl = static_cast<long>(k);
  const long w = 24 * kl - 1;

  // product-remainder cross term
  Real e1 = (Real::from_string("1.1", bits) + Real::from_string("0.5", bits) * sc.Ce +
             Real::from_string("0.6", bits) * sc.Co + Real::from_string("0.2", bits) * kl) /
            NN;
  // shift truncation against the inverse partial sum
  Real e2 = shift.E_N_total * (1 + 1 / NN);
  // inverse truncation against the shift partial sum, C* = max{C1*, C2*}
  Real e3 = inv.E2_N *
            (1 + (Real::from_string("1.9", bits) * kl +
                  Real::from_string("0.06", bits) * (1 + sc.C2_star) +
                  Real::from_string("0.05", bits) * (1 + sc.C1_star)) /
                     NN);
  // truncated-convolution tail, two pieces
  Real c_star = max(sc.C1_star, sc.C2_star);
  Real geo = pow(Real::from_long(w, bits) / 24, NN / 2);
  Real e4a = (Real::from_string("0.03", bits) + (1 + c_star) * w / 96 +
              Real::from_string("0.9", bits) * kl / sqrt(NN)) *
             geo * sqrt(NN);
  Real e4b = Real::from_string("0.8", bits) * (1 + c_star) / sqrt(NN) * geo;
  Real e4 = e4a + e4b;

  Real total = e1 + e2 + e3 + e4;
  return QuotientErrorBudget{k,  N,  std::move(e1), std::move(e2), std::move(e3),
                             std::move(e4), std::move(total), shift.cutoff_n};
}

BoundedApprox ratio_band(long n, unsigned k, unsigned N, const PrecisionContext& ctx) {
  QuotientErrorBudget budget = quotient_error_budget(k, N, ctx);
  if (n < budget.cutoff)
    throw CutoffError("ratio_band: n below cutoff n_N(k) = " + std::to_string(budget.cutoff));
  const unsigned bits = ctx.bits;
  Real nn = Real::from_long(n, bits);
  Real inv_sqrt_n = 1 / sqrt(nn);
  Real center = Real::zero(bits);
  Real x = Real::one(bits);
  for (unsigned m = 0; m <= N; ++m) {
    center += c_coeff(k, m, ctx) * x;
    x *= inv_sqrt_n;
  }
  Real radius = budget.E_N_total * x;
  return BoundedApprox{Real::one(bits), std::move(center), std::move(radius)};
}

ExpansionTable make_expansion_table(ExpansionKind kind, unsigned k, unsigned N,
                                    const PrecisionContext& ctx) {
  std::vector<Real> coeffs;
  coeffs.reserve(N + 1);
  switch (kind) {
    case ExpansionKind::ratio: {
      QuotientErrorBudget b = quotient_error_budget(k, N, ctx);
      for (unsigned m = 0; m <= N; ++m) coeffs.push_back(c_coeff(k, m, ctx));
      return ExpansionTable{kind, k, N, std::move(coeffs), std::move(b.E_N_total), b.cutoff};
    }
    case ExpansionKind::shift: {
      ShiftErrorBudget b = shift_error_budget(k, N, ctx);
      for (unsigned t = 0; t <= N; ++t) coeffs.push_back(omega1(k, t, ctx));
      return ExpansionTable{kind, k, N, std::move(coeffs), std::move(b.E_N_total), b.cutoff_n};
    }
    case ExpansionKind::inverse: {
      InverseErrorBudget b = inverse_error_budget(N, ctx);
      for (unsigned t = 0; t <= N; ++t) coeffs.push_back(g_coeff(t, ctx));
      return ExpansionTable{kind, 0, N, std::move(coeffs), std::move(b.E2_N),
                            inverse_cutoff(N, ctx)};
    }
  }
  throw DomainError("make_expansion_table: unknown kind");
}

}  // namespace pasym
