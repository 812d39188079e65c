#include "pasym/precision.hpp"

#include <cmath>

namespace pasym {

PrecisionContext PrecisionContext::with_bits(unsigned bits, unsigned max_bits) {
  if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
  PrecisionContext c;
  c.bits = bits;
  c.margin_exponent = static_cast<int>(bits / 2);
  c.max_bits = max_bits == 0 ? (bits >= 256 ? bits * 32 : 8192) : max_bits;
  if (c.max_bits < bits) throw DomainError("PrecisionContext: max_bits < bits");
  return c;
}

int PrecisionContext::output_digits() const {
  int d = static_cast<int>(std::floor(bits * 0.30102999566398119521)) - 5;
  return d < 2 ? 2 : d;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "ambiguous";
  }
}

namespace {

Real margin_at(const Real& lhs, const Real& rhs, unsigned bits, int margin_exponent) {
  Real scale = max(abs(lhs), abs(rhs));
  return scale.mul_2si(margin_exponent - static_cast<long>(bits));
}

}  // namespace

CheckResult certify_leq(const PairEvaluator& eval, const PrecisionContext& ctx) {
  unsigned bits = ctx.bits;
  for (;;) {
    auto [lhs, rhs] = eval(bits);
    Real margin = margin_at(lhs, rhs, bits, ctx.margin_exponent);
    Real diff = rhs - lhs;
    if (diff > margin)
      return CheckResult{CheckStatus::pass, bits, std::move(lhs), std::move(rhs), std::move(margin)};
    if (-diff > margin)
      return CheckResult{CheckStatus::fail, bits, std::move(lhs), std::move(rhs), std::move(margin)};
    if (bits >= ctx.max_bits)
      return CheckResult{CheckStatus::ambiguous, bits, std::move(lhs), std::move(rhs), std::move(margin)};
    bits = bits * 2 > ctx.max_bits ? ctx.max_bits : bits * 2;
  }
}

long certified_floor(const std::function<Real(unsigned)>& eval, const PrecisionContext& ctx) {
  unsigned bits = ctx.bits;
  for (;;) {
    Real x = eval(bits);
    Real dist = x.dist_to_nearest_integer();
    Real margin = max(abs(x), Real::one(bits)).mul_2si(ctx.margin_exponent - static_cast<long>(bits));
    if (dist > margin) return x.to_long_floor();
    if (bits >= ctx.max_bits)
      throw AmbiguousError("certified_floor: value within margin of an integer at max_bits");
    bits = bits * 2 > ctx.max_bits ? ctx.max_bits : bits * 2;
  }
}

long certified_next_integer_above(const std::function<Real(unsigned)>& eval,
                                  const PrecisionContext& ctx) {
  return certified_floor(eval, ctx) + 1;
}

}  // namespace pasym
