#ifndef PASYM_PRECISION_HPP
#define PASYM_PRECISION_HPP

#include <functional>
#include <string>
#include <utility>

#include "pasym/errors.hpp"
#include "pasym/real.hpp"

namespace pasym {

/// Working-precision and comparison-margin policy.
///
/// All certified inequalities are decided with an explicit ambiguity margin:
/// a comparison of lhs against rhs at `bits` mantissa bits is treated as
/// undecided while |lhs - rhs| < 2^(margin_exponent - bits) * scale with
/// scale = max(|lhs|, |rhs|).  Undecided comparisons are re-evaluated at
/// doubled precision until they clear the margin or `max_bits` is exhausted,
/// in which case the result is reported as ambiguous, never as pass or fail.
struct PrecisionContext {
  unsigned bits = 256;
  int margin_exponent = 128;
  unsigned max_bits = 8192;

  static PrecisionContext with_bits(unsigned bits, unsigned max_bits = 0);

  /// Same policy at a different working precision (escalation step).
  PrecisionContext at_bits(unsigned b) const {
    PrecisionContext c = *this;
    c.bits = b;
    return c;
  }

  /// Decimal digits carried by serialized values: bits*log10(2) - 5.
  int output_digits() const;
};

enum class CheckStatus { pass, fail, ambiguous };

const char* to_string(CheckStatus s);

/// Outcome of one certified comparison, at the precision that decided it.
struct CheckResult {
  CheckStatus status;
  unsigned bits_used;
  Real lhs;
  Real rhs;
  Real margin;

  bool passed() const { return status == CheckStatus::pass; }
};

/// Re-evaluates (lhs, rhs) at a requested precision.
using PairEvaluator = std::function<std::pair<Real, Real>(unsigned bits)>;

/// Certify lhs <= rhs under the margin-escalation policy.
CheckResult certify_leq(const PairEvaluator& eval, const PrecisionContext& ctx);

/// Largest integer <= x, certified: escalates while x sits within the margin
/// of an integer.  Throws AmbiguousError when max_bits is exhausted.
long certified_floor(const std::function<Real(unsigned bits)>& eval,
                     const PrecisionContext& ctx);

/// Smallest integer strictly greater than x (i.e. floor(x) + 1), certified.
long certified_next_integer_above(const std::function<Real(unsigned bits)>& eval,
                                  const PrecisionContext& ctx);

}  // namespace pasym

#endif  // PASYM_PRECISION_HPP
