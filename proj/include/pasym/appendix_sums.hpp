#ifndef PASYM_APPENDIX_SUMS_HPP
#define PASYM_APPENDIX_SUMS_HPP

#include <string>
#include <vector>

#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym {

// Numeric verification of the symbolic-summation closed forms for the inner
// sums of S_2 and S_3, under the rationalizing substitution
// b = 6/sqrt(36 + pi^2), plus the basic facts and the S_2 five-way split.

/// Direct inner sum
///   T~(t,u) = sum_{s=0}^{t-u-2} (b^2-1)^{s+u} (-s-u)_u (1/2-s-u)_{1+s+u}
///                               / ((s+u) (s+2u)!)
/// valid for t >= 2 and 1 <= u <= t-2.
Real t_tilde_direct(unsigned t, unsigned u, const PrecisionContext& ctx);

/// Six-term closed form of the same sum.
Real t_tilde_closed(unsigned t, unsigned u, const PrecisionContext& ctx);

/// Closed form of the inner sum of S_3, finite at u = 0 (valid 0 <= u <= t-2).
Real t_prime_closed(unsigned t, unsigned u, const PrecisionContext& ctx);

/// Direct counterpart of t_prime_closed (the s- and r-sums evaluated term by
/// term), used to validate the closed form per (t, u).
Real t_prime_direct(unsigned t, unsigned u, const PrecisionContext& ctx);

/// S_3(t) reassembled from the closed inner form and the b-substitution.
Real s3_via_closed(unsigned t, const PrecisionContext& ctx);

/// S_2(t) reassembled from t_tilde_closed.
Real s2_via_closed(unsigned t, const PrecisionContext& ctx);

/// One named fact check.
struct FactCase {
  std::string name;
  bool pass;
};

/// The three basic facts:
///  - (alpha^2/(1+alpha^2))^{t-1} / sqrt(t) <= 1/(2t), t = 2..500;
///  - (-1)^t (1/2-t)_t = C(2t,t) t!/4^t exactly, t = 0..60;
///  - 1 - sqrt(1-x) = sum C(2m,m)/(2m-1) (x/4)^m at x = alpha^2/(1+alpha^2),
///    with the partial-sum tail below its central-binomial bound.
std::vector<FactCase> fact_checks(const PrecisionContext& ctx);

/// The five pieces of the S_2 split, their sum, the direct S_2(t), and the
/// individual envelope claims |S2_1| <= 0.1/t, |S2_3| <= 3e-3/t,
/// |S2_4| <= 0.2/t.
struct S2SplitResult {
  std::vector<Real> parts;  // size 5
  Real sum;
  Real direct;
  bool split_matches;
  bool env1;
  bool env3;
  bool env4;
};

S2SplitResult s2_split_check(unsigned t, const PrecisionContext& ctx);

}  // namespace pasym

#endif  // PASYM_APPENDIX_SUMS_HPP
