#include "pasym/truncated_series.hpp"

#include "pasym/constants.hpp"
#include "pasym/errors.hpp"
#include "pasym/rational.hpp"

namespace pasym {

TruncatedSeries::TruncatedSeries(unsigned order, unsigned bits) : bits_(bits) {
  coeffs_.reserve(order + 1);
  for (unsigned t = 0; t <= order; ++t) coeffs_.push_back(Real::zero(bits));
}

TruncatedSeries TruncatedSeries::constant(const Real& c, unsigned order) {
  TruncatedSeries s(order, static_cast<unsigned>(c.precision()));
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Real& c, unsigned k, unsigned order) {
  if (k > order) throw RangeError("TruncatedSeries::monomial: k beyond order");
  TruncatedSeries s(order, static_cast<unsigned>(c.precision()));
  s.coeffs_[k] = c;
  return s;
}

const Real& TruncatedSeries::coeff(unsigned t) const {
  if (t >= coeffs_.size()) throw RangeError("TruncatedSeries: coefficient index beyond order");
  return coeffs_[t];
}

void TruncatedSeries::set_coeff(unsigned t, const Real& v) {
  if (t >= coeffs_.size()) throw RangeError("TruncatedSeries: coefficient index beyond order");
  coeffs_[t] = v;
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
  TruncatedSeries s(new_order, bits_);
  for (unsigned t = 0; t <= new_order && t <= order(); ++t) s.coeffs_[t] = coeffs_[t];
  return s;
}

TruncatedSeries TruncatedSeries::shifted_down(unsigned k) const {
  for (unsigned t = 0; t < k; ++t)
    if (!coeffs_[t].is_zero())
      throw DomainError("TruncatedSeries::shifted_down: valuation too small");
  TruncatedSeries s(order(), bits_);
  for (unsigned t = k; t <= order(); ++t) s.coeffs_[t - k] = coeffs_[t];
  return s;
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw DomainError("TruncatedSeries: order mismatch");
}
}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order(), a.bits_);
  for (unsigned t = 0; t <= a.order(); ++t) r.coeffs_[t] = a.coeffs_[t] + b.coeffs_[t];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order(), a.bits_);
  for (unsigned t = 0; t <= a.order(); ++t) r.coeffs_[t] = a.coeffs_[t] - b.coeffs_[t];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order(), a.bits_);
  for (unsigned i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Real& s) const {
  TruncatedSeries r(order(), bits_);
  for (unsigned t = 0; t <= order(); ++t) r.coeffs_[t] = coeffs_[t] * s;
  return r;
}

TruncatedSeries exp_series(const TruncatedSeries& s) {
  if (!s.coeff(0).is_zero())
    throw DomainError("exp_series: nonzero constant term");
  unsigned M = s.order();
  unsigned bits = s.bits();
  TruncatedSeries result = TruncatedSeries::constant(Real::one(bits), M);
  TruncatedSeries power = TruncatedSeries::constant(Real::one(bits), M);
  mpz_class jfact(1);
  for (unsigned j = 1; j <= M; ++j) {
    power = power * s;
    jfact *= j;
    result = result + power.scaled(Real::one(bits) / Real::from_mpz(jfact, bits));
  }
  return result;
}

TruncatedSeries binomial_pow(const TruncatedSeries& s, const mpq_class& r) {
  if (!(s.coeff(0) == Real::one(s.bits())))
    throw DomainError("binomial_pow: constant term must be 1");
  unsigned M = s.order();
  unsigned bits = s.bits();
  TruncatedSeries delta = s - TruncatedSeries::constant(Real::one(bits), M);
  TruncatedSeries result = TruncatedSeries::constant(Real::one(bits), M);
  TruncatedSeries power = TruncatedSeries::constant(Real::one(bits), M);
  for (unsigned j = 1; j <= M; ++j) {
    power = power * delta;
    result = result + power.scaled(to_real(gen_binomial(r, j), bits));
  }
  return result;
}

TruncatedSeries shift_ratio_series(unsigned k, unsigned order, unsigned bits) {
  if (k < 1) throw DomainError("shift_ratio_series: k must be >= 1");
  unsigned M = order + 2;  // headroom for the x-division below
  Real beta = growth_rate(bits);
  // 1 + c x^2 with c = (24k-1)/24: the square of mu(n+k)/(pi sqrt(2n/3)).
  TruncatedSeries base = TruncatedSeries::constant(Real::one(bits), M);
  base.set_coeff(2, Real::from_long(24 * static_cast<long>(k) - 1, bits) / 24);

  // mu(n+k) - pi sqrt(2n/3) = (beta/x) [ (1+c x^2)^{1/2} - 1 ]
  TruncatedSeries root = binomial_pow(base, mpq_class(1, 2));
  TruncatedSeries arg =
      (root - TruncatedSeries::constant(Real::one(bits), M)).shifted_down(1).scaled(beta);
  TruncatedSeries expo = exp_series(arg);

  // (1 + (24k-1)/(24n))^{-1}
  TruncatedSeries inv = binomial_pow(base, mpq_class(-1));

  // 1 - 1/mu(n+k) = 1 - (x/beta) (1+c x^2)^{-1/2}
  TruncatedSeries invroot = binomial_pow(base, mpq_class(-1, 2));
  TruncatedSeries sub =
      TruncatedSeries::constant(Real::one(bits), M) -
      TruncatedSeries::monomial(Real::one(bits) / beta, 1, M) * invroot;

  return (expo * inv * sub).truncated(order);
}

TruncatedSeries inverse_ratio_series(unsigned order, unsigned bits) {
  unsigned M = order + 2;
  Real beta = growth_rate(bits);
  // 1 - x^2/24, the square of mu(n)/(pi sqrt(2n/3)).
  TruncatedSeries base = TruncatedSeries::constant(Real::one(bits), M);
  base.set_coeff(2, Real::from_long(-1, bits) / 24);

  TruncatedSeries root = binomial_pow(base, mpq_class(1, 2));
  TruncatedSeries arg =
      (root - TruncatedSeries::constant(Real::one(bits), M)).shifted_down(1).scaled(-beta);
  TruncatedSeries expo = exp_series(arg);  // T1 = exp(-(mu - pi sqrt(2n/3)))

  TruncatedSeries invroot = binomial_pow(base, mpq_class(-1, 2));
  TruncatedSeries sub =
      TruncatedSeries::constant(Real::one(bits), M) -
      TruncatedSeries::monomial(Real::one(bits) / beta, 1, M) * invroot;
  TruncatedSeries t2 = base * binomial_pow(sub, mpq_class(-1));  // (1-1/(24n))(1-1/mu)^{-1}

  return (expo * t2).truncated(order);
}

}  // namespace pasym
