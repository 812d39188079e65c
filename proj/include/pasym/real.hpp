#ifndef PASYM_REAL_HPP
#define PASYM_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace pasym {

/// Arbitrary-precision real number backed by MPFR.
///
/// Every value carries its own mantissa precision, fixed at construction.
/// Binary operations round to the larger of the two operand precisions
/// (MPFR round-to-nearest), so a computation seeded from values created at
/// `bits` stays at `bits` throughout.  Values are immutable in spirit: all
/// operations return new objects.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  static Real zero(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }
  static Real one(mpfr_prec_t prec) { return from_long(1, prec); }

  static Real from_long(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_unsigned(unsigned long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_mpz(const mpz_class& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static Real from_mpq(const mpq_class& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static Real from_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Exact comparison of the stored (binary-rational) values.
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, long b) { return a + from_long(b, a.precision()); }
  friend Real operator-(const Real& a, long b) { return a - from_long(b, a.precision()); }
  friend Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b) { return from_long(a, b.precision()) - b; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b) { return from_long(a, b.precision()) / b; }

  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  /// this * 2^e, exact.
  Real mul_2si(long e) const {
    Real r(precision());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

  friend Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sin(const Real& a) {
    Real r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real cos(const Real& a) {
    Real r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sinh(const Real& a) {
    Real r(a.precision());
    mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real cosh(const Real& a) {
    Real r(a.precision());
    mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  /// a^e for integer e (e may be negative; a != 0 then).
  friend Real pow_si(const Real& a, long e) {
    Real r(a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend Real min(const Real& a, const Real& b) { return a < b ? a : b; }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

  long to_long_floor() const {
    Real f(precision());
    mpfr_floor(f.v_, v_);
    return mpfr_get_si(f.v_, MPFR_RNDN);
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Distance to the nearest integer.
  Real dist_to_nearest_integer() const {
    Real n(precision());
    mpfr_round(n.v_, v_);
    return abs(*this - n);
  }

  /// Canonical scientific-notation decimal string with `digits` significant
  /// digits ("d.dd...e+xx").  Deterministic for identical inputs.
  std::string str(int digits) const {
    if (digits < 2) digits = 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t join(const Real& a, const Real& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
  }

  mpfr_t v_;
};

}  // namespace pasym

#endif  // PASYM_REAL_HPP
