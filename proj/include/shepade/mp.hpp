#pragma once

// Arbitrary-precision scalars.
//
// MpReal wraps an MPFR value and carries its own precision; binary operations
// produce a result at the larger of the two operand precisions. There is no
// ambient default precision: every value is created from a PrecisionCtx or
// from another value.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace shepade {

using Rational = mpq_class;
using BigInt = mpz_class;

class MpReal;

/// Working precision in decimal digits, plus the guard used to derive the
/// comparison tolerance rel_tol = 10^-(digits - guard).
class PrecisionCtx {
 public:
  explicit PrecisionCtx(int digits = 50, int guard = 10);

  int digits() const { return digits_; }
  int guard() const { return guard_; }
  mpfr_prec_t bits() const;

  /// log10 of rel_tol.
  int tol_exponent() const { return -(digits_ - guard_); }
  MpReal rel_tol() const;

  /// Same guard, different digit count.
  PrecisionCtx with_digits(int digits) const { return PrecisionCtx(digits, guard_); }

  friend bool operator==(const PrecisionCtx&, const PrecisionCtx&) = default;

 private:
  int digits_;
  int guard_;
};

mpfr_prec_t digits_to_bits(int digits);

class MpReal {
 public:
  MpReal();
  explicit MpReal(mpfr_prec_t bits);
  MpReal(long v, const PrecisionCtx& ctx);
  MpReal(double v, const PrecisionCtx& ctx);
  MpReal(const Rational& q, const PrecisionCtx& ctx);
  MpReal(const BigInt& z, const PrecisionCtx& ctx);
  /// Decimal literal such as "1.25e-3". Throws std::invalid_argument.
  MpReal(std::string_view text, const PrecisionCtx& ctx);

  /// Copy of `other` rounded to `bits`.
  MpReal(const MpReal& other, mpfr_prec_t bits);

  MpReal(const MpReal& other);
  MpReal(MpReal&& other) noexcept;
  MpReal& operator=(const MpReal& other);
  MpReal& operator=(MpReal&& other) noexcept;
  ~MpReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Raises (exactly) or lowers (with rounding) the stored precision.
  void set_precision(mpfr_prec_t bits);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Binary exponent e such that |x| = m * 2^e with 0.5 <= m < 1.
  long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  MpReal operator-() const;

  MpReal& operator+=(const MpReal& o);
  MpReal& operator-=(const MpReal& o);
  MpReal& operator*=(const MpReal& o);
  MpReal& operator/=(const MpReal& o);
  MpReal& operator+=(long o);
  MpReal& operator-=(long o);
  MpReal& operator*=(long o);
  MpReal& operator/=(long o);

  friend MpReal operator+(const MpReal& a, const MpReal& b);
  friend MpReal operator-(const MpReal& a, const MpReal& b);
  friend MpReal operator*(const MpReal& a, const MpReal& b);
  friend MpReal operator/(const MpReal& a, const MpReal& b);
  friend MpReal operator+(const MpReal& a, long b);
  friend MpReal operator-(const MpReal& a, long b);
  friend MpReal operator*(const MpReal& a, long b);
  friend MpReal operator/(const MpReal& a, long b);
  friend MpReal operator+(long a, const MpReal& b) { return b + a; }
  friend MpReal operator-(long a, const MpReal& b);
  friend MpReal operator*(long a, const MpReal& b) { return b * a; }
  friend MpReal operator/(long a, const MpReal& b);

  // No implicit double -> long narrowing in arithmetic.
  friend MpReal operator+(const MpReal&, double) = delete;
  friend MpReal operator-(const MpReal&, double) = delete;
  friend MpReal operator*(const MpReal&, double) = delete;
  friend MpReal operator/(const MpReal&, double) = delete;
  friend MpReal operator+(double, const MpReal&) = delete;
  friend MpReal operator-(double, const MpReal&) = delete;
  friend MpReal operator*(double, const MpReal&) = delete;
  friend MpReal operator/(double, const MpReal&) = delete;

  friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const MpReal& a, const MpReal& b);
  friend bool operator==(const MpReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const MpReal& a, long b);
  friend bool operator==(const MpReal& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const MpReal& a, double b);
  friend bool operator==(const MpReal& a, int b) { return a == static_cast<long>(b); }
  friend std::partial_ordering operator<=>(const MpReal& a, int b) { return a <=> static_cast<long>(b); }

 private:
  mpfr_t v_;
};

// acc <- acc - a*b, at acc's precision.
void sub_mul(MpReal& acc, const MpReal& a, const MpReal& b);
// acc <- acc + a*b, at acc's precision.
void add_mul(MpReal& acc, const MpReal& a, const MpReal& b);

MpReal abs(const MpReal& x);
MpReal sqrt(const MpReal& x);
MpReal exp(const MpReal& x);
MpReal log(const MpReal& x);
MpReal log10(const MpReal& x);
MpReal sin(const MpReal& x);
MpReal cos(const MpReal& x);
MpReal atan(const MpReal& x);
MpReal atan2(const MpReal& y, const MpReal& x);
MpReal asinh(const MpReal& x);
MpReal pow(const MpReal& x, long n);
MpReal pow(const MpReal& x, const MpReal& y);
MpReal hypot(const MpReal& x, const MpReal& y);
MpReal min(const MpReal& a, const MpReal& b);
MpReal max(const MpReal& a, const MpReal& b);

MpReal pi(const PrecisionCtx& ctx);
MpReal pi(mpfr_prec_t bits);
/// 10^e at the given precision.
MpReal pow10(long e, const PrecisionCtx& ctx);

/// Correctly rounded conversion of an exact rational.
MpReal mp_from_rational(const Rational& q, const PrecisionCtx& ctx);

/// Rounds x to d significant decimal digits (ties to even on the exact binary
/// value). The result keeps x's binary precision.
MpReal mp_round_to_digits(const MpReal& x, int d);

/// Scientific notation with `sig` significant digits, e.g. "-1.2500e-03".
std::string to_sci(const MpReal& x, int sig);

/// Plain significant-digit string without exponent when |x| is moderate;
/// used for human-readable summaries.
std::string to_fixed_sig(const MpReal& x, int sig);

/// log10|x| as a double; returns `floor_value` for x == 0.
double log10_abs(const MpReal& x, double floor_value = -1.0e300);

std::ostream& operator<<(std::ostream& os, const MpReal& x);

/// Parses "p", "p/q", or a decimal like "-0.125" into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace shepade
