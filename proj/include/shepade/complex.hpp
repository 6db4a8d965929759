#pragma once

#include "shepade/mp.hpp"

#include <string>

namespace shepade {

/// Complex number over MpReal. Precision of each part follows MpReal rules.
class MpComplex {
 public:
  MpComplex() = default;
  explicit MpComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
  MpComplex(MpReal re) : re_(std::move(re)), im_(re_.precision()) {}  // NOLINT: implicit promotion
  MpComplex(MpReal re, MpReal im) : re_(std::move(re)), im_(std::move(im)) {}
  MpComplex(long re, const PrecisionCtx& ctx) : re_(re, ctx), im_(0L, ctx) {}
  MpComplex(const Rational& re, const PrecisionCtx& ctx) : re_(re, ctx), im_(0L, ctx) {}

  const MpReal& re() const { return re_; }
  const MpReal& im() const { return im_; }
  MpReal& re() { return re_; }
  MpReal& im() { return im_; }

  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  MpComplex operator-() const { return {-re_, -im_}; }
  MpComplex& operator+=(const MpComplex& o);
  MpComplex& operator-=(const MpComplex& o);
  MpComplex& operator*=(const MpComplex& o);
  MpComplex& operator/=(const MpComplex& o);
  MpComplex& operator*=(const MpReal& o);
  MpComplex& operator/=(const MpReal& o);

  friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
  friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b);
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b);
  friend MpComplex operator*(MpComplex a, const MpReal& b) { return a *= b; }
  friend MpComplex operator*(const MpReal& b, MpComplex a) { return a *= b; }
  friend MpComplex operator/(MpComplex a, const MpReal& b) { return a /= b; }
  friend MpComplex operator*(MpComplex a, long b) {
    a.re_ *= b;
    a.im_ *= b;
    return a;
  }

  friend bool operator==(const MpComplex& a, const MpComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  MpReal re_;
  MpReal im_;
};

/// The imaginary unit at the given precision.
MpComplex imag_unit(mpfr_prec_t bits);
/// i * z.
MpComplex times_i(const MpComplex& z);
MpComplex conj(const MpComplex& z);
MpReal abs(const MpComplex& z);
/// |z|^2
MpReal norm(const MpComplex& z);
MpReal arg(const MpComplex& z);
/// Principal branch.
MpComplex log(const MpComplex& z);
/// Principal branch (branch cut on the negative real axis).
MpComplex sqrt(const MpComplex& z);
MpComplex reciprocal(const MpComplex& z);

/// |z|^2 <= tol^2 * scale^2 style comparisons are done by the callers; this is
/// the plain distance |a - b|.
MpReal distance(const MpComplex& a, const MpComplex& b);

std::string to_sci(const MpComplex& z, int sig);

}  // namespace shepade
