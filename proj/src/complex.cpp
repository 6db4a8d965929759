#include "shepade/complex.hpp"

namespace shepade {

MpComplex& MpComplex::operator+=(const MpComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

MpComplex& MpComplex::operator-=(const MpComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

MpComplex& MpComplex::operator*=(const MpComplex& o) {
  *this = *this * o;
  return *this;
}

MpComplex& MpComplex::operator/=(const MpComplex& o) {
  *this = *this / o;
  return *this;
}

MpComplex& MpComplex::operator*=(const MpReal& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

MpComplex& MpComplex::operator/=(const MpReal& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  MpReal re = a.re_ * b.re_;
  sub_mul(re, a.im_, b.im_);
  MpReal im = a.re_ * b.im_;
  add_mul(im, a.im_, b.re_);
  return {std::move(re), std::move(im)};
}

MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  // Exponent range of MPFR makes the textbook formula safe from overflow.
  MpReal den = norm(b);
  MpReal re = a.re_ * b.re_;
  add_mul(re, a.im_, b.im_);
  MpReal im = a.im_ * b.re_;
  sub_mul(im, a.re_, b.im_);
  re /= den;
  im /= den;
  return {std::move(re), std::move(im)};
}

MpComplex imag_unit(mpfr_prec_t bits) {
  MpReal one(bits);
  mpfr_set_ui(one.raw(), 1, MPFR_RNDN);
  return {MpReal(bits), std::move(one)};
}

MpComplex times_i(const MpComplex& z) { return {-z.im(), z.re()}; }

MpComplex conj(const MpComplex& z) { return {z.re(), -z.im()}; }

MpReal abs(const MpComplex& z) { return hypot(z.re(), z.im()); }

MpReal norm(const MpComplex& z) {
  MpReal r = z.re() * z.re();
  add_mul(r, z.im(), z.im());
  return r;
}

MpReal arg(const MpComplex& z) { return atan2(z.im(), z.re()); }

MpComplex log(const MpComplex& z) { return {log(abs(z)), arg(z)}; }

MpComplex sqrt(const MpComplex& z) {
  if (z.is_zero()) return z;
  // sqrt(z) = sqrt((|z|+x)/2) + i sign(y) sqrt((|z|-x)/2), computed without
  // cancellation by dividing through the larger part.
  MpReal m = abs(z);
  if (z.re().sign() >= 0) {
    MpReal t = sqrt((m + z.re()) / 2L);
    MpReal u = z.im() / (t * 2L);
    return {std::move(t), std::move(u)};
  }
  MpReal t = sqrt((m - z.re()) / 2L);
  if (z.im().sign() < 0) t = -t;
  MpReal u = z.im() / (t * 2L);
  return {std::move(u), std::move(t)};
}

MpComplex reciprocal(const MpComplex& z) {
  MpReal den = norm(z);
  return {z.re() / den, -z.im() / den};
}

MpReal distance(const MpComplex& a, const MpComplex& b) {
  return hypot(a.re() - b.re(), a.im() - b.im());
}

std::string to_sci(const MpComplex& z, int sig) {
  std::string im = to_sci(z.im(), sig);
  if (im.front() != '-') im = "+" + im;
  return to_sci(z.re(), sig) + im + "i";
}

}  // namespace shepade
