#pragma once

// Dense univariate polynomials, coefficients stored from degree 0 upward.

#include "shepade/complex.hpp"
#include "shepade/mp.hpp"
#include "shepade/surd.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shepade {

inline bool is_exact_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_exact_zero(const MpReal& x) { return x.is_zero(); }
inline bool is_exact_zero(const MpComplex& z) { return z.is_zero(); }

template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const C& operator[](std::size_t k) const { return c_[k]; }
  const C& leading() const { return c_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_exact_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

using RatPoly = Poly<Rational>;
using RealPoly = Poly<MpReal>;
using ComplexPoly = Poly<MpComplex>;

/// Horner evaluation c0 + x(c1 + x(...)).
inline Rational poly_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p[static_cast<std::size_t>(k)];
  return acc;
}

MpReal poly_eval(const RealPoly& p, const MpReal& x);
MpComplex poly_eval(const ComplexPoly& p, const MpComplex& x);
MpComplex poly_eval(const RealPoly& p, const MpComplex& x);
MpReal poly_eval(const RatPoly& p, const MpReal& x);
MpComplex poly_eval(const RatPoly& p, const MpComplex& x);
/// Exact evaluation at q*sqrt(k).
SurdSum poly_eval(const RatPoly& p, const Surd& x);

/// Sum |c_k| |x|^k, the magnitude scale used for residual tests.
MpReal horner_magnitude(const ComplexPoly& p, const MpReal& abs_x);

template <class C>
Poly<C> poly_derivative(const Poly<C>& p) {
  if (p.degree() <= 0) return Poly<C>();
  std::vector<C> d;
  d.reserve(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  return Poly<C>(std::move(d));
}

template <>
inline RatPoly poly_derivative(const RatPoly& p) {
  if (p.degree() <= 0) return RatPoly();
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  return RatPoly(std::move(d));
}

// Exact arithmetic on rational polynomials.
RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const Rational& s);
/// x^k.
RatPoly monomial(int k, const Rational& c = 1);
/// Antiderivative with zero constant term.
RatPoly poly_integral(const RatPoly& p);
/// Exact definite integral over [lo, hi].
SurdSum poly_integrate(const RatPoly& p, const Surd& lo, const Surd& hi);

RealPoly to_real(const RatPoly& p, const PrecisionCtx& ctx);
ComplexPoly to_complex(const RatPoly& p, const PrecisionCtx& ctx);
ComplexPoly to_complex(const RealPoly& p);

// ---------------------------------------------------------------------------
// Bivariate polynomial in z with coefficients in Q[Z].

class BiPoly {
 public:
  BiPoly() = default;
  /// coeffs[j] is the Q[Z] coefficient of z^j.
  explicit BiPoly(std::vector<RatPoly> coeffs);

  /// p(z) = (Z - z)^2 + s2(z).
  static BiPoly distance_polynomial(const RatPoly& s2);

  int degree_z() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RatPoly>& coeffs() const { return c_; }
  BiPoly derivative_z() const;
  /// Coefficients in z after substituting Z = value.
  std::vector<Rational> at(const Rational& Z) const;
  /// Complex coefficients in z at a complex Z.
  ComplexPoly at(const MpComplex& Z) const;

 private:
  std::vector<RatPoly> c_;
};

/// Discriminant in z of p, as an exact polynomial in Z; normalized as
/// (-1)^{n(n-1)/2} Res_z(p, dp/dz) / lc_z(p) with n = deg_z(p). Requires a
/// leading coefficient in z that does not depend on Z. Throws
/// std::domain_error when deg_z(p) < 2.
RatPoly discriminant_in_z(const BiPoly& p);

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
BigInt bareiss_determinant(std::vector<BigInt> m, std::size_t n);

/// C_k^{(nu)}(x) by the three-term recurrence.
Rational gegenbauer(int k, const Rational& nu, const Rational& x);
MpReal gegenbauer(int k, const Rational& nu, const MpReal& x);
/// P_n(x), Bonnet recurrence.
MpReal legendre(int n, const MpReal& x);
/// P_0(x) .. P_nmax(x).
std::vector<MpReal> legendre_all(int nmax, const MpReal& x);

}  // namespace shepade
