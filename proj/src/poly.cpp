#include "shepade/poly.hpp"

#include <stdexcept>

namespace shepade {

MpReal poly_eval(const RealPoly& p, const MpReal& x) {
  if (p.is_zero()) return MpReal(x.precision());
  MpReal acc = p.leading();
  if (acc.precision() < x.precision()) acc.set_precision(x.precision());
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc *= x;
    acc += p[static_cast<std::size_t>(k)];
  }
  return acc;
}

MpComplex poly_eval(const ComplexPoly& p, const MpComplex& x) {
  if (p.is_zero()) return MpComplex(x.precision());
  MpComplex acc = p.leading();
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * x;
    acc += p[static_cast<std::size_t>(k)];
  }
  return acc;
}

MpComplex poly_eval(const RealPoly& p, const MpComplex& x) {
  if (p.is_zero()) return MpComplex(x.precision());
  MpComplex acc(p.leading());
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * x;
    acc.re() += p[static_cast<std::size_t>(k)];
  }
  return acc;
}

MpReal poly_eval(const RatPoly& p, const MpReal& x) {
  MpReal acc(x.precision());
  for (int k = p.degree(); k >= 0; --k) {
    acc *= x;
    MpReal c(x.precision());
    mpfr_set_q(c.raw(), p[static_cast<std::size_t>(k)].get_mpq_t(), MPFR_RNDN);
    acc += c;
  }
  return acc;
}

MpComplex poly_eval(const RatPoly& p, const MpComplex& x) {
  const mpfr_prec_t bits = x.precision();
  MpComplex acc(bits);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * x;
    MpReal c(bits);
    mpfr_set_q(c.raw(), p[static_cast<std::size_t>(k)].get_mpq_t(), MPFR_RNDN);
    acc.re() += c;
  }
  return acc;
}

SurdSum poly_eval(const RatPoly& p, const Surd& x) {
  // x^j = c^j k^{floor(j/2)} (sqrt k)^{j mod 2}
  Rational even_part = 0, odd_part = 0;
  const Rational c = x.coeff();
  const Rational k(x.radicand());
  Rational power = 1;  // c^j k^{floor(j/2)}
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j % 2 == 0) {
      even_part += p[j] * power;
    } else {
      odd_part += p[j] * power;
    }
    power *= c;
    if (j % 2 == 1) power *= k;
  }
  SurdSum s;
  s.add(Surd(even_part));
  s.add(Surd(odd_part, x.radicand()));
  return s;
}

MpReal horner_magnitude(const ComplexPoly& p, const MpReal& abs_x) {
  MpReal acc(abs_x.precision());
  for (int k = p.degree(); k >= 0; --k) {
    acc *= abs_x;
    acc += abs(p[static_cast<std::size_t>(k)]);
  }
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

RatPoly monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly poly_integral(const RatPoly& p) {
  if (p.is_zero()) return RatPoly();
  std::vector<Rational> c(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) c[k + 1] = p[k] / Rational(static_cast<long>(k + 1));
  return RatPoly(std::move(c));
}

SurdSum poly_integrate(const RatPoly& p, const Surd& lo, const Surd& hi) {
  RatPoly anti = poly_integral(p);
  return poly_eval(anti, hi) - poly_eval(anti, lo);
}

RealPoly to_real(const RatPoly& p, const PrecisionCtx& ctx) {
  std::vector<MpReal> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.emplace_back(q, ctx);
  return RealPoly(std::move(c));
}

ComplexPoly to_complex(const RatPoly& p, const PrecisionCtx& ctx) {
  std::vector<MpComplex> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.emplace_back(q, ctx);
  return ComplexPoly(std::move(c));
}

ComplexPoly to_complex(const RealPoly& p) {
  std::vector<MpComplex> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return ComplexPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<RatPoly> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::distance_polynomial(const RatPoly& s2) {
  // (Z - z)^2 = Z^2 - 2 Z z + z^2
  std::size_t n = std::max<std::size_t>(3, s2.size());
  std::vector<RatPoly> c(n);
  c[0] = monomial(2);
  c[1] = monomial(1, -2);
  c[2] = monomial(0, 1);
  for (std::size_t j = 0; j < s2.size(); ++j) c[j] = c[j] + monomial(0, s2[j]);
  return BiPoly(std::move(c));
}

BiPoly BiPoly::derivative_z() const {
  std::vector<RatPoly> d;
  for (std::size_t j = 1; j < c_.size(); ++j) d.push_back(c_[j] * Rational(static_cast<long>(j)));
  return BiPoly(std::move(d));
}

std::vector<Rational> BiPoly::at(const Rational& Z) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& cj : c_) v.push_back(poly_eval(cj, Z));
  return v;
}

ComplexPoly BiPoly::at(const MpComplex& Z) const {
  std::vector<MpComplex> v;
  v.reserve(c_.size());
  for (const auto& cj : c_) v.push_back(poly_eval(cj, Z));
  return ComplexPoly(std::move(v));
}

BigInt bareiss_determinant(std::vector<BigInt> m, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : BigInt(-at(n - 1, n - 1));
}

namespace {

// Newton interpolation through (t, v_t), t = 0..D, returned in monomial form.
RatPoly interpolate_integer_nodes(const std::vector<Rational>& values) {
  const std::size_t m = values.size();
  std::vector<Rational> dd(values);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  }
  // p(Z) = dd0 + dd1 Z + dd2 Z (Z-1) + ...
  RatPoly result;
  RatPoly basis = monomial(0, 1);
  for (std::size_t i = 0; i < m; ++i) {
    result = result + basis * dd[i];
    basis = basis * RatPoly(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
  }
  return result;
}

}  // namespace

RatPoly discriminant_in_z(const BiPoly& p) {
  const int n = p.degree_z();
  if (n < 2) throw std::domain_error("profile too simple for discriminant criterion");
  const RatPoly& lc_poly = p.coeffs().back();
  if (lc_poly.degree() != 0)
    throw std::invalid_argument("discriminant_in_z: leading z-coefficient must not depend on Z");
  const Rational lc = lc_poly[0];

  // Clear denominators so every Sylvester entry is an integer at integer Z.
  BigInt den_lcm = 1;
  for (const auto& cj : p.coeffs())
    for (const auto& q : cj.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());

  // The roots in z grow like |Z|^{2/n}, so the discriminant has degree at
  // most 2(n-1) in Z; sample at Z = 0..2(n-1).
  const int degree_bound = 2 * (n - 1);
  const std::size_t size = static_cast<std::size_t>(2 * n - 1);
  std::vector<Rational> samples;
  samples.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int t = 0; t <= degree_bound; ++t) {
    std::vector<Rational> a = p.at(Rational(t));
    std::vector<BigInt> ai(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      Rational scaled = a[j] * Rational(den_lcm);
      ai[j] = scaled.get_num();
    }
    std::vector<BigInt> m(size * size, BigInt(0));
    // n-1 rows of p, n rows of p'.
    for (int r = 0; r < n - 1; ++r)
      for (int j = 0; j <= n; ++j)
        m[static_cast<std::size_t>(r) * size + static_cast<std::size_t>(r + j)] = ai[static_cast<std::size_t>(n - j)];
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) {
        std::size_t deg = static_cast<std::size_t>(n - j);  // coefficient of z^{deg-1} in p'
        m[static_cast<std::size_t>(n - 1 + r) * size + static_cast<std::size_t>(r + j)] =
            ai[deg] * static_cast<long>(deg);
      }
    samples.emplace_back(bareiss_determinant(std::move(m), size));
  }
  RatPoly res = interpolate_integer_nodes(samples);

  // Res(L p, L p') = L^{2n-1} Res(p, p').
  BigInt lpow;
  mpz_pow_ui(lpow.get_mpz_t(), den_lcm.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
  Rational scale = Rational(1) / (Rational(lpow) * lc);
  if (((n * (n - 1)) / 2) % 2 == 1) scale = -scale;
  return res * scale;
}

// ---------------------------------------------------------------------------
// Orthogonal polynomials

Rational gegenbauer(int k, const Rational& nu, const Rational& x) {
  if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
  Rational c0 = 1;
  if (k == 0) return c0;
  Rational c1 = 2 * nu * x;
  for (int j = 2; j <= k; ++j) {
    Rational c2 = (2 * (Rational(j) + nu - 1) * x * c1 - (Rational(j) + 2 * nu - 2) * c0) / Rational(j);
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  return c1;
}

MpReal gegenbauer(int k, const Rational& nu, const MpReal& x) {
  if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
  const mpfr_prec_t bits = x.precision();
  auto rat = [bits](const Rational& q) {
    MpReal r(bits);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
  };
  MpReal c0 = rat(Rational(1));
  if (k == 0) return c0;
  MpReal c1 = rat(2 * nu) * x;
  for (int j = 2; j <= k; ++j) {
    MpReal c2 = rat(2 * (Rational(j) + nu - 1)) * x * c1;
    sub_mul(c2, rat(Rational(j) + 2 * nu - 2), c0);
    c2 /= static_cast<long>(j);
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  return c1;
}

std::vector<MpReal> legendre_all(int nmax, const MpReal& x) {
  if (nmax < 0) throw std::invalid_argument("legendre: negative degree");
  std::vector<MpReal> p;
  p.reserve(static_cast<std::size_t>(nmax) + 1);
  MpReal one(x.precision());
  mpfr_set_ui(one.raw(), 1, MPFR_RNDN);
  p.push_back(one);
  if (nmax == 0) return p;
  p.push_back(x);
  for (int n = 1; n < nmax; ++n) {
    MpReal next = x * p[static_cast<std::size_t>(n)] * static_cast<long>(2 * n + 1);
    next -= p[static_cast<std::size_t>(n - 1)] * static_cast<long>(n);
    next /= static_cast<long>(n + 1);
    p.push_back(std::move(next));
  }
  return p;
}

MpReal legendre(int n, const MpReal& x) {
  auto all = legendre_all(n, x);
  return all.back();
}

}  // namespace shepade
