#include "doctest.h"

#include "shepade/errors.hpp"
#include "shepade/pade.hpp"

#include <random>

using namespace shepade;

namespace {

std::vector<MpReal> to_mp(const std::vector<Rational>& q, const PrecisionCtx& ctx) {
  std::vector<MpReal> out;
  for (const auto& x : q) out.emplace_back(x, ctx);
  return out;
}

// Taylor coefficients of num/den (den[0] != 0), exact.
std::vector<Rational> series_quotient(const std::vector<Rational>& num, const std::vector<Rational>& den, int terms) {
  std::vector<Rational> out(static_cast<std::size_t>(terms), Rational(0));
  for (int m = 0; m < terms; ++m) {
    Rational acc = m < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(m)] : Rational(0);
    for (int j = 1; j <= m && j < static_cast<int>(den.size()); ++j)
      acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(m - j)];
    out[static_cast<std::size_t>(m)] = acc / den[0];
  }
  return out;
}

std::vector<Rational> poly_from_roots_in_w(const std::vector<Rational>& poles) {
  // prod (1 - Z_i w)
  std::vector<Rational> c = {Rational(1)};
  for (const auto& z : poles) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= z * c[k];
    }
    c = std::move(next);
  }
  return c;
}

ShapeProfile spheroid32() { return ShapeProfile::spheroid(Rational(3, 2), Rational(1)); }

}  // namespace

TEST_CASE("square-root example reproduces its coefficients") {
  PrecisionCtx ctx(40);
  std::vector<Rational> c = {Rational(1, 2), Rational(1, 8), Rational(1, 16), Rational(5, 128), Rational(7, 256)};
  std::vector<MpReal> a = to_mp(c, ctx);
  PadeApproximant p = build_pade(a, 2, ctx);
  CHECK(p.effective_N == 2);
  CHECK(p.certified());
  // Re-expand Q/R independently.
  std::vector<Rational> dummy;
  std::vector<MpReal> inv(5, MpReal(0L, ctx));
  inv[0] = MpReal(1L, ctx);
  for (std::size_t m = 1; m < 5; ++m)
    for (std::size_t j = 1; j <= std::min<std::size_t>(m, 2); ++j)
      if (j < p.denominator.size()) inv[m] -= p.denominator[j] * inv[m - j];
  for (std::size_t m = 0; m < 5; ++m) {
    MpReal v(0L, ctx);
    for (std::size_t i = 0; i <= m && i < p.numerator.size(); ++i) v += p.numerator[i] * inv[m - i];
    CHECK(abs(v - a[m]) <= ctx.rel_tol());
  }
}

TEST_CASE("geometric series") {
  PrecisionCtx ctx(40);
  const Rational c(3), r(2, 5);
  std::vector<Rational> q;
  Rational v = c;
  for (int n = 0; n < 3; ++n, v *= r) q.push_back(v);
  PadeApproximant p = build_pade(to_mp(q, ctx), 1, ctx);
  PoleSet ps = pade_poles(p, ctx);
  REQUIRE(ps.poles.size() == 1);
  CHECK(distance(ps.poles[0].location, MpComplex(MpReal(r, ctx))) <= ctx.rel_tol());
  CHECK(distance(ps.poles[0].residue, MpComplex(MpReal(c * r, ctx))) <= ctx.rel_tol());
  PoleSet filtered = filter_froissart(ps, pade_zeros(p, ctx));
  CHECK_FALSE(filtered.poles[0].spurious);
  // The rational function itself: c / (Z - r)
  MpReal Z(3L, ctx);
  CHECK(abs(pade_eval(p, Z) - MpReal(c, ctx) / (Z - MpReal(r, ctx))) <= ctx.rel_tol());
  CHECK_THROWS_AS(pade_eval(p, MpReal(r, ctx)), std::domain_error);
}

TEST_CASE("input validation") {
  PrecisionCtx ctx(30);
  std::vector<MpReal> a(4, MpReal(1L, ctx));
  CHECK_THROWS_AS(build_pade(a, 2, ctx), std::invalid_argument);
  CHECK_THROWS_AS(build_pade(a, 0, ctx), std::invalid_argument);
  std::vector<MpReal> sphere(9, MpReal(0L, ctx));
  sphere[0] = MpReal(-4L, ctx);
  CHECK_THROWS_AS(build_pade(sphere, 4, ctx), NumericalError);
}

TEST_CASE("spheroid approximant") {
  PrecisionCtx ctx(100);
  SheSeries s = she_closed_form(spheroid32(), 200, ctx);
  PadeApproximant p = build_pade(s, 100, ctx);
  CHECK(p.certificate_residual <= pow10(-60, ctx));
  CHECK(p.certified());

  SUBCASE("monopole limit") {
    MpReal Z(1e30, ctx);
    CHECK(abs(pade_eval(p, Z) * Z / s.coeffs[0] - 1L) <= MpReal(1e-25, ctx));
  }
  SUBCASE("matches the closed form") {
    MpReal Z(3L, ctx);
    MpReal exact = potential_spheroid_closed(spheroid32(), MpComplex(Z), ctx).re();
    CHECK(abs(pade_eval(p, Z) / exact - 1L) <= ctx.rel_tol() * 1000L);
    // below the convergence radius of the series as well
    MpReal inner(0.6, ctx);
    MpReal exact_inner = potential_spheroid_closed(spheroid32(), MpComplex(inner), ctx).re();
    CHECK(abs(pade_eval(p, inner) / exact_inner - 1L) <= MpReal(1e-20, ctx));
  }
  SUBCASE("poles lie on the focal segment") {
    PoleSet ps = filter_froissart(pade_poles(p, ctx), pade_zeros(p, ctx));
    MpReal focal = sqrt(MpReal(Rational(5, 4), ctx));
    std::size_t genuine = 0;
    for (const auto& pole : ps.poles) {
      if (pole.spurious) continue;
      ++genuine;
      CHECK(abs(pole.rotated.im()) <= MpReal(1e-10, ctx));
      CHECK(abs(pole.rotated.re()) <= focal * MpReal(1.0001, ctx));
    }
    CHECK(genuine >= 50);
    for (const auto& pole : ps.poles) {
      bool has_conj = false;
      for (const auto& other : ps.poles)
        has_conj = has_conj || distance(other.location, conj(pole.location)) <= MpReal(1e-30, ctx);
      CHECK(has_conj);
    }
  }
}

TEST_CASE("pole accumulation improves with order") {
  PrecisionCtx ctx(80);
  SheSeries s = she_closed_form(spheroid32(), 200, ctx);
  MpReal focal = sqrt(MpReal(Rational(5, 4), ctx));
  std::vector<MpReal> gaps;
  for (int N : {25, 50, 100}) {
    PadeApproximant p = build_pade(s, N, ctx);
    PoleSet ps = filter_froissart(pade_poles(p, ctx), pade_zeros(p, ctx));
    // distance from the focus to the nearest genuine rotated pole
    MpReal gap(1000L, ctx);
    for (const auto& pole : ps.poles)
      if (!pole.spurious) gap = min(gap, distance(pole.rotated, MpComplex(focal)));
    gaps.push_back(gap);
  }
  CHECK(gaps[2] < gaps[0]);
  CHECK(gaps[2] <= MpReal(0.075, ctx));
}

TEST_CASE("froissart filter") {
  PrecisionCtx ctx(30);
  PoleSet ps;
  for (double z : {1.0001, 2.0, -3.0}) {
    Pole p;
    p.location = MpComplex(MpReal(z, ctx));
    p.residue = MpComplex(MpReal(1L, ctx));
    p.rotated = times_i(p.location);
    ps.poles.push_back(p);
  }
  ps.poles[2].residue = MpComplex(MpReal(1e-12, ctx));
  std::vector<MpComplex> zeros = {MpComplex(MpReal(1.0002, ctx))};
  PoleSet f = filter_froissart(ps, zeros);
  CHECK(f.poles[0].spurious);
  CHECK_FALSE(f.poles[1].spurious);
  CHECK(f.poles[2].spurious);
  CHECK(f.spurious_count() == 2);
  FroissartOptions loose;
  loose.pair_tol = 1e-5;
  loose.residue_tol = 1e-14;
  CHECK(filter_froissart(ps, zeros, loose).spurious_count() == 0);

  SUBCASE("interlaced chain along a cut stays genuine") {
    PoleSet chain;
    std::vector<MpComplex> between;
    for (int k = 0; k < 5; ++k) {
      Pole p;
      p.location = MpComplex(MpReal(1L, ctx) + MpReal(0.001, ctx) * static_cast<long>(k));
      p.residue = MpComplex(MpReal(0.01, ctx));
      p.rotated = times_i(p.location);
      chain.poles.push_back(p);
      // zero 5e-4 |Z0| away but half a spacing from its pole
      between.push_back(p.location + MpComplex(MpReal(0.0005, ctx)));
    }
    CHECK(filter_froissart(chain, between).spurious_count() == 0);
  }
}

TEST_CASE("colatitude weighting") {
  PrecisionCtx ctx(40);
  SheSeries s = she_closed_form(ShapeProfile::cylinder(Rational(1, 2), Surd::parse("sqrt(3)")), 20, ctx);
  SheSeries same = weight_colatitude(s, MpReal(0L, ctx));
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) CHECK(same.coeffs[n] == s.coeffs[n]);
  SheSeries eq = weight_colatitude(s, pi(ctx) / 2L);
  // P_2n(0) = (-1)^n (2n-1)!! / (2n)!!
  Rational p0 = 1;
  for (int n = 0; 2 * n <= 20; ++n) {
    if (n > 0) p0 *= Rational(-(2 * n - 1), 2 * n);
    MpReal expected = s.coeffs[static_cast<std::size_t>(2 * n)] * MpReal(p0, ctx);
    CHECK(abs(eq.coeffs[static_cast<std::size_t>(2 * n)] - expected) <= ctx.rel_tol() * abs(s.coeffs[0]));
  }
  CHECK_THROWS(weight_colatitude(s, MpReal(-0.1, ctx)));
}

TEST_CASE("order condition on random series") {
  PrecisionCtx ctx(60);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = 2 + trial % 9;
    std::vector<MpReal> a;
    for (int n = 0; n <= 2 * N; ++n) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      a.emplace_back(q, ctx);
    }
    try {
      PadeApproximant p = build_pade(a, N, ctx);
      CHECK(p.certified());
      CHECK(p.denominator[0] == 1L);
    } catch (const NumericalError&) {
      FAIL("random series collapsed");
    }
  }
}

TEST_CASE("exact rational functions are recovered") {
  PrecisionCtx ctx(60);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(7, 19);
  for (int k = 1; k <= 6; ++k) {
    std::vector<Rational> poles;
    for (int i = 0; i < k; ++i) poles.emplace_back(num(rng) == 0 ? 1 : num(rng), den(rng));
    for (auto& z : poles) z.canonicalize();
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
    if (std::find(poles.begin(), poles.end(), Rational(0)) != poles.end()) continue;
    std::vector<Rational> r = poly_from_roots_in_w(poles);
    std::vector<Rational> q;
    for (std::size_t i = 0; i < poles.size(); ++i) q.emplace_back(num(rng) == 0 ? 1 : num(rng));
    const int N = static_cast<int>(poles.size()) + 3;
    std::vector<MpReal> a = to_mp(series_quotient(q, r, 2 * N + 1), ctx);
    PadeApproximant p = build_pade(a, N, ctx);
    CHECK(p.effective_N == static_cast<int>(poles.size()));
    PoleSet ps = pade_poles(p, ctx);
    REQUIRE(ps.poles.size() == poles.size());
    for (const auto& z : poles) {
      MpReal best(1000L, ctx);
      for (const auto& pole : ps.poles) best = min(best, distance(pole.location, MpComplex(MpReal(z, ctx))));
      CHECK(best <= pow10(-40, ctx));
    }
  }
}

TEST_CASE("serial and parallel elimination agree bit for bit") {
  PrecisionCtx ctx(50);
  SheSeries s = she_closed_form(spheroid32(), 60, ctx);
  PadeOptions serial;
  serial.exec = kernels::Exec::serial;
  PadeApproximant a = build_pade(s, 30, ctx, serial);
  PadeApproximant b = build_pade(s, 30, ctx);
  CHECK(a.numerator == b.numerator);
  CHECK(a.denominator == b.denominator);
}
