#include "doctest.h"

#include "shepade/errors.hpp"
#include "shepade/planet.hpp"

using namespace shepade;

namespace {

RatPoly rp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

ShapeProfile unit_sphere() { return ShapeProfile::polynomial(rp({1, 0, -1}), Rational(-1), Rational(1)); }
ShapeProfile smoothed_cylinder() { return ShapeProfile::polynomial(rp({1, 0, 0, 0, -1}), Rational(-1), Rational(1)); }
ShapeProfile unit_brillouin_cylinder() { return ShapeProfile::cylinder(Rational(1, 2), Surd::parse("sqrt(3)")); }

MpReal rel_err(const MpReal& a, const MpReal& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

// Elementary antiderivative of sqrt(u^2 + a^2).
MpReal sqrt_antiderivative(const MpReal& u, const MpReal& a) {
  return (u * sqrt(u * u + a * a) + a * a * asinh(u / a)) / 2L;
}

}  // namespace

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(ShapeProfile::polynomial(rp({1, 0, -2}), Rational(-1), Rational(1)), InputError);
  CHECK_THROWS_AS(ShapeProfile::polynomial(rp({1}), Rational(1), Rational(-1)), InputError);
  CHECK_THROWS_AS(ShapeProfile::spheroid(Rational(0), Rational(1)), InputError);
  CHECK_THROWS_AS(ShapeProfile::cylinder(Rational(1), Rational(-2)), InputError);
  CHECK(smoothed_cylinder().is_even());
  CHECK(unit_brillouin_cylinder().is_even());
  CHECK_FALSE(ShapeProfile::polynomial(rp({1, 1}), Rational(-1), Rational(1)).is_even());
}

TEST_CASE("mass") {
  PrecisionCtx ctx(40);
  CHECK(rel_err(mass(ShapeProfile::spheroid(Rational(1), Rational(1)), ctx), pi(ctx) * 4L / 3L) <= ctx.rel_tol());
  MpReal cyl = pi(ctx) * sqrt(MpReal(3L, ctx)) / 4L;
  CHECK(rel_err(mass(unit_brillouin_cylinder(), ctx), cyl) <= ctx.rel_tol());
  CHECK(rel_err(mass(smoothed_cylinder(), ctx), pi(ctx) * 8L / 5L) <= ctx.rel_tol());
}

TEST_CASE("closed-form coefficients") {
  PrecisionCtx ctx(50);
  SUBCASE("spheroid") {
    auto p = ShapeProfile::spheroid(Rational(3, 2), Rational(1));
    SheSeries s = she_closed_form(p, 6, ctx);
    MpReal gm = mass(p, ctx);
    CHECK(rel_err(s.coeffs[0], -gm) <= ctx.rel_tol());
    CHECK(rel_err(s.coeffs[2] / gm, MpReal(Rational(1, 4), ctx)) <= ctx.rel_tol());
    CHECK(s.coeffs[1].is_zero());
    CHECK(s.coeffs[5].is_zero());
  }
  SUBCASE("cylinder monopole") {
    SheSeries s = she_closed_form(unit_brillouin_cylinder(), 4, ctx);
    CHECK(rel_err(s.coeffs[0], -mass(unit_brillouin_cylinder(), ctx)) <= ctx.rel_tol());
  }
  SUBCASE("cylinder against the Gegenbauer form evaluated in floating point") {
    // Direct evaluation of the formula with an irrational t.
    SheSeries s = she_closed_form(unit_brillouin_cylinder(), 20, ctx);
    MpReal a(Rational(1, 2), ctx);
    MpReal L = sqrt(MpReal(3L, ctx));
    MpReal q = L / (a * 2L);
    MpReal one_q2 = 1L + q * q;
    MpReal t = q / sqrt(one_q2);
    MpReal gm = mass(unit_brillouin_cylinder(), ctx);
    for (int n = 0; 2 * n <= 20; ++n) {
      MpReal v = -gm * pow(a, 2L * n) * (a * 4L / L) * pow(one_q2, n) * sqrt(one_q2) /
                 ((2L * n + 1) * (2L * n + 2) * (2L * n + 3)) * gegenbauer(2 * n + 1, Rational(3, 2), t);
      CHECK(rel_err(s.coeffs[static_cast<std::size_t>(2 * n)], v) <= ctx.rel_tol());
    }
  }
  CHECK_THROWS_AS(she_closed_form(smoothed_cylinder(), 4, ctx), std::invalid_argument);
}

TEST_CASE("exact symbolic coefficients") {
  PrecisionCtx ctx(60);
  SUBCASE("sphere has only a monopole") {
    auto ints = she_exact_integrals(unit_sphere(), 30);
    for (std::size_t n = 1; n < ints.size(); ++n) CHECK(ints[n].is_zero());
    CHECK_FALSE(ints[0].is_zero());
  }
  SUBCASE("odd coefficients vanish exactly for even profiles") {
    auto ints = she_exact_integrals(smoothed_cylinder(), 40);
    for (std::size_t n = 1; n < ints.size(); n += 2) CHECK(ints[n].is_zero());
  }
  SUBCASE("spheroid as a polynomial profile matches the closed form") {
    auto sph = ShapeProfile::spheroid(Rational(3, 2), Rational(1));
    auto poly = ShapeProfile::polynomial(sph.s2(), Rational(-1), Rational(1));
    SheSeries a = she_exact_symbolic(poly, 40, ctx);
    SheSeries b = she_closed_form(sph, 40, ctx);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(abs(a.coeffs[n] - b.coeffs[n]) <= ctx.rel_tol() * abs(b.coeffs[0]));
  }
  SUBCASE("cylinder with surd bounds matches the closed form") {
    SheSeries a = she_exact_symbolic(unit_brillouin_cylinder(), 60, ctx);
    SheSeries b = she_closed_form(unit_brillouin_cylinder(), 60, ctx);
    for (std::size_t n = 0; n <= 60; ++n) CHECK(abs(a.coeffs[n] - b.coeffs[n]) <= ctx.rel_tol() * abs(b.coeffs[0]));
  }
  SUBCASE("monopole of the quartic profile") {
    SheSeries s = she_exact_symbolic(smoothed_cylinder(), 2, ctx);
    CHECK(rel_err(s.coeffs[0], -pi(ctx) * 8L / 5L) <= ctx.rel_tol());
  }
  SUBCASE("G and rho scale the coefficients") {
    auto heavy = ShapeProfile::polynomial(rp({1, 0, 0, 0, -1}), Rational(-1), Rational(1), Rational(3), Rational(2));
    SheSeries s = she_exact_symbolic(heavy, 4, ctx);
    SheSeries base = she_exact_symbolic(smoothed_cylinder(), 4, ctx);
    CHECK(rel_err(s.coeffs[4], base.coeffs[4] * 6L) <= ctx.rel_tol());
  }
}

TEST_CASE("quadrature coefficients") {
  PrecisionCtx ctx(40);
  SUBCASE("cylinder") {
    SheSeries q = she_quadrature(unit_brillouin_cylinder(), 60, ctx);
    SheSeries c = she_closed_form(unit_brillouin_cylinder(), 60, ctx);
    CHECK(q.provenance == Provenance::quadrature);
    for (std::size_t n = 0; n <= 60; ++n)
      CHECK(abs(q.coeffs[n] - c.coeffs[n]) <= pow10(-ctx.digits() + 15, ctx) * abs(c.coeffs[0]));
  }
  SUBCASE("sphere") {
    SheSeries q = she_quadrature(unit_sphere(), 4, ctx);
    CHECK(abs(q.coeffs[2]) <= ctx.rel_tol());
  }
  SUBCASE("quartic profile against exact") {
    SheSeries q = she_quadrature(smoothed_cylinder(), 100, ctx);
    SheSeries e = she_exact_symbolic(smoothed_cylinder(), 100, ctx);
    for (std::size_t n = 0; n <= 100; n += 2) CHECK(rel_err(q.coeffs[n], e.coeffs[n]) <= ctx.rel_tol() * 1000L);
  }
}

TEST_CASE("A_0 is minus G rho V on every path") {
  PrecisionCtx ctx(40);
  for (const auto& p : {unit_brillouin_cylinder(), smoothed_cylinder(), ShapeProfile::spheroid(Rational(2), Rational(1)),
                        ShapeProfile::polynomial(rp({4, 0, 3, 0, -1}), Rational(-2), Rational(2))}) {
    MpReal expected = -mass(p, ctx);
    CHECK(rel_err(she_exact_symbolic(p, 0, ctx).coeffs[0], expected) <= ctx.rel_tol() * 100L);
    CHECK(rel_err(she_quadrature(p, 0, ctx).coeffs[0], expected) <= ctx.rel_tol() * 100L);
  }
}

TEST_CASE("monopole dominance far away") {
  PrecisionCtx ctx(40);
  auto p = smoothed_cylinder();
  SheSeries s = she_exact_symbolic(p, 40, ctx);
  MpReal R = brillouin_radius(p, ctx);
  MpReal Z = R * 100L;
  // Terms are dominated by the monopole times (R/Z)^n.
  MpReal t0 = abs(s.coeffs[0]) / Z;
  for (std::size_t n = 1; n < s.coeffs.size(); ++n) {
    MpReal tn = abs(s.coeffs[n]) / pow(Z, static_cast<long>(n) + 1);
    CHECK(tn <= t0 * pow(R / Z, static_cast<long>(n)) * 10L);
  }
}

TEST_CASE("brillouin radius") {
  PrecisionCtx ctx(50);
  CHECK(abs(brillouin_radius(unit_brillouin_cylinder(), ctx) - 1L) <= ctx.rel_tol());
  auto sphere = ShapeProfile::spheroid(Rational(3, 2), Rational(3, 2));
  CHECK(abs(brillouin_radius(sphere, ctx) - MpReal(1.5, ctx)) <= ctx.rel_tol());
  CHECK(rel_err(brillouin_radius(smoothed_cylinder(), ctx), sqrt(MpReal(5L, ctx)) / 2L) <= ctx.rel_tol());
  CHECK(rel_err(brillouin_radius(ShapeProfile::spheroid(Rational(3, 2), Rational(1)), ctx), MpReal(1.5, ctx)) <=
        ctx.rel_tol());
  // Maximum at an interior critical point of z^2 + s^2 away from z = 0.
  auto tilted = ShapeProfile::polynomial(rp({2, 1, 0, 0, -1}), Rational(-1), Rational(1));
  MpReal r = brillouin_radius(tilted, ctx);
  MpReal best(0L, ctx);
  for (long i = 0; i <= 20000; ++i) {
    MpReal z = MpReal(-1L, ctx) + MpReal(i, ctx) / 10000L;
    best = max(best, z * z + poly_eval(tilted.s2(), z));
  }
  CHECK(r * r >= best);
  CHECK(r * r - best <= MpReal(1e-8, ctx));
}

TEST_CASE("on-axis potential") {
  PrecisionCtx ctx(40);
  SUBCASE("shell theorem") {
    MpReal v = potential_axis_exact(unit_sphere(), MpReal(2L, ctx), ctx);
    CHECK(rel_err(v, -pi(ctx) * 4L / 3L / 2L) <= ctx.rel_tol() * 100L);
  }
  SUBCASE("spheroid against the closed form") {
    auto p = ShapeProfile::spheroid(Rational(3, 2), Rational(1));
    MpReal v = potential_axis_exact(p, MpReal(3L, ctx), ctx);
    MpComplex c = potential_spheroid_closed(p, MpComplex(MpReal(3L, ctx)), ctx);
    CHECK(rel_err(v, c.re()) <= ctx.rel_tol() * 100L);
  }
  SUBCASE("cylinder below the Brillouin sphere against the antiderivative") {
    MpReal Z(0.9, ctx);
    MpReal v = potential_axis_exact(unit_brillouin_cylinder(), Z, ctx);
    MpReal a(0.5, ctx);
    MpReal h = sqrt(MpReal(3L, ctx)) / 2L;
    MpReal inner = sqrt_antiderivative(Z + h, a) - sqrt_antiderivative(Z - h, a) - Z * h * 2L;
    CHECK(rel_err(v, -pi(ctx) * 2L * inner) <= ctx.rel_tol() * 100L);
  }
  SUBCASE("points on or inside the planet are rejected") {
    CHECK_THROWS_AS(potential_axis_exact(unit_sphere(), MpReal(1L, ctx), ctx), std::domain_error);
    CHECK_THROWS_AS(potential_axis_exact(unit_sphere(), MpReal(0.5, ctx), ctx), std::domain_error);
  }
}

TEST_CASE("spheroid closed form") {
  PrecisionCtx ctx(60);
  auto p = ShapeProfile::spheroid(Rational(3, 2), Rational(1));
  MpReal gm = mass(p, ctx);
  SUBCASE("monopole limit") {
    MpReal Z(1e6, ctx);
    MpComplex v = potential_spheroid_closed(p, MpComplex(Z), ctx);
    CHECK(abs(v.re() * Z / gm + 1L) <= MpReal(1e-11, ctx));
  }
  SUBCASE("series sum inside the convergence region") {
    MpReal Z(3L, ctx);
    SheSeries s = she_closed_form(p, 200, ctx);
    MpReal sum(0L, ctx);
    MpReal zp = Z;
    for (const auto& a : s.coeffs) {
      sum += a / zp;
      zp *= Z;
    }
    MpComplex v = potential_spheroid_closed(p, MpComplex(Z), ctx);
    CHECK(abs(v.re() - sum) <= MpReal(1e-30, ctx));
  }
  SUBCASE("real on the real axis") {
    MpComplex v = potential_spheroid_closed(p, MpComplex(MpReal(2L, ctx)), ctx);
    CHECK(abs(v.im()) <= ctx.rel_tol());
  }
  SUBCASE("branch points") {
    MpComplex focus(MpReal(0L, ctx), sqrt(MpReal(Rational(5, 4), ctx)));
    CHECK_THROWS_AS(potential_spheroid_closed(p, focus, ctx), std::domain_error);
    CHECK_THROWS_AS(potential_spheroid_closed(p, MpComplex(MpReal(0L, ctx)), ctx), std::domain_error);
  }
}

TEST_CASE("coefficient rounding against a decimal-string oracle") {
  PrecisionCtx ctx(60);
  MpReal a2 = she_closed_form(unit_brillouin_cylinder(), 2, ctx).coeffs[2];
  std::string digits = to_fixed_sig(-a2, 40);  // positive, plain decimal
  // Oracle: keep 12 significant digits from the string, round half up.
  std::string mant;
  int point = -1;
  for (char ch : digits) {
    if (ch == '.') point = static_cast<int>(mant.size());
    else if (ch >= '0' && ch <= '9') mant += ch;
  }
  std::size_t lead = mant.find_first_not_of('0');
  std::string sig = mant.substr(lead, 12);
  bool up = mant[lead + 12] >= '5';
  BigInt m(sig);
  if (up) m += 1;
  int exp10 = point - static_cast<int>(lead) - 12;
  Rational oracle = exp10 >= 0 ? Rational(m * (BigInt(10) ^ 0)) : Rational(m);
  BigInt scale = 1;
  for (int i = 0; i < std::abs(exp10); ++i) scale *= 10;
  oracle = exp10 >= 0 ? Rational(m * scale) : Rational(m, scale);
  MpReal rounded = mp_round_to_digits(a2, 12);
  CHECK(abs(rounded + MpReal(oracle, ctx)) <= abs(a2) * pow10(-50, ctx));
}

TEST_CASE("precision monotonicity") {
  PrecisionCtx lo(40), hi(60);
  SheSeries a = she_closed_form(unit_brillouin_cylinder(), 30, lo);
  SheSeries b = she_closed_form(unit_brillouin_cylinder(), 30, hi);
  for (std::size_t n = 0; n <= 30; n += 2) CHECK(rel_err(a.coeffs[n], b.coeffs[n]) <= lo.rel_tol() * 10L);
}
