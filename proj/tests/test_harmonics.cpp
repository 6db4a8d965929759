#include "doctest.h"

#include "shepade/harmonics.hpp"
#include "shepade/pade.hpp"
#include "shepade/quadrature.hpp"

#include <cmath>

using namespace shepade;

namespace {

ShapeProfile unit_cylinder() { return ShapeProfile::cylinder(Rational(1, 2), Surd::parse("sqrt(3)")); }

// Potential of a solid cylinder (G = rho = 1) at (R, Z) by direct volume
// integration: the azimuthal integral is 4 K(m) / sqrt((R + s)^2 + (Z - z)^2)
// with m = 4 R s / ((R + s)^2 + (Z - z)^2).
double cylinder_potential_direct(double radius, double half_length, double R, double Z) {
  const int n = 120;
  auto rule = gauss_legendre(n, PrecisionCtx(20));
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const double s = radius * (rule->nodes[static_cast<std::size_t>(i)].to_double() + 1) / 2;
    const double ws = radius / 2 * rule->weights[static_cast<std::size_t>(i)].to_double();
    for (int j = 0; j < n; ++j) {
      const double z = half_length * rule->nodes[static_cast<std::size_t>(j)].to_double();
      const double wz = half_length * rule->weights[static_cast<std::size_t>(j)].to_double();
      const double q = (R + s) * (R + s) + (Z - z) * (Z - z);
      const double k = std::sqrt(4 * R * s / q);
      total += ws * wz * s * 4 * std::comp_ellint_1(k) / std::sqrt(q);
    }
  }
  return -total;
}

}  // namespace

TEST_CASE("on the axis the partial sum is the plain series") {
  PrecisionCtx ctx(40);
  SheSeries s = she_closed_form(unit_cylinder(), 60, ctx);
  MpReal r(1.7, ctx);
  MpReal expected(ctx.bits());
  for (int n = 0; n <= 60; ++n) expected += s.coeffs[static_cast<std::size_t>(n)] / pow(r, static_cast<long>(n + 1));
  CHECK(abs(potential(s, r, MpReal(ctx.bits()), 60) - expected) <= ctx.rel_tol() * abs(expected));
}

TEST_CASE("sphere: -GM/r in every direction") {
  PrecisionCtx ctx(40);
  ShapeProfile sphere = ShapeProfile::spheroid(Surd(2), Surd(2), Rational(3), Rational(5));
  SheSeries s = she_exact_symbolic(sphere, 20, ctx);
  MpReal gm = mass(sphere, ctx) * 5L;
  for (double r : {2.5, 4.0, 30.0}) {
    for (double theta : {0.0, 0.4, 1.5707963, 3.0}) {
      MpReal value = potential(s, MpReal(r, ctx), MpReal(theta, ctx), 20);
      CHECK(abs(value + gm / MpReal(r, ctx)) <= ctx.rel_tol() * gm);
    }
  }
}

TEST_CASE("off-axis cylinder against direct volume integration") {
  PrecisionCtx ctx(40);
  SheSeries s = she_closed_form(unit_cylinder(), 120, ctx);
  const double r = 1.5, theta = 1.1;
  const double direct = cylinder_potential_direct(0.5, std::sqrt(3.0) / 2, r * std::sin(theta), r * std::cos(theta));
  const double series = potential(s, MpReal(r, ctx), MpReal(theta, ctx), 120).to_double();
  CHECK(std::fabs(series - direct) <= 1e-10 * std::fabs(direct));
}

TEST_CASE("colatitude promotion agrees term by term") {
  PrecisionCtx ctx(50);
  SheSeries s = she_closed_form(unit_cylinder(), 80, ctx);
  for (double theta : {0.3, 1.2, 2.9}) {
    MpReal t(theta, ctx);
    SheSeries weighted = weight_colatitude(s, t);
    for (int n_terms : {0, 7, 80}) {
      MpReal r(1.3, ctx);
      CHECK(potential(s, r, t, n_terms) == potential(weighted, r, MpReal(ctx.bits()), n_terms));
    }
  }
}

TEST_CASE("cylinder at r = 1.5, theta = pi/3 matches the weighted Pade") {
  PrecisionCtx ctx(60);
  SheSeries s = she_closed_form(unit_cylinder(), 200, ctx);
  MpReal theta = pi(ctx) / 3L;
  MpReal r(1.5, ctx);
  MpReal sum = potential(s, r, theta, 200);
  PadeApproximant p = build_pade(weight_colatitude(s, theta), 100, ctx);
  MpReal via_pade = pade_eval(p, r);
  CHECK(abs(sum - via_pade) <= MpReal(1e-10, ctx) * abs(sum));
}

TEST_CASE("convergence flag and argument checks") {
  PrecisionCtx ctx(30);
  PotentialField field(she_closed_form(unit_cylinder(), 40, ctx));
  CHECK(abs(field.convergence_radius() - 1L) <= ctx.rel_tol());
  MpReal theta(0.5, ctx);
  CHECK(field.potential(MpReal(0.9, ctx), theta, 40).below_convergence);
  CHECK_FALSE(field.potential(MpReal(1.1, ctx), theta, 40).below_convergence);
  CHECK_THROWS_AS(field.potential(MpReal(0L, ctx), theta, 40), std::invalid_argument);
  CHECK_THROWS_AS(field.potential(MpReal(2L, ctx), theta, 41), std::invalid_argument);
  CHECK_THROWS_AS(field.potential(MpReal(2L, ctx), MpReal(4L, ctx), 10), std::invalid_argument);

  PotentialField sphere(she_exact_symbolic(ShapeProfile::spheroid(Surd(1), Surd(1)), 4, ctx));
  CHECK(sphere.convergence_radius().is_zero());
  CHECK_FALSE(sphere.potential(MpReal(0.5, ctx), theta, 4).below_convergence);
}
