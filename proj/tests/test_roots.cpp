#include "doctest.h"

#include "shepade/roots.hpp"

#include <random>

using namespace shepade;

namespace {

ComplexPoly from_roots(const std::vector<MpComplex>& roots, const PrecisionCtx& ctx) {
  std::vector<MpComplex> c = {MpComplex(1L, ctx)};
  for (const auto& r : roots) {
    std::vector<MpComplex> next(c.size() + 1, MpComplex(0L, ctx));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * r;
    }
    c = std::move(next);
  }
  return ComplexPoly(std::move(c));
}

MpReal nearest(const MpComplex& z, const std::vector<MpComplex>& set) {
  MpReal best = distance(z, set.front());
  for (const auto& w : set) best = min(best, distance(z, w));
  return best;
}

}  // namespace

TEST_CASE("z^2 + 1") {
  PrecisionCtx ctx(30);
  std::vector<Rational> c = {Rational(1), Rational(0), Rational(1)};
  auto roots = find_roots(to_complex(RatPoly(c), ctx), ctx);
  REQUIRE(roots.size() == 2);
  // real parts are rounding-level, so the (re, im) order is not fixed
  MpComplex i = imag_unit(ctx.bits());
  CHECK(std::min(distance(roots[0], i), distance(roots[1], i)) <= ctx.rel_tol());
  CHECK(std::min(distance(roots[0], -i), distance(roots[1], -i)) <= ctx.rel_tol());
}

TEST_CASE("roots at the origin are split off") {
  PrecisionCtx ctx(30);
  std::vector<Rational> c = {Rational(0), Rational(0), Rational(-4), Rational(0), Rational(1)};
  auto roots = find_roots(to_complex(RatPoly(c), ctx), ctx);
  REQUIRE(roots.size() == 4);
  int zeros = 0;
  for (const auto& r : roots) zeros += r.is_zero() ? 1 : 0;
  CHECK(zeros == 2);
}

TEST_CASE("constructed roots are recovered") {
  PrecisionCtx ctx(100);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int degree : {5, 17, 40}) {
    std::vector<MpComplex> truth;
    for (int k = 0; k < degree; ++k) truth.emplace_back(MpReal(u(rng), ctx), MpReal(u(rng), ctx));
    auto found = find_roots(from_roots(truth, ctx), ctx);
    REQUIRE(found.size() == truth.size());
    for (const auto& z : found) CHECK(nearest(z, truth) <= pow10(-85, ctx));
  }
}

TEST_CASE("real polynomials give conjugate-closed roots") {
  PrecisionCtx ctx(50);
  std::vector<Rational> c = {Rational(25), Rational(0), Rational(28), Rational(0), Rational(47), Rational(0),
                             Rational(16)};
  auto roots = find_roots(to_complex(RatPoly(c), ctx), ctx);
  REQUIRE(roots.size() == 6);
  for (const auto& z : roots) {
    CHECK(nearest(conj(z), roots) <= ctx.rel_tol() * 10L);
    CHECK(nearest(-z, roots) <= ctx.rel_tol() * 10L);  // even polynomial
  }
  // In the rotated variable the quartic-profile roots are +-1.577 and +-0.7135 +- 0.5325i.
  int real_axis = 0;
  for (const auto& z : roots) {
    MpComplex rot = times_i(z);
    if (abs(rot.im()) <= ctx.rel_tol() * 10L) {
      ++real_axis;
      CHECK(abs(abs(rot.re()) - MpReal(1.5770, ctx)) < 1e-3);
    } else {
      CHECK(abs(abs(rot.re()) - MpReal(0.7135, ctx)) < 1e-3);
      CHECK(abs(abs(rot.im()) - MpReal(0.5325, ctx)) < 1e-3);
    }
  }
  CHECK(real_axis == 2);
}

TEST_CASE("residuals meet the tolerance") {
  PrecisionCtx ctx(60);
  std::vector<Rational> c;
  for (int k = 0; k <= 25; ++k) c.emplace_back(k % 3 == 0 ? 1 : -k, k + 1);
  ComplexPoly p = to_complex(RatPoly(c), ctx);
  auto roots = find_roots(p, ctx);
  for (const auto& z : roots) {
    CHECK(abs(poly_eval(p, z)) <= ctx.rel_tol() * horner_magnitude(p, abs(z)));
  }
}

TEST_CASE("serial and parallel sweeps agree bit for bit") {
  PrecisionCtx ctx(40);
  std::vector<Rational> c;
  for (int k = 0; k <= 12; ++k) c.emplace_back(k * k - 7, 3);
  ComplexPoly p = to_complex(RatPoly(c), ctx);
  RootFindOptions serial;
  serial.exec = kernels::Exec::serial;
  auto a = find_roots(p, ctx, serial);
  auto b = find_roots(p, ctx);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("non-convergence is reported with the iterates") {
  PrecisionCtx ctx(40);
  std::vector<Rational> c;
  for (int k = 0; k <= 20; ++k) c.emplace_back(k + 1);
  RootFindOptions opts;
  opts.max_sweeps = 1;
  try {
    find_roots(to_complex(RatPoly(c), ctx), ctx, opts);
    FAIL("expected RootFindError");
  } catch (const RootFindError& e) {
    CHECK(e.best().size() == 20);
    CHECK(e.residuals().size() == 20);
  }
}

TEST_CASE("peanut discriminant roots") {
  PrecisionCtx ctx(50);
  struct Case {
    std::vector<long> coeffs;
    double real_root;
    double re, im;
  };
  for (const Case& c : {Case{{4096, 0, 1408, 0, 203, 0, 16}, 2.28542, 2.31658, 1.27842},
                        Case{{13140625, 0, 632500, 0, 5327, 0, 16}, 5.10293, 12.8655, 3.47457}}) {
    std::vector<Rational> q;
    for (long v : c.coeffs) q.emplace_back(v);
    auto roots = find_roots(to_complex(RatPoly(q), ctx), ctx);
    REQUIRE(roots.size() == 6);
    int on_axis = 0;
    for (const auto& z : roots) {
      MpComplex rot = times_i(z);
      if (abs(rot.im()) <= ctx.rel_tol() * 100L) {
        ++on_axis;
        CHECK(abs(abs(rot.re()) / MpReal(c.real_root, ctx) - 1L) < 5e-6);
      } else {
        CHECK(abs(abs(rot.re()) / MpReal(c.re, ctx) - 1L) < 5e-6);
        CHECK(abs(abs(rot.im()) / MpReal(c.im, ctx) - 1L) < 5e-6);
      }
    }
    CHECK(on_axis == 2);
  }
}
