#include "shepade/planet.hpp"

#include "shepade/errors.hpp"
#include "shepade/kernels.hpp"
#include "shepade/quadrature.hpp"
#include "shepade/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shepade {

namespace {

void require_positive(const Surd& s, const char* name) {
  if (s.sign() <= 0) throw InputError(std::string(name) + " must be positive");
}

void require_positive(const Rational& q, const char* name) {
  if (sgn(q) <= 0) throw InputError(std::string(name) + " must be positive");
}

MpReal two_pi_g_rho(const ShapeProfile& p, const PrecisionCtx& ctx) {
  return pi(ctx) * 2L * MpReal(p.G() * p.rho(), ctx);
}

}  // namespace

ShapeProfile ShapeProfile::spheroid(const Surd& a, const Surd& b, const Rational& rho, const Rational& G) {
  require_positive(a, "spheroid a");
  require_positive(b, "spheroid b");
  require_positive(rho, "rho");
  require_positive(G, "G");
  ShapeProfile p;
  p.kind_ = ShapeKind::spheroid;
  p.a_ = a;
  p.b_ = b;
  // a^2 (1 - z^2 / b^2)
  p.s2_ = RatPoly({a.square(), Rational(0), Rational(-a.square() / b.square())});
  p.z_min_ = -b;
  p.z_max_ = b;
  p.rho_ = rho;
  p.G_ = G;
  return p;
}

ShapeProfile ShapeProfile::cylinder(const Surd& a, const Surd& length, const Rational& rho, const Rational& G) {
  require_positive(a, "cylinder a");
  require_positive(length, "cylinder L");
  require_positive(rho, "rho");
  require_positive(G, "G");
  ShapeProfile p;
  p.kind_ = ShapeKind::cylinder;
  p.a_ = a;
  p.b_ = length;
  p.s2_ = RatPoly({a.square()});
  p.z_min_ = length.scaled(Rational(-1, 2));
  p.z_max_ = length.scaled(Rational(1, 2));
  p.rho_ = rho;
  p.G_ = G;
  return p;
}

ShapeProfile ShapeProfile::polynomial(RatPoly s2, const Surd& z_min, const Surd& z_max, const Rational& rho,
                                      const Rational& G) {
  require_positive(rho, "rho");
  require_positive(G, "G");
  if ((SurdSum(z_max) - SurdSum(z_min)).sign() <= 0) throw InputError("z_min must be less than z_max");
  if (s2.is_zero()) throw InputError("s2 is identically zero");
  if (poly_eval(s2, z_min).sign() < 0) throw InputError("s2(z_min) is negative");
  if (poly_eval(s2, z_max).sign() < 0) throw InputError("s2(z_max) is negative");

  const PrecisionCtx ctx(30);
  const MpReal lo = z_min.to_mp(ctx);
  const MpReal width = z_max.to_mp(ctx) - lo;
  const long samples = 10000;
  for (long i = 1; i < samples; ++i) {
    MpReal z = lo + width * MpReal(i, ctx) / samples;
    if (poly_eval(s2, z).sign() < 0) {
      throw InputError("s2 is negative at z = " + to_sci(z, 8) + " inside [z_min, z_max]");
    }
  }
  ShapeProfile p;
  p.kind_ = ShapeKind::polynomial;
  p.s2_ = std::move(s2);
  p.z_min_ = z_min;
  p.z_max_ = z_max;
  p.rho_ = rho;
  p.G_ = G;
  return p;
}

bool ShapeProfile::is_even() const {
  if (!(z_min_ == -z_max_)) return false;
  for (std::size_t k = 1; k < s2_.size(); k += 2)
    if (sgn(s2_[k]) != 0) return false;
  return true;
}

std::string ShapeProfile::describe() const {
  switch (kind_) {
    case ShapeKind::spheroid:
      return "spheroid a=" + a_.to_string() + " b=" + b_.to_string();
    case ShapeKind::cylinder:
      return "cylinder a=" + a_.to_string() + " L=" + b_.to_string();
    case ShapeKind::polynomial: {
      std::string s = "polyprofile s2=[";
      for (std::size_t k = 0; k < s2_.size(); ++k) s += (k ? "," : "") + s2_[k].get_str();
      return s + "] z=[" + z_min_.to_string() + "," + z_max_.to_string() + "]";
    }
  }
  return {};
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form:
      return "closed_form";
    case Provenance::exact_symbolic:
      return "exact_symbolic";
    case Provenance::quadrature:
      return "quadrature";
  }
  return {};
}

SurdSum s2_integral(const ShapeProfile& profile) {
  return poly_integrate(profile.s2(), profile.z_min(), profile.z_max());
}

MpReal mass(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  return pi(ctx) * MpReal(profile.rho(), ctx) * s2_integral(profile).to_mp(ctx);
}

SheSeries she_closed_form(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  SheSeries out{std::vector<MpReal>(static_cast<std::size_t>(n_max + 1), MpReal(0L, ctx)), Provenance::closed_form,
                ctx, profile};
  const MpReal gm = MpReal(profile.G(), ctx) * mass(profile, ctx);

  if (profile.kind() == ShapeKind::spheroid) {
    // A_2n = -3 GM (-1)^n (a^2 - b^2)^n / ((2n+1)(2n+3))
    const Rational focal = profile.a().square() - profile.b().square();
    Rational power = 1;
    for (int n = 0; 2 * n <= n_max; ++n) {
      Rational c = Rational(-3) * power / Rational((2L * n + 1) * (2L * n + 3));
      if (n % 2 == 1) c = -c;
      out.coeffs[static_cast<std::size_t>(2 * n)] = MpReal(c, ctx) * gm;
      power *= focal;
    }
    return out;
  }
  if (profile.kind() == ShapeKind::cylinder) {
    // A_2n = -GM a^{2n} (4a/L) (1+q^2)^{n+1/2} C_{2n+1}^{(3/2)}(t) / ((2n+1)(2n+2)(2n+3))
    // with q = L/(2a), t = q / sqrt(1+q^2). Writing C_k(t) = c_k t^{k mod 2}
    // keeps c_k rational (t^2 is), and (4a/L) sqrt(1+q^2) t = 2, so every
    // coefficient is GM times a rational.
    const Rational a2 = profile.a().square();
    const Rational q2 = profile.length().square() / (4 * a2);
    const Rational t2 = q2 / (1 + q2);
    const Rational nu(3, 2);
    std::vector<Rational> c = {Rational(1), Rational(2 * nu)};  // C_0 = 1, C_1 = 2 nu t
    const int k_max = n_max + 1;
    for (int k = 2; k <= k_max; ++k) {
      const Rational kk(k);
      Rational prev = 2 * (kk + nu - 1) * c[static_cast<std::size_t>(k - 1)];
      if (k % 2 == 0) prev *= t2;
      c.push_back((prev - (kk + 2 * nu - 2) * c[static_cast<std::size_t>(k - 2)]) / kk);
    }
    Rational growth = 1;  // (a^2 (1+q^2))^n
    for (int n = 0; 2 * n <= n_max; ++n) {
      Rational v = Rational(-2) * growth * c[static_cast<std::size_t>(2 * n + 1)] /
                   Rational((2L * n + 1) * (2L * n + 2) * (2L * n + 3));
      out.coeffs[static_cast<std::size_t>(2 * n)] = MpReal(v, ctx) * gm;
      growth *= a2 * (1 + q2);
    }
    return out;
  }
  throw std::invalid_argument("closed-form coefficients exist only for spheroids and cylinders");
}

std::vector<SurdSum> she_exact_integrals(const ShapeProfile& profile, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const RatPoly z = monomial(1);
  const RatPoly r2 = monomial(2) + profile.s2();
  // k H_k = (2k - 3) z H_{k-1} - (k - 3) r^2 H_{k-2}
  std::vector<RatPoly> h;
  h.reserve(static_cast<std::size_t>(n_max + 3));
  h.push_back(monomial(0));
  h.push_back(monomial(1, Rational(-1)));
  for (int k = 2; k <= n_max + 2; ++k) {
    RatPoly next = z * h[static_cast<std::size_t>(k - 1)] * Rational(2 * k - 3) -
                   r2 * h[static_cast<std::size_t>(k - 2)] * Rational(k - 3);
    h.push_back(next * Rational(1, k));
  }
  std::vector<SurdSum> out(static_cast<std::size_t>(n_max + 1));
  kernels::for_each_index(
      out.size(),
      [&](std::size_t n) { out[n] = poly_integrate(h[n + 2], profile.z_min(), profile.z_max()); },
      kernels::Exec::parallel);
  return out;
}

SheSeries she_exact_symbolic(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx) {
  std::vector<SurdSum> integrals = she_exact_integrals(profile, n_max);
  const MpReal factor = -two_pi_g_rho(profile, ctx);
  SheSeries out{{}, Provenance::exact_symbolic, ctx, profile};
  out.coeffs.reserve(integrals.size());
  for (const auto& v : integrals) out.coeffs.push_back(v.is_zero() ? MpReal(0L, ctx) : factor * v.to_mp(ctx));
  return out;
}

namespace {

struct QuadratureResult {
  std::vector<MpReal> values;  // int H_{n+2}
  std::vector<MpReal> scale;   // int r^{n+2}, bounds |H_{n+2}|
};

QuadratureResult quadrature_integrals(const ShapeProfile& profile, int n_max, int nodes, const PrecisionCtx& work) {
  auto base = gauss_legendre(nodes, work);
  GaussRule rule = map_rule(*base, profile.z_min().to_mp(work), profile.z_max().to_mp(work));
  const std::size_t m = static_cast<std::size_t>(n_max + 1);
  const mpfr_prec_t bits = work.bits();
  // Slots [0, m) hold the integrals, [m, 2m) the magnitude scale.
  std::vector<MpReal> sums = kernels::blocked_sums(
      rule.nodes.size(), 2 * m, bits,
      [&](std::size_t i, std::vector<MpReal>& acc) {
        const MpReal& z = rule.nodes[i];
        const MpReal& w = rule.weights[i];
        MpReal r2 = z * z + poly_eval(profile.s2(), z);
        MpReal r = sqrt(r2);
        MpReal h0(1L, work);
        MpReal h1 = -z;
        MpReal rk = r2;  // r^k for k = 2
        for (long k = 2; k <= n_max + 2; ++k) {
          MpReal hk = z * h1 * (2 * k - 3);
          hk -= r2 * h0 * (k - 3);
          hk /= k;
          add_mul(acc[static_cast<std::size_t>(k - 2)], w, hk);
          add_mul(acc[m + static_cast<std::size_t>(k - 2)], w, rk);
          rk *= r;
          h0 = std::move(h1);
          h1 = std::move(hk);
        }
      },
      kernels::Exec::parallel);
  QuadratureResult out;
  out.values.assign(sums.begin(), sums.begin() + static_cast<long>(m));
  out.scale.assign(sums.begin() + static_cast<long>(m), sums.end());
  return out;
}

}  // namespace

SheSeries she_quadrature(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  // The integrand reaches size r_max^{n+2} while A_n may be much smaller;
  // carry enough extra digits to absorb that growth.
  const double r_max = brillouin_radius(profile, PrecisionCtx(20)).to_double();
  const int extra = 20 + static_cast<int>(std::ceil((n_max + 2) * std::log10(std::max(1.0, r_max))));
  const PrecisionCtx work = ctx.with_digits(ctx.digits() + extra);
  const MpReal tol = ctx.rel_tol();

  int nodes = 4 * (n_max + ctx.digits());
  QuadratureResult prev = quadrature_integrals(profile, n_max, nodes, work);
  for (int doubling = 0; doubling < 4; ++doubling) {
    nodes *= 2;
    QuadratureResult next = quadrature_integrals(profile, n_max, nodes, work);
    bool stable = true;
    for (std::size_t n = 0; n < next.values.size() && stable; ++n) {
      stable = abs(next.values[n] - prev.values[n]) <= tol * next.scale[n];
    }
    if (stable) {
      const MpReal factor = -two_pi_g_rho(profile, work);
      SheSeries out{{}, Provenance::quadrature, ctx, profile};
      for (const auto& v : next.values) out.coeffs.emplace_back(factor * v, ctx.bits());
      return out;
    }
    prev = std::move(next);
  }
  throw NumericalError("quadrature did not converge for n_max = " + std::to_string(n_max) + " at " +
                       std::to_string(nodes) + " nodes");
}

MpReal brillouin_radius(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  const RatPoly g = monomial(2) + profile.s2();  // squared distance from the origin
  SurdSum best = poly_eval(g, profile.z_min());
  SurdSum at_max = poly_eval(g, profile.z_max());
  if ((at_max - best).sign() > 0) best = at_max;
  MpReal result = best.to_mp(ctx);

  const RatPoly dg = poly_derivative(g);
  if (dg.degree() >= 1) {
    const MpReal lo = profile.z_min().to_mp(ctx);
    const MpReal hi = profile.z_max().to_mp(ctx);
    // Multiple critical points leave O(eps^{1/m}) imaginary parts.
    const MpReal real_tol = pow10(-ctx.digits() / 4, ctx);
    for (const auto& root : find_roots(to_complex(dg, ctx), ctx)) {
      if (abs(root.im()) > real_tol * (1L + abs(root.re()))) continue;
      if (root.re() <= lo || root.re() >= hi) continue;
      result = max(result, poly_eval(g, root.re()));
    }
  }
  return sqrt(result);
}

MpReal potential_axis_exact(const ShapeProfile& profile, const MpReal& Z, const PrecisionCtx& ctx) {
  const PrecisionCtx work = ctx.with_digits(ctx.digits() + 10);
  const MpReal top = profile.z_max().to_mp(work);
  if (Z <= top) throw std::domain_error("observation point must lie above the planet (Z > z_max)");
  const MpReal lo = profile.z_min().to_mp(work);
  const MpReal target = ctx.rel_tol() * 100L;
  const MpReal Zw(Z, work.bits());

  // sqrt(d^2 + s^2) - d = s^2 / (sqrt(d^2 + s^2) + d), d = Z - z > 0.
  auto integrate = [&](int nodes) {
    GaussRule rule = map_rule(*gauss_legendre(nodes, work), lo, top);
    std::vector<MpReal> sum = kernels::blocked_sums(
        rule.nodes.size(), 1, work.bits(),
        [&](std::size_t i, std::vector<MpReal>& acc) {
          MpReal d = Zw - rule.nodes[i];
          MpReal s2 = poly_eval(profile.s2(), rule.nodes[i]);
          add_mul(acc[0], rule.weights[i], s2 / (sqrt(d * d + s2) + d));
        },
        kernels::Exec::parallel);
    return sum[0];
  };

  int nodes = std::max(32, 2 * ctx.digits());
  MpReal prev = integrate(nodes);
  for (int doubling = 0; doubling < 8; ++doubling) {
    nodes *= 2;
    MpReal next = integrate(nodes);
    if (abs(next - prev) <= target * abs(next)) return MpReal(-two_pi_g_rho(profile, work) * next, ctx.bits());
    prev = std::move(next);
  }
  throw NumericalError("on-axis potential quadrature did not converge at Z = " + to_sci(Z, 10));
}

MpComplex potential_spheroid_closed(const ShapeProfile& spheroid, const MpComplex& Z, const PrecisionCtx& ctx) {
  if (spheroid.kind() != ShapeKind::spheroid) throw std::invalid_argument("profile is not a spheroid");
  const Rational focal2 = spheroid.a().square() - spheroid.b().square();
  if (sgn(focal2) == 0) throw std::domain_error("closed form needs a != b (the sphere is -GM/Z)");
  if (Z.is_zero()) throw std::domain_error("Z = 0 is not an exterior point");

  // Large |Z| cancels about 2 log10(|Z|/c) digits between the two terms.
  const double zc = std::max(1.0, abs(Z).to_double() / std::sqrt(std::abs(focal2.get_d())));
  const PrecisionCtx work = ctx.with_digits(ctx.digits() + 10 + static_cast<int>(2 * std::log10(zc)));
  const MpComplex c = sqrt(MpComplex(focal2, work));  // imaginary for prolate shapes
  const MpComplex ic = times_i(c);
  const MpComplex Zw(MpReal(Z.re(), work.bits()), MpReal(Z.im(), work.bits()));
  const MpComplex num = Zw + ic;
  const MpComplex den = Zw - ic;
  const MpReal near = pow10(-ctx.digits() + ctx.guard(), work) * abs(c);
  if (abs(num) <= near || abs(den) <= near) throw std::domain_error("Z is at a branch point +-i sqrt(a^2 - b^2)");

  const MpReal gm = MpReal(spheroid.G(), work) * mass(spheroid, work);
  const MpComplex c2(focal2, work);
  const MpComplex Z2 = Zw * Zw;
  MpComplex bracket = Z2 / c2 + times_i(Zw * (Z2 + c2) / (c2 * c * 2L)) * log(num / den);
  MpComplex value = bracket * (gm * 3L / 2L) / Zw;
  return MpComplex(MpReal(value.re(), ctx.bits()), MpReal(value.im(), ctx.bits()));
}

MpComplex potential_spheroid_closed(const Surd& a, const Surd& b, const MpComplex& Z, const PrecisionCtx& ctx) {
  return potential_spheroid_closed(ShapeProfile::spheroid(a, b), Z, ctx);
}

}  // namespace shepade
