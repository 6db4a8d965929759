#include "shepade/singularity.hpp"

#include "shepade/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace shepade {

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::interior:
      return "Interior";
    case SingularityClass::exterior:
      return "Exterior";
    case SingularityClass::boundary:
      return "Boundary";
  }
  return "?";
}

std::string to_string(SingularityOrigin o) { return o == SingularityOrigin::edge ? "edge" : "discriminant"; }

std::string to_string(RadiusStatus s) {
  switch (s) {
    case RadiusStatus::from_roots:
      return "from_roots";
    case RadiusStatus::terminating:
      return "terminating";
    case RadiusStatus::undetermined:
      return "undetermined";
  }
  return "?";
}

std::vector<MpComplex> discriminant_roots(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  const BiPoly p = BiPoly::distance_polynomial(profile.s2());
  if (p.degree_z() < 2) throw TerminatingSeries();
  const RatPoly disc = discriminant_in_z(p);
  if (disc.is_zero()) throw NumericalError("discriminant vanishes identically: p has a repeated factor in z");
  if (disc.degree() < 1) return {};
  return find_roots(to_complex(disc, ctx), ctx);
}

std::vector<MpComplex> edge_singularities(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  std::vector<MpComplex> out;
  for (const Surd& end : {profile.z_min(), profile.z_max()}) {
    const SurdSum r2 = poly_eval(profile.s2(), end);
    if (r2.sign() <= 0) continue;
    const MpReal z = end.to_mp(ctx);
    const MpReal s = sqrt(r2.to_mp(ctx));
    out.emplace_back(z, s);
    out.emplace_back(z, -s);
  }
  return out;
}

SingularityClass classify(const MpComplex& rotated, const ShapeProfile& profile, const MpReal& tol,
                          const MpReal& brillouin, const PrecisionCtx& ctx) {
  const MpReal& x = rotated.re();
  const MpReal& y = rotated.im();
  const MpReal lo = profile.z_min().to_mp(ctx);
  const MpReal hi = profile.z_max().to_mp(ctx);
  const MpReal x2 = x * x;
  const MpReal r2 = poly_eval(profile.s2(), y);
  const MpReal slack = tol * brillouin * 2L;

  if (y >= lo - tol && y <= hi + tol && abs(x2 - r2) <= slack) return SingularityClass::boundary;
  for (const MpReal& end : {lo, hi}) {
    if (abs(y - end) <= tol && x2 <= poly_eval(profile.s2(), end) + slack) return SingularityClass::boundary;
  }
  if (y > lo && y < hi && x2 < r2) return SingularityClass::interior;
  return SingularityClass::exterior;
}

SingularityClass classify(const MpComplex& rotated, const ShapeProfile& profile, const PrecisionCtx& ctx) {
  const MpReal brillouin = brillouin_radius(profile, ctx);
  return classify(rotated, profile, brillouin * pow10(-6, ctx), brillouin, ctx);
}

MpReal convergence_radius(const SingularitySet& set) {
  if (set.status == RadiusStatus::terminating) return MpReal(set.brillouin.precision());
  bool any = false;
  MpReal best(set.brillouin.precision());
  for (const auto& s : set.roots) {
    if (s.cls == SingularityClass::exterior) continue;
    any = true;
    best = max(best, abs(s.location));
  }
  if (!any) throw std::domain_error("no Interior or Boundary singularity and the series does not terminate");
  return best;
}

MpComplex critical_point(const ShapeProfile& profile, const MpComplex& Z0, const PrecisionCtx& ctx) {
  const BiPoly p = BiPoly::distance_polynomial(profile.s2());
  const ComplexPoly pz = p.at(Z0);
  const ComplexPoly dpz = p.derivative_z().at(Z0);
  if (dpz.degree() < 1) throw std::domain_error("p'(z) has no roots");
  MpComplex best;
  MpReal best_val(ctx.bits());
  bool first = true;
  for (const auto& z : find_roots(dpz, ctx)) {
    MpReal v = abs(poly_eval(pz, z));
    if (first || v < best_val) {
      best = z;
      best_val = v;
      first = false;
    }
  }
  return best;
}

bool combined_condition_check(const ShapeProfile& profile, const MpComplex& z0, const PrecisionCtx& ctx) {
  const MpComplex r2 = poly_eval(profile.s2(), z0);
  const MpReal scale = horner_magnitude(to_complex(profile.s2(), ctx), abs(z0));
  if (abs(r2) <= ctx.rel_tol() * scale) throw std::domain_error("s^2 vanishes at z0: branch point of s");
  const MpComplex s = sqrt(r2);
  const MpComplex ds = poly_eval(poly_derivative(profile.s2()), z0) / (s * 2L);
  const MpReal tol = ctx.rel_tol() * 1000L;
  const MpComplex i = imag_unit(ctx.bits());
  if (distance(ds, i) > tol && distance(ds, -i) > tol) return false;

  // p'(z0) = 0 gives Z0 - z0 = s s'(z0) = +-i s.
  const MpComplex Z0 = z0 + s * ds;
  const MpReal reach = tol * max(MpReal(1L, ctx), abs(Z0));
  for (const auto& root : discriminant_roots(profile, ctx))
    if (distance(root, Z0) <= reach) return true;
  return false;
}

SingularitySet analyze(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  SingularitySet set;
  set.brillouin = brillouin_radius(profile, ctx);
  const MpReal tol = set.brillouin * pow10(-6, ctx);

  bool too_simple = false;
  std::vector<MpComplex> disc;
  try {
    disc = discriminant_roots(profile, ctx);
  } catch (const TerminatingSeries&) {
    too_simple = true;
  }
  auto push = [&](const MpComplex& Z0, SingularityOrigin origin) {
    Singularity s;
    s.location = Z0;
    s.rotated = times_i(Z0);
    s.cls = classify(s.rotated, profile, tol, set.brillouin, ctx);
    s.origin = origin;
    set.roots.push_back(std::move(s));
  };
  for (const auto& z : disc) push(z, SingularityOrigin::discriminant);
  const std::vector<MpComplex> edges = edge_singularities(profile, ctx);
  for (const auto& z : edges) push(z, SingularityOrigin::edge);

  if (too_simple && edges.empty()) {
    set.status = RadiusStatus::terminating;
    set.convergence_radius = MpReal(ctx.bits());
    return set;
  }
  const bool visible = std::any_of(set.roots.begin(), set.roots.end(),
                                   [](const Singularity& s) { return s.cls != SingularityClass::exterior; });
  if (visible) {
    set.status = RadiusStatus::from_roots;
    set.convergence_radius = convergence_radius(set);
  } else {
    set.convergence_radius = MpReal(ctx.bits());
  }
  return set;
}

}  // namespace shepade
