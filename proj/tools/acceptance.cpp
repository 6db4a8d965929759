// Acceptance suite: one PASS/FAIL line per criterion.
//
//   shepade_acceptance [--full] [--only 3,5] [--known-failures 5,7]
//
// The default tier runs every criterion at its stated size except the
// extrapolation benchmark, which uses the reduced profile; --full runs the
// 1500-term, 1000-digit benchmark too. The exit code is 0 when every failing
// criterion is listed in --known-failures.

#include "shepade/experiments.hpp"
#include "shepade/singularity.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace shepade;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }

  std::string text() const {
    std::string out = detail.str();
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    for (const auto& f : failures) out += " | failed: " + f;
    return out;
  }
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(Outcome&, bool full)> run;
};

ShapeProfile spheroid(const Rational& a, const Rational& b) { return ShapeProfile::spheroid(Surd(a), Surd(b)); }
ShapeProfile unit_brillouin_cylinder() { return ShapeProfile::cylinder(Rational(1, 2), Surd::parse("sqrt(3)")); }
ShapeProfile even_quartic(long c0, long c2, long end) {
  return ShapeProfile::polynomial(RatPoly({Rational(c0), 0, Rational(c2), 0, -1}), Surd(-end), Surd(end));
}
ShapeProfile smoothed_cylinder() { return even_quartic(1, 0, 1); }

std::string sci(double x, int digits = 3) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(digits - 1) << x;
  return s.str();
}

// |a - b| within tol relative to b, or to `floor` when b is zero.
bool close(const MpReal& a, const MpReal& b, const MpReal& tol, const MpReal& floor) {
  const MpReal scale = b.is_zero() ? floor : abs(b);
  return abs(a - b) <= tol * scale;
}

// ---------------------------------------------------------------------------

void discriminant_exactness(Outcome& out, bool) {
  struct Case {
    const char* name;
    ShapeProfile profile;
    RatPoly expected;  // -16 (16 Z^6 + c4 Z^4 + c2 Z^2 + c0)
  };
  auto printed = [](long c0, long c2, long c4) {
    return RatPoly({Rational(-16 * c0), 0, Rational(-16 * c2), 0, Rational(-16 * c4), 0, Rational(-256)});
  };
  const Case cases[] = {{"1 - z^4", smoothed_cylinder(), printed(25, 28, 47)},
                        {"4 + 3z^2 - z^4", even_quartic(4, 3, 2), printed(4096, 1408, 203)},
                        {"25 + 24z^2 - z^4", even_quartic(25, 24, 5), printed(13140625, 632500, 5327)}};
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const RatPoly disc = discriminant_in_z(BiPoly::distance_polynomial(c.profile.s2()));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(disc == c.expected, std::string("coefficients of ") + c.name);
    out.require(secs < 1.0, std::string("runtime of ") + c.name);
    out.detail << c.name << " " << sci(secs, 2) << " s; ";
  }
}

void printed_roots(Outcome& out, bool) {
  const PrecisionCtx ctx(50);
  struct Case {
    const char* name;
    ShapeProfile profile;
    std::vector<std::pair<double, double>> points;  // rotated, one of each +- pair
    int sig;
  };
  const Case cases[] = {{"1 - z^4", smoothed_cylinder(), {{1.577, 0}, {0.7135, 0.5325}}, 4},
                        {"4 + 3z^2 - z^4", even_quartic(4, 3, 2), {{2.28542, 0}, {2.31658, 1.27842}}, 6},
                        {"25 + 24z^2 - z^4", even_quartic(25, 24, 5), {{5.10293, 0}, {12.8655, 3.47457}}, 6}};
  for (const auto& c : cases) {
    const auto roots = discriminant_roots(c.profile, ctx);
    out.require(roots.size() == 6, std::string("root count of ") + c.name);
    std::size_t matched = 0;
    for (const auto& [x0, y0] : c.points) {
      // Expand the printed +- pattern.
      std::set<std::pair<double, double>> targets;
      for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0}) targets.insert({sx * x0, sy * y0});
      const double tol = 0.5 * std::pow(10.0, std::floor(std::log10(std::max(x0, y0))) - c.sig + 1);
      for (const auto& [x, y] : targets) {
        bool found = false;
        for (const auto& z : roots) {
          const MpComplex r = times_i(z);
          found = found || (std::fabs(r.re().to_double() - x) <= tol && std::fabs(r.im().to_double() - y) <= tol);
        }
        out.require(found, std::string(c.name) + " misses " + std::to_string(x) + (y >= 0 ? "+" : "") +
                               std::to_string(y) + "i");
        matched += found;
      }
    }
    out.detail << c.name << " " << matched << " printed points matched; ";
  }
}

void spheroid_radius(Outcome& out, bool) {
  const PrecisionCtx ctx(60);
  const MpReal tol = ctx.rel_tol() * 100L;
  for (const auto& [a, b] : {std::pair{Rational(3, 2), Rational(1)}, {Rational(2), Rational(1)}, {Rational(5), Rational(3)}}) {
    const ShapeProfile body = spheroid(a, b);
    const MpReal expected = sqrt(MpReal(Rational(a * a - b * b), ctx));
    const SingularitySet set = analyze(body, ctx);
    const MpReal err = abs(set.convergence_radius - expected) / expected;
    out.require(err <= tol, "radius of (" + a.get_str() + ", " + b.get_str() + ")");

    const SheSeries closed = she_closed_form(body, 40, ctx);
    const SheSeries exact = she_exact_symbolic(body, 40, ctx);
    bool same = true;
    for (std::size_t n = 0; n <= 40; ++n)
      same = same && close(closed.coeffs[n], exact.coeffs[n], ctx.rel_tol() * 1000L, abs(exact.coeffs[0]));
    out.require(same, "closed form vs symbolic for (" + a.get_str() + ", " + b.get_str() + ")");
    out.detail << "(" << a.get_str() << "," << b.get_str() << ") rel err " << sci(err.to_double()) << "; ";
  }
}

void cylinder_brillouin(Outcome& out, bool) {
  const PrecisionCtx ctx(50);
  const ShapeProfile body = unit_brillouin_cylinder();
  const MpReal one(1L, ctx);
  out.require(abs(brillouin_radius(body, ctx) - one) <= ctx.rel_tol(), "brillouin radius");
  const SingularitySet set = analyze(body, ctx);
  std::size_t boundary = 0;
  for (const auto& s : set.roots) boundary += s.cls == SingularityClass::boundary;
  out.require(boundary == 4, "four Boundary singularities");
  out.require(abs(set.convergence_radius - one) <= ctx.rel_tol(), "convergence radius");
  out.detail << boundary << " Boundary of " << set.roots.size() << " singularities, radius "
             << to_sci(set.convergence_radius, 12);
}

void pole_accumulation(Outcome& out, bool) {
  const PrecisionCtx ctx(100);
  const std::pair<const char*, ShapeProfile> cases[] = {{"spheroid", spheroid(Rational(3, 2), Rational(1))},
                                                        {"cylinder", unit_brillouin_cylinder()},
                                                        {"smoothed cylinder", smoothed_cylinder()},
                                                        {"peanut 4", even_quartic(4, 3, 2)},
                                                        {"peanut 25", even_quartic(25, 24, 5)}};
  PortraitOptions opt;
  opt.N = 100;
  opt.boundary_samples = 2;
  for (const auto& [name, profile] : cases) {
    const ExperimentReport rep = pole_portrait(profile, opt, ctx);
    const auto& sm = rep.summary;
    out.detail << name << ":";
    if (sm.contains("max_interior_gap_rel")) {
      const double gap = sm["max_interior_gap_rel"].get<double>();
      out.require(gap <= 0.05, std::string(name) + " interior gap");
      out.detail << " interior " << sci(gap);
    }
    if (sm.contains("min_exterior_gap_rel")) {
      const double gap = sm["min_exterior_gap_rel"].get<double>();
      out.require(gap >= 0.1, std::string(name) + " exterior gap");
      out.detail << " exterior " << sci(gap);
    }
    out.detail << "; ";
  }
}

void downward_continuation(Outcome& out, bool) {
  const PrecisionCtx ctx(200);
  ErrorScanOptions opt;
  opt.n_terms = 500;
  opt.z_grid = {"0.88", "1.0", 30};
  const ExperimentReport rep = error_scan(unit_brillouin_cylinder(), opt, ctx);
  out.require(rep.rows.size() == 30, "30 grid rows");
  double min_margin = 1e300, at_088 = 0;
  for (const auto& row : rep.rows) {
    const double she = std::stod(row[1]), pade = std::stod(row[2]);
    min_margin = std::min(min_margin, she - pade);
    if (std::stod(row[0]) == 0.88) at_088 = pade;
  }
  out.require(min_margin >= 5, "5-decade margin");
  out.require(at_088 <= -5, "Pade error at Z = 0.88");
  out.detail << "min margin " << sci(min_margin) << " decades, log10 Pade error at 0.88 = " << sci(at_088);
}

void extrapolation(Outcome& out, bool full) {
  ExtrapolationOptions opt;
  if (full) {
    opt.terms = 1500;
    opt.N = 750;
    opt.digits = {16, 1000};
  } else {
    opt.terms = 300;
    opt.N = 150;
    opt.digits = {16, 200};
  }
  opt.x_grid = {"0", "10", 41};
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentReport rep = extrapolation_benchmark(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  auto at = [&](double x, std::size_t col) {
    for (const auto& row : rep.rows)
      if (std::stod(row[0]) == x) return std::stod(row[col]);
    return std::nan("");
  };
  const double high_5 = at(5, 3), high_15 = at(1.5, 3), high_2 = at(2, 3), series_2 = at(2, 1);
  if (full) {
    out.require(high_5 <= -6, "high-precision error at x = 5");
    out.require(high_15 <= -8, "high-precision error at x = 1.5");
  } else {
    out.require(high_2 <= -3, "high-precision error at x = 2");
    out.require(secs < 120, "reduced profile under 2 minutes");
  }
  out.require(series_2 > 0, "series error at x = 2");
  double machine_min = 1e300;
  for (const auto& row : rep.rows)
    if (std::stod(row[0]) >= 1.5) machine_min = std::min(machine_min, std::stod(row[2]));
  out.require(machine_min >= -3, "16-digit build error >= 1e-3 for x >= 1.5");
  out.detail << (full ? "full" : "reduced") << " tier " << sci(secs, 2) << " s; log10 err: high(5) " << sci(high_5)
             << ", high(1.5) " << sci(high_15) << ", high(2) " << sci(high_2) << ", series(2) " << sci(series_2)
             << ", best 16-digit for x >= 1.5 " << sci(machine_min) << " (16-digit effective_N "
             << rep.summary["builds"][0]["effective_N"] << ")";
}

void precision_threshold(Outcome& out, bool) {
  const PrecisionCtx ctx(60);
  SweepOptions opt;
  opt.n_coeffs = 50;
  opt.digits = {10, 11, 12, 13};
  const ExperimentReport rep = precision_sweep(unit_brillouin_cylinder(), opt, ctx);
  const auto& sweep = rep.summary["sweep"];
  long last = -1;
  out.detail << "spurious by digits:";
  for (const auto& e : sweep) {
    const long count = e["spurious"].get<long>();
    out.require(last < 0 || count <= last, "spurious count non-increasing");
    last = count;
    out.detail << " " << count;
  }
  const auto dev10 = sweep[0]["corner_deviation"], dev13 = sweep[3]["corner_deviation"];
  out.require(!dev10.is_null() && !dev13.is_null(), "corner poles present");
  if (!dev10.is_null() && !dev13.is_null()) {
    out.require(dev13.get<double>() * 2 <= dev10.get<double>(), "corner deviation halves from 10 to 13 digits");
    out.detail << "; corner deviation 10 digits " << sci(dev10.get<double>()) << ", 13 digits "
               << sci(dev13.get<double>());
  }
}

void ratio_envelope(Outcome& out, bool) {
  const PrecisionCtx ctx(60);
  RatioOptions opt;
  opt.n_max = 200;
  const ExperimentReport exact = ratio_test(smoothed_cylinder(), opt, ctx);
  const double lo = exact.summary["envelope_min"].get<double>(), hi = exact.summary["envelope_max"].get<double>();
  out.require(lo >= 1e-2 && hi <= 1e2, "envelope within [1e-2, 1e2]");
  out.detail << "envelope [" << sci(lo) << ", " << sci(hi) << "]";
  for (const char* scale : {"9/10", "11/10"}) {
    opt.radius_scale = scale;
    const ExperimentReport rep = ratio_test(smoothed_cylinder(), opt, ctx);
    const double growth = rep.summary["envelope_growth"].get<double>();
    const bool grows = std::string(scale) == "9/10";
    out.require(rep.summary["envelope_trend"] == (grows ? "increasing" : "decreasing"), std::string("monotone at ") + scale);
    out.require(grows ? growth >= 1e3 : growth <= 1e-3, std::string("factor 1e3 at ") + scale);
    out.detail << "; " << scale << " growth " << sci(growth);
  }
}

// Volume by exact integration of s^2 for polynomial profiles.
MpReal volume(const ShapeProfile& p, const PrecisionCtx& ctx) {
  if (p.kind() == ShapeKind::spheroid) return pi(ctx) * 4L / 3L * p.a().to_mp(ctx) * p.a().to_mp(ctx) * p.b().to_mp(ctx);
  if (p.kind() == ShapeKind::cylinder)
    return pi(ctx) * p.a().to_mp(ctx) * p.a().to_mp(ctx) * (p.z_max().to_mp(ctx) - p.z_min().to_mp(ctx));
  const MpReal lo = p.z_min().to_mp(ctx), hi = p.z_max().to_mp(ctx);
  MpReal sum(ctx.bits());
  for (std::size_t k = 0; k < p.s2().size(); ++k) {
    const long e = static_cast<long>(k + 1);
    sum += MpReal(p.s2()[k], ctx) * (pow(hi, MpReal(e, ctx)) - pow(lo, MpReal(e, ctx))) / e;
  }
  return pi(ctx) * sum;
}

void oracle_equivalence(Outcome& out, bool) {
  const PrecisionCtx ctx(50);
  const MpReal tol = ctx.rel_tol() * 1000L;
  for (const auto& [name, body] : {std::pair{"spheroid", spheroid(Rational(3, 2), Rational(1))},
                                   std::pair{"cylinder", unit_brillouin_cylinder()}}) {
    const SheSeries c = she_closed_form(body, 60, ctx);
    const SheSeries e = she_exact_symbolic(body, 60, ctx);
    const SheSeries q = she_quadrature(body, 60, ctx);
    bool ce = true, cq = true, eq = true;
    const MpReal floor = abs(c.coeffs[0]);
    for (std::size_t n = 0; n <= 60; ++n) {
      ce = ce && close(c.coeffs[n], e.coeffs[n], tol, floor);
      cq = cq && close(q.coeffs[n], c.coeffs[n], tol, floor);
      eq = eq && close(q.coeffs[n], e.coeffs[n], tol, floor);
    }
    out.require(ce && cq && eq, std::string(name) + " paths agree");
    out.detail << name << " paths agree: " << (ce && cq && eq ? "yes" : "no") << "; ";
  }
  const SheSeries sphere = she_exact_symbolic(spheroid(Rational(1), Rational(1)), 30, ctx);
  bool zero = true;
  for (std::size_t n = 1; n < sphere.coeffs.size(); ++n) zero = zero && sphere.coeffs[n].is_zero();
  out.require(zero, "sphere A_n = 0 exactly for n >= 1");

  const Rational rho(3, 2), G(2);
  const ShapeProfile bodies[] = {
      ShapeProfile::spheroid(Surd(Rational(3, 2)), Surd(1), rho, G),
      ShapeProfile::cylinder(Surd(Rational(1, 2)), Surd::parse("sqrt(3)"), rho, G),
      ShapeProfile::polynomial(RatPoly({1, 0, 0, 0, -1}), Surd(-1), Surd(1), rho, G),
      ShapeProfile::polynomial(RatPoly({4, 0, 3, 0, -1}), Surd(-2), Surd(2), rho, G),
      ShapeProfile::polynomial(RatPoly({1, 0, -1}), Surd(Rational(-1, 2)), Surd(1), rho, G)};
  bool monopole = true;
  for (const auto& body : bodies) {
    const MpReal expected = -(MpReal(G * rho, ctx) * volume(body, ctx));
    monopole = monopole && abs(reference_series(body, 0, ctx).coeffs[0] - expected) <= ctx.rel_tol() * abs(expected);
  }
  out.require(monopole, "A_0 = -G rho V");
  out.detail << "sphere multipoles vanish: " << (zero ? "yes" : "no") << "; A_0 = -G rho V on 5 bodies: "
             << (monopole ? "yes" : "no");
}

void pade_order_condition(Outcome& out, bool) {
  const PrecisionCtx ctx(60);
  std::mt19937_64 rng(20240531);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000), order(1, 15);
  int certified = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int N = static_cast<int>(order(rng));
    std::vector<MpReal> a;
    for (int n = 0; n <= 2 * N; ++n) a.emplace_back(Rational(num(rng), den(rng)), ctx);
    const PadeApproximant p = build_pade(std::span<const MpReal>(a), N, ctx);
    certified += p.certificate_residual <= p.certificate_bound;
  }
  out.require(certified == 50, "all 50 random builds certified");

  // sum_j c_j / (Z - r_j) has A_n = sum_j c_j r_j^n.
  std::uniform_int_distribution<long> k_dist(1, 6), pole_num(-300, 300);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const int k = static_cast<int>(k_dist(rng));
    std::vector<Rational> r, c;
    while (static_cast<int>(r.size()) < k) {
      Rational cand(pole_num(rng), 100);
      if (abs(cand) < Rational(1, 2)) continue;
      bool distinct = true;
      for (const auto& x : r) distinct = distinct && abs(x - cand) >= Rational(1, 10);
      if (!distinct) continue;
      r.push_back(cand);
      const long top = num(rng);
      c.push_back(Rational(top == 0 ? 1 : top, den(rng)));
    }
    std::vector<MpReal> a;
    std::vector<Rational> power(static_cast<std::size_t>(k), Rational(1));
    for (int n = 0; n <= 2 * k; ++n) {
      Rational s = 0;
      for (int j = 0; j < k; ++j) {
        s += c[static_cast<std::size_t>(j)] * power[static_cast<std::size_t>(j)];
        power[static_cast<std::size_t>(j)] *= r[static_cast<std::size_t>(j)];
      }
      a.emplace_back(s, ctx);
    }
    const PadeApproximant p = build_pade(std::span<const MpReal>(a), k, ctx);
    const PoleSet poles = pade_poles(p, ctx);
    out.require(static_cast<int>(poles.poles.size()) == k, "pole count of an exact rational input");
    for (const auto& x : r) {
      MpReal best(std::numeric_limits<double>::infinity(), ctx);
      for (const auto& q : poles.poles) best = min(best, distance(q.location, MpComplex(MpReal(x, ctx))));
      worst = std::max(worst, best.to_double());
    }
  }
  out.require(worst <= 1e-40, "pole error <= 1e-40");
  out.detail << certified << "/50 random builds certified; worst pole error on exact [k,k] inputs " << sci(worst);
}

std::set<int> parse_ids(const std::string& text) {
  std::set<int> ids;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ','))
    if (!item.empty()) ids.insert(std::stoi(item));
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one PASS/FAIL line each"};
  bool full = false;
  std::string only, known;
  app.add_flag("--full", full, "run the full-size extrapolation benchmark (minutes)");
  app.add_option("--only", only, "comma-separated criterion numbers to run");
  app.add_option("--known-failures", known, "comma-separated criteria allowed to fail without a nonzero exit");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "discriminant exactness", discriminant_exactness},
      {2, "printed-root reproduction", printed_roots},
      {3, "spheroid radius", spheroid_radius},
      {4, "cylinder Brillouin", cylinder_brillouin},
      {5, "pole accumulation", pole_accumulation},
      {6, "downward continuation", downward_continuation},
      {7, "extrapolation benchmark", extrapolation},
      {8, "precision threshold", precision_threshold},
      {9, "ratio test", ratio_envelope},
      {10, "oracle equivalence", oracle_equivalence},
      {11, "Pade order condition", pade_order_condition},
  };
  const std::set<int> selected = parse_ids(only), allowed = parse_ids(known);

  int passed = 0, failed = 0;
  std::set<int> unexpected;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out, full);
    } catch (const std::exception& e) {
      out.pass = false;
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  ("
              << std::fixed << std::setprecision(1) << secs << " s)  " << out.text() << std::endl;
    std::cout.unsetf(std::ios::fixed);
    if (out.pass) {
      ++passed;
    } else {
      ++failed;
      if (!allowed.count(c.id)) unexpected.insert(c.id);
    }
  }
  std::cout << passed << " passed, " << failed << " failed";
  if (!unexpected.empty()) std::cout << " (" << unexpected.size() << " not listed as known failures)";
  std::cout << std::endl;
  return unexpected.empty() ? 0 : 1;
}
