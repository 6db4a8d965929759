// shepade: SHE coefficients, singularities and Pade continuation from the
// command line. CSV goes to stdout unless --out is given; diagnostics go to
// stderr. Exit codes: 0 success, 1 usage or input error, 2 numerical failure.

#include "shepade/experiments.hpp"
#include "shepade/kernels.hpp"
#include "shepade/planet_io.hpp"
#include "shepade/singularity.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace shepade;

namespace {

struct Common {
  std::string planet;
  int digits = 50;
  int guard = 10;
  std::string out;
  std::string stem;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_planet) {
  auto* p = cmd->add_option("--planet", c.planet, "planet definition (JSON)");
  if (needs_planet) p->required()->check(CLI::ExistingFile);
  cmd->add_option("--digits", c.digits, "significant decimal digits of the working precision")
      ->check(CLI::Range(16, 100000));
  cmd->add_option("--guard", c.guard, "guard digits: rank and pole tolerances are 10^-(digits - guard)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", c.out, "write <stem>.csv and <stem>.json into this directory instead of stdout");
  cmd->add_option("--stem", c.stem, "file stem under --out (default: experiment name)");
  cmd->add_flag("--json", c.json, "print the JSON sidecar instead of the CSV on stdout");
}

void add_froissart(CLI::App* cmd, FroissartOptions& f) {
  cmd->add_option("--pair-tol", f.pair_tol, "pole-zero pairing distance, relative to the local pole spacing");
  cmd->add_option("--residue-tol", f.residue_tol, "residues below this fraction of the median are spurious");
}

void emit(const ExperimentReport& rep, const Common& c) {
  if (!c.out.empty()) {
    rep.write(c.out, c.stem);
    return;
  }
  if (c.json)
    std::cout << rep.sidecar().dump(2) << '\n';
  else
    std::cout << rep.csv();
}

PrecisionCtx context(const Common& c) {
  if (c.guard >= c.digits) throw CLI::ValidationError("--guard", "must be smaller than --digits");
  return PrecisionCtx(c.digits, c.guard);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else if (ch != ' ') {
      item += ch;
    }
  }
  return out;
}

ExperimentReport coeffs_report(const ShapeProfile& profile, int n_max, const std::string& method, const PrecisionCtx& ctx) {
  const SheSeries s = [&] {
    if (method == "closed") return she_closed_form(profile, n_max, ctx);
    if (method == "symbolic") return she_exact_symbolic(profile, n_max, ctx);
    if (method == "quadrature") return she_quadrature(profile, n_max, ctx);
    return reference_series(profile, n_max, ctx);
  }();
  ExperimentReport rep;
  rep.experiment = "coeffs";
  rep.params["planet"] = planet_to_json(profile);
  rep.params["digits"] = ctx.digits();
  rep.params["n_max"] = n_max;
  rep.params["method"] = method;
  rep.columns = {"n", "A_n"};
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) rep.rows.push_back({std::to_string(n), to_sci(s.coeffs[n], ctx.digits())});
  rep.summary["provenance"] = to_string(s.provenance);
  return rep;
}

ExperimentReport discriminant_report(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  ExperimentReport rep;
  rep.experiment = "discriminant";
  rep.params["planet"] = planet_to_json(profile);
  rep.params["digits"] = ctx.digits();
  rep.params["guard"] = ctx.guard();
  rep.columns = {"re", "im", "rot_re", "rot_im", "class", "origin"};
  const BiPoly p = BiPoly::distance_polynomial(profile.s2());
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  // p linear in z (sphere): no discriminant, the series terminates.
  if (p.degree_z() >= 2) {
    const RatPoly disc = discriminant_in_z(p);
    for (const auto& q : disc.coeffs()) coeffs.push_back(q.get_str());
  }
  rep.summary["discriminant_coeffs"] = coeffs;
  const SingularitySet set = analyze(profile, ctx);
  for (const auto& s : set.roots)
    rep.rows.push_back({to_sci(s.location.re(), ctx.digits()), to_sci(s.location.im(), ctx.digits()),
                        to_sci(s.rotated.re(), ctx.digits()), to_sci(s.rotated.im(), ctx.digits()), to_string(s.cls),
                        to_string(s.origin)});
  rep.summary["radius_status"] = to_string(set.status);
  rep.summary["convergence_radius"] = to_sci(set.convergence_radius, ctx.digits());
  rep.summary["brillouin"] = to_sci(set.brillouin, ctx.digits());
  return rep;
}

// Pade and partial sums along the ray at colatitude theta.
ExperimentReport continue_report(const ShapeProfile& profile, int N, int n_terms, const std::string& theta_text,
                                 const std::vector<std::string>& at, const PrecisionCtx& ctx) {
  if (n_terms < 2 * N + 1) throw CLI::ValidationError("--terms", "must be >= 2N + 1");
  const SheSeries axis = reference_series(profile, n_terms - 1, ctx);
  const MpReal theta = parse_angle(theta_text, ctx);
  const SheSeries series = theta.is_zero() ? axis : weight_colatitude(axis, theta);
  const PadeApproximant p = build_pade(series, N, ctx);
  ExperimentReport rep;
  rep.experiment = "continue";
  rep.params["planet"] = planet_to_json(profile);
  rep.params["digits"] = ctx.digits();
  rep.params["guard"] = ctx.guard();
  rep.params["N"] = N;
  rep.params["n_terms"] = n_terms;
  rep.params["theta"] = theta_text;
  rep.params["at"] = at;
  rep.columns = {"r", "pade", "she_partial"};
  for (const auto& text : at) {
    const MpReal r(text, ctx);
    if (r <= MpReal(0L, ctx)) throw CLI::ValidationError("--at", "radii must be positive");
    const MpReal inv = MpReal(1L, ctx) / r;
    MpReal power = inv, sum(ctx.bits());
    for (const auto& a : series.coeffs) {
      sum += a * power;
      power *= inv;
    }
    rep.rows.push_back({to_sci(r, ctx.digits()), to_sci(pade_eval(p, r), ctx.digits()), to_sci(sum, ctx.digits())});
  }
  rep.summary["effective_N"] = p.effective_N;
  rep.summary["certified"] = p.certified();
  return rep;
}

int run(int argc, char** argv) {
  CLI::App app{"SHE coefficients, singularities and Pade downward continuation for axisymmetric planets"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_help_all_flag("--help-all", "help for every subcommand");

  Common common;
  std::function<ExperimentReport()> job;

  // coeffs
  int n_max = 20;
  std::string method = "auto";
  auto* coeffs = app.add_subcommand("coeffs", "SHE coefficients A_0..A_n");
  add_common(coeffs, common, true);
  coeffs->add_option("-n,--n,--terms", n_max, "highest coefficient index")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--method", method, "auto, closed, symbolic or quadrature")
      ->check(CLI::IsMember({"auto", "closed", "symbolic", "quadrature"}));
  coeffs->callback([&] {
    job = [&] { return coeffs_report(load_planet(common.planet), n_max, method, context(common)); };
  });

  // discriminant
  auto* disc = app.add_subcommand("discriminant", "discriminant polynomial, classified roots and radii");
  add_common(disc, common, true);
  disc->callback([&] { job = [&] { return discriminant_report(load_planet(common.planet), context(common)); }; });

  // poles, theta-portrait
  PortraitOptions portrait;
  for (const char* name : {"poles", "theta-portrait"}) {
    const bool weighted = std::string(name) == "theta-portrait";
    auto* cmd = app.add_subcommand(name, weighted ? "pole portrait of the series weighted by P_n(cos theta)"
                                                  : "Pade poles against discriminant roots on the axis");
    add_common(cmd, common, true);
    cmd->add_option("--N", portrait.N, "Pade order [N,N]")->check(CLI::PositiveNumber);
    auto* t = cmd->add_option("--theta", portrait.theta, "colatitude: 0.3, pi, 1/4*pi");
    if (weighted) t->required();
    cmd->add_option("--boundary-samples", portrait.boundary_samples, "points along the boundary curve")
        ->check(CLI::Range(2, 100000));
    add_froissart(cmd, portrait.froissart);
    cmd->callback([&] { job = [&] { return pole_portrait(load_planet(common.planet), portrait, context(common)); }; });
  }

  // continue
  int cont_N = 50, cont_terms = 0;
  std::string cont_theta = "0", cont_at;
  auto* cont = app.add_subcommand("continue", "evaluate the Pade approximant and the partial sum at radii");
  add_common(cont, common, true);
  cont->add_option("--N", cont_N, "Pade order [N,N]")->check(CLI::PositiveNumber);
  cont->add_option("--terms", cont_terms, "series terms (0: 2N + 1)")->check(CLI::NonNegativeNumber);
  cont->add_option("--theta", cont_theta, "colatitude of the ray");
  cont->add_option("--at", cont_at, "comma-separated radii, e.g. 0.9,1.2")->required();
  cont->callback([&] {
    job = [&] {
      const int terms = cont_terms > 0 ? cont_terms : 2 * cont_N + 1;
      return continue_report(load_planet(common.planet), cont_N, terms, cont_theta, split(cont_at), context(common));
    };
  });

  // error-scan
  ErrorScanOptions scan;
  auto* es = app.add_subcommand("error-scan", "log10 relative error of the SHE partial sum and of Pade on the axis");
  add_common(es, common, true);
  es->add_option("--terms", scan.n_terms, "series terms")->check(CLI::Range(3, 1000000));
  es->add_option("--N", scan.N, "Pade order (0: (terms - 1) / 2)")->check(CLI::NonNegativeNumber);
  es->add_option("--z-lo", scan.z_grid.lo, "first grid point");
  es->add_option("--z-hi", scan.z_grid.hi, "last grid point");
  es->add_option("--z-count", scan.z_grid.count, "grid points")->check(CLI::PositiveNumber);
  es->callback([&] { job = [&] { return error_scan(load_planet(common.planet), scan, context(common)); }; });

  // precision-sweep
  SweepOptions sweep;
  std::string sweep_digits = "10,11,12,13";
  auto* ps = app.add_subcommand("precision-sweep", "pole portraits from coefficients rounded to few digits");
  add_common(ps, common, true);
  ps->add_option("--n-coeffs", sweep.n_coeffs, "coefficients used")->check(CLI::Range(3, 1000000));
  ps->add_option("--sweep-digits", sweep_digits, "comma-separated rounding precisions");
  add_froissart(ps, sweep.froissart);
  ps->callback([&] {
    job = [&] {
      sweep.digits.clear();
      for (const auto& d : split(sweep_digits)) sweep.digits.push_back(std::stoi(d));
      return precision_sweep(load_planet(common.planet), sweep, context(common));
    };
  });

  // bench-extrapolation
  ExtrapolationOptions bench;
  int bench_digits = 1000, bench_N = 0;
  bool full_order = false;
  auto* be = app.add_subcommand("bench-extrapolation", "(1 + z^2)^{3/2}: partial sum against Pade at 16 and --digits digits");
  be->add_option("--digits", bench_digits, "high precision build")->check(CLI::Range(16, 100000));
  be->add_option("--terms", bench.terms, "highest power of z kept")->check(CLI::Range(2, 1000000));
  be->add_option("--N", bench_N, "Pade order (0: terms / 2)")->check(CLI::NonNegativeNumber);
  be->add_option("--x-lo", bench.x_grid.lo, "first grid point");
  be->add_option("--x-hi", bench.x_grid.hi, "last grid point");
  be->add_option("--x-count", bench.x_grid.count, "grid points")->check(CLI::PositiveNumber);
  be->add_flag("--full-order", full_order, "solve at the requested order without rank reduction");
  be->add_option("--out", common.out, "write <stem>.csv and <stem>.json into this directory instead of stdout");
  be->add_option("--stem", common.stem, "file stem under --out (default: experiment name)");
  be->add_flag("--json", common.json, "print the JSON sidecar instead of the CSV on stdout");
  be->callback([&] {
    job = [&] {
      bench.N = bench_N > 0 ? bench_N : bench.terms / 2;
      bench.digits = bench_digits == 16 ? std::vector<int>{16} : std::vector<int>{16, bench_digits};
      bench.reduce_order = !full_order;
      return extrapolation_benchmark(bench);
    };
  });

  // ratio-test
  RatioOptions ratio;
  auto* rt = app.add_subcommand("ratio-test", "n^2 A_2n / (scale |Z0|)^2n with |Z0| the interior root modulus");
  add_common(rt, common, true);
  rt->add_option("--n-max", ratio.n_max, "largest n")->check(CLI::PositiveNumber);
  rt->add_option("--n-min", ratio.n_min, "first n of the envelope")->check(CLI::PositiveNumber);
  rt->add_option("--radius-scale", ratio.radius_scale, "factor applied to |Z0|, e.g. 9/10");
  rt->add_option("--window", ratio.window, "envelope window")->check(CLI::PositiveNumber);
  rt->callback([&] { job = [&] { return ratio_test(load_planet(common.planet), ratio, context(common)); }; });

  // roughen
  RoughenOptions rough;
  auto* ro = app.add_subcommand("roughen", "Chebyshev planet with an optional ripple: classified roots and radii");
  add_common(ro, common, false);
  ro->add_option("--base-order", rough.base_order, "degree of s^2: 2, 4, 6, 8 or 10")->check(CLI::IsMember({2, 4, 6, 8, 10}));
  ro->add_option("--ripple-order", rough.ripple_order, "even Chebyshev order of the ripple");
  ro->add_option("--ripple-amp", rough.ripple_amp, "ripple amplitude, exact (1/50)");
  ro->callback([&] { job = [&] { return roughen_report(rough, context(common)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (const char* threads = std::getenv("TOOL_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || n < 1) {
      std::cerr << "error: TOOL_THREADS must be a positive integer\n";
      return 1;
    }
    kernels::set_thread_limit(static_cast<int>(n));
  }

  try {
    emit(job(), common);
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
