#include "shepade/experiments.hpp"

#include "shepade/errors.hpp"
#include "shepade/kernels.hpp"
#include "shepade/planet_io.hpp"
#include "shepade/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace shepade {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(const MpReal& x, const PrecisionCtx& ctx) { return to_sci(x, ctx.digits()); }

// log10 |err|, floored at -floor_digits so exact agreement stays finite.
MpReal log10_err(const MpReal& err, int floor_digits, const PrecisionCtx& ctx) {
  const MpReal floor = pow10(-floor_digits, ctx);
  return log10(max(abs(err), floor));
}

ojson ctx_json(const PrecisionCtx& ctx) { return {{"digits", ctx.digits()}, {"guard", ctx.guard()}}; }

PrecisionCtx ctx_from(const nlohmann::json& params) {
  return PrecisionCtx(params.at("digits").get<int>(), params.value("guard", 10));
}

ojson froissart_json(const FroissartOptions& f) { return {{"pair_tol", f.pair_tol}, {"residue_tol", f.residue_tol}}; }

FroissartOptions froissart_from(const nlohmann::json& params) {
  FroissartOptions f;
  f.pair_tol = params.value("pair_tol", f.pair_tol);
  f.residue_tol = params.value("residue_tol", f.residue_tol);
  return f;
}

ojson grid_json(const Grid& g) { return {{"lo", g.lo}, {"hi", g.hi}, {"count", g.count}}; }

Grid grid_from(const nlohmann::json& j) {
  return Grid{j.at("lo").get<std::string>(), j.at("hi").get<std::string>(), j.at("count").get<int>()};
}

ojson params_base(const ShapeProfile& profile, const PrecisionCtx& ctx) {
  ojson p;
  p["planet"] = planet_to_json(profile);
  p.update(ctx_json(ctx));
  return p;
}

void add_boundary_rows(ExperimentReport& rep, const ShapeProfile& profile, int samples, const PrecisionCtx& ctx,
                       bool with_residue_column) {
  const MpReal lo = profile.z_min().to_mp(ctx);
  const MpReal hi = profile.z_max().to_mp(ctx);
  samples = std::max(samples, 2);
  for (int k = 0; k < samples; ++k) {
    const MpReal y = lo + (hi - lo) * MpReal(static_cast<long>(k), ctx) / static_cast<long>(samples - 1);
    const MpReal x = sqrt(max(poly_eval(profile.s2(), y), MpReal(ctx.bits())));
    for (const MpReal& sx : {x, -x}) {
      if (with_residue_column)
        rep.rows.push_back({"boundary", num(sx, ctx), num(y, ctx), "", ""});
      else
        rep.rows.push_back({"boundary", num(sx, ctx), num(y, ctx), ""});
    }
  }
}

// Distance from each target to the nearest genuine pole (rotated plane).
MpReal nearest_genuine(const PoleSet& poles, const MpComplex& target, const PrecisionCtx& ctx) {
  MpReal best(ctx.bits());
  bool found = false;
  for (const auto& q : poles.poles) {
    if (q.spurious) continue;
    MpReal d = distance(q.rotated, target);
    if (!found || d < best) best = d;
    found = true;
  }
  if (!found) return MpReal(std::numeric_limits<double>::infinity(), ctx);
  return best;
}

const Pole* nearest_genuine_pole(const PoleSet& poles, const MpComplex& target) {
  const Pole* best = nullptr;
  MpReal best_d;
  for (const auto& q : poles.poles) {
    if (q.spurious) continue;
    MpReal d = distance(q.rotated, target);
    if (!best || d < best_d) {
      best = &q;
      best_d = d;
    }
  }
  return best;
}

double to_json_double(const MpReal& x) {
  const double d = x.to_double();
  return std::isfinite(d) ? d : std::numeric_limits<double>::max();
}

}  // namespace

// ---------------------------------------------------------------------------

std::string ExperimentReport::csv() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << columns[j];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json ExperimentReport::sidecar() const {
  ojson j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["columns"] = columns;
  j["summary"] = summary;
  return j;
}

void ExperimentReport::write(const std::filesystem::path& dir, const std::string& stem) const {
  std::filesystem::create_directories(dir);
  const std::string base = stem.empty() ? experiment : stem;
  std::ofstream csv_out(dir / (base + ".csv"));
  csv_out << csv();
  std::ofstream json_out(dir / (base + ".json"));
  json_out << sidecar().dump(2) << '\n';
  if (!csv_out || !json_out) throw std::runtime_error("cannot write report files under " + dir.string());
}

std::vector<MpReal> Grid::points(const PrecisionCtx& ctx) const {
  if (count < 1) throw InputError("grid needs at least one point");
  const MpReal a(lo, ctx);
  const MpReal b(hi, ctx);
  std::vector<MpReal> out;
  if (count == 1) return {a};
  for (int k = 0; k < count; ++k) out.push_back(a + (b - a) * MpReal(static_cast<long>(k), ctx) / static_cast<long>(count - 1));
  return out;
}

MpReal parse_angle(const std::string& text, const PrecisionCtx& ctx) {
  const auto at = text.find("pi");
  if (at == std::string::npos) return MpReal(text, ctx);
  if (at + 2 != text.size()) throw InputError("malformed angle '" + text + "'");
  std::string factor = text.substr(0, at);
  if (!factor.empty() && factor.back() == '*') factor.pop_back();
  Rational q = 1;
  if (factor == "-") {
    q = -1;
  } else if (!factor.empty()) {
    q = parse_rational(factor);
  }
  return pi(ctx) * MpReal(q, ctx);
}

SheSeries reference_series(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx) {
  if (profile.kind() == ShapeKind::polynomial) return she_exact_symbolic(profile, n_max, ctx);
  return she_closed_form(profile, n_max, ctx);
}

// ---------------------------------------------------------------------------

ExperimentReport pole_portrait(const ShapeProfile& profile, const PortraitOptions& options, const PrecisionCtx& ctx) {
  ExperimentReport rep;
  rep.experiment = "pole_portrait";
  rep.params = params_base(profile, ctx);
  rep.params["N"] = options.N;
  rep.params["theta"] = options.theta;
  rep.params.update(froissart_json(options.froissart));
  rep.params["boundary_samples"] = options.boundary_samples;
  rep.columns = {"kind", "re", "im", "abs_residue", "label"};

  const SheSeries axis = reference_series(profile, 2 * options.N, ctx);
  const MpReal theta = parse_angle(options.theta, ctx);
  const SheSeries series = theta.is_zero() ? axis : weight_colatitude(axis, theta);
  const PadeApproximant p = build_pade(series, options.N, ctx);
  const PoleSet poles = filter_froissart(pade_poles(p, ctx), pade_zeros(p, ctx), options.froissart);
  const SingularitySet sing = analyze(profile, ctx);

  for (const auto& q : poles.poles)
    rep.rows.push_back({"pole", num(q.rotated.re(), ctx), num(q.rotated.im(), ctx), num(abs(q.residue), ctx),
                        q.spurious ? "spurious" : "genuine"});
  for (const auto& s : sing.roots)
    rep.rows.push_back({s.origin == SingularityOrigin::edge ? "edge" : "root", num(s.rotated.re(), ctx),
                        num(s.rotated.im(), ctx), "", to_string(s.cls)});
  add_boundary_rows(rep, profile, options.boundary_samples, ctx, true);
  rep.rows.push_back({"radius", num(sing.brillouin, ctx), "", "", "brillouin"});
  rep.rows.push_back({"radius", num(sing.convergence_radius, ctx), "", "", "convergence"});

  // Gaps between singularities and the genuine pole cloud.
  MpReal max_interior(ctx.bits()), min_exterior(std::numeric_limits<double>::infinity(), ctx);
  bool any_interior = false, any_exterior = false;
  for (const auto& s : sing.roots) {
    MpReal gap = nearest_genuine(poles, s.rotated, ctx);
    if (s.cls == SingularityClass::exterior) {
      min_exterior = min(min_exterior, gap);
      any_exterior = true;
    } else {
      max_interior = max(max_interior, gap);
      any_interior = true;
    }
  }
  // Root-test estimate over the upper half of the coefficients.
  MpReal root_test(ctx.bits());
  for (std::size_t n = static_cast<std::size_t>(options.N); n < axis.coeffs.size(); ++n) {
    if (axis.coeffs[n].is_zero()) continue;
    root_test = max(root_test, pow(abs(axis.coeffs[n] / axis.coeffs[0]), MpReal(1L, ctx) / static_cast<long>(n)));
  }

  ojson& sm = rep.summary;
  sm["N"] = options.N;
  sm["effective_N"] = p.effective_N;
  sm["certified"] = p.certified();
  sm["certificate_residual"] = to_json_double(p.certificate_residual);
  sm["certificate_bound"] = to_json_double(p.certificate_bound);
  sm["poles"] = poles.poles.size();
  sm["spurious"] = poles.spurious_count();
  sm["genuine"] = poles.poles.size() - poles.spurious_count();
  sm["brillouin"] = sing.brillouin.to_double();
  sm["convergence_radius"] = sing.convergence_radius.to_double();
  sm["radius_status"] = to_string(sing.status);
  sm["root_test_radius"] = root_test.to_double();
  if (sing.status == RadiusStatus::from_roots) {
    sm["radius_disagrees_with_root_test"] =
        std::fabs(root_test.to_double() / sing.convergence_radius.to_double() - 1.0) > 0.05;
  }
  const double b = sing.brillouin.to_double();
  if (any_interior) {
    sm["max_interior_gap"] = to_json_double(max_interior);
    sm["max_interior_gap_rel"] = to_json_double(max_interior) / b;
  }
  if (any_exterior) {
    sm["min_exterior_gap"] = to_json_double(min_exterior);
    sm["min_exterior_gap_rel"] = to_json_double(min_exterior) / b;
  }
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport error_scan(const ShapeProfile& profile, const ErrorScanOptions& options, const PrecisionCtx& ctx) {
  if (options.n_terms < 3) throw InputError("error scan needs at least 3 terms");
  const int N = options.N > 0 ? options.N : (options.n_terms - 1) / 2;
  if (2 * N + 1 > options.n_terms) throw InputError("n_terms must be >= 2N + 1");

  ExperimentReport rep;
  rep.experiment = "error_scan";
  rep.params = params_base(profile, ctx);
  rep.params["n_terms"] = options.n_terms;
  rep.params["N"] = N;
  rep.params["z_grid"] = grid_json(options.z_grid);
  rep.columns = {"Z", "log10_err_she", "log10_err_pade"};

  const SheSeries series = reference_series(profile, options.n_terms - 1, ctx);
  const PadeApproximant p = build_pade(series, N, ctx);
  const std::vector<MpReal> grid = options.z_grid.points(ctx);
  const MpReal top = profile.z_max().to_mp(ctx);
  const bool spheroid_oracle = profile.kind() == ShapeKind::spheroid && !(profile.a() == profile.b());

  struct Row {
    bool skipped = false;
    std::string note;
    MpReal she, pade;
  };
  std::vector<Row> out(grid.size());
  kernels::for_each_index(
      grid.size(),
      [&](std::size_t k) {
        const MpReal& Z = grid[k];
        Row& row = out[k];
        try {
          if (Z <= top) {
            row.skipped = true;
            row.note = "inside the planet";
            return;
          }
          const MpReal exact = spheroid_oracle ? potential_spheroid_closed(profile, MpComplex(Z), ctx).re()
                                               : potential_axis_exact(profile, Z, ctx);
          const MpReal inv = MpReal(1L, ctx) / Z;
          MpReal power = inv, sum(ctx.bits());
          for (const auto& a : series.coeffs) {
            sum += a * power;
            power *= inv;
          }
          row.she = log10_err((sum - exact) / exact, ctx.digits(), ctx);
          row.pade = log10_err((pade_eval(p, Z) - exact) / exact, ctx.digits(), ctx);
        } catch (const std::exception& e) {
          row.skipped = true;
          row.note = e.what();
        }
      },
      kernels::Exec::parallel);

  ojson skipped = ojson::array();
  int better = 0, used = 0;
  MpReal min_margin(std::numeric_limits<double>::infinity(), ctx);
  MpReal worst_pade(-std::numeric_limits<double>::infinity(), ctx);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (out[k].skipped) {
      skipped.push_back({{"Z", num(grid[k], ctx)}, {"note", out[k].note}});
      continue;
    }
    ++used;
    rep.rows.push_back({num(grid[k], ctx), num(out[k].she, ctx), num(out[k].pade, ctx)});
    if (out[k].pade < out[k].she) ++better;
    min_margin = min(min_margin, out[k].she - out[k].pade);
    worst_pade = max(worst_pade, out[k].pade);
  }
  ojson& sm = rep.summary;
  sm["N"] = N;
  sm["effective_N"] = p.effective_N;
  sm["certified"] = p.certified();
  sm["rows"] = used;
  sm["pade_better"] = better;
  if (used > 0) {
    sm["min_margin_decades"] = min_margin.to_double();
    sm["max_log10_err_pade"] = worst_pade.to_double();
  }
  sm["skipped"] = skipped;
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport precision_sweep(const ShapeProfile& profile, const SweepOptions& options, const PrecisionCtx& ctx) {
  if (options.n_coeffs < 3) throw InputError("precision sweep needs at least 3 coefficients");
  const int N = (options.n_coeffs - 1) / 2;
  ExperimentReport rep;
  rep.experiment = "precision_sweep";
  rep.params = params_base(profile, ctx);
  rep.params["n_coeffs"] = options.n_coeffs;
  rep.params["sweep_digits"] = options.digits;
  rep.params.update(froissart_json(options.froissart));
  rep.columns = {"digits", "re", "im", "abs_residue", "label"};

  const SheSeries exact = reference_series(profile, options.n_coeffs - 1, ctx);
  auto portrait = [&](const std::vector<MpReal>& coeffs, PadeApproximant& p) {
    p = build_pade(std::span<const MpReal>(coeffs), N, ctx);
    return filter_froissart(pade_poles(p, ctx), pade_zeros(p, ctx), options.froissart);
  };
  PadeApproximant ref_pade;
  const PoleSet reference = portrait(exact.coeffs, ref_pade);
  const SingularitySet sing = analyze(profile, ctx);
  std::vector<const Pole*> ref_corner;
  for (const auto& s : sing.roots)
    if (s.cls != SingularityClass::exterior) ref_corner.push_back(nearest_genuine_pole(reference, s.rotated));

  ojson per_digit = ojson::array();
  for (int d : options.digits) {
    std::vector<MpReal> coeffs = exact.coeffs;
    if (d < ctx.digits())
      for (auto& c : coeffs) c = mp_round_to_digits(c, d);
    PadeApproximant p;
    const PoleSet poles = portrait(coeffs, p);
    for (const auto& q : poles.poles)
      rep.rows.push_back({std::to_string(d), num(q.rotated.re(), ctx), num(q.rotated.im(), ctx),
                          num(abs(q.residue), ctx), q.spurious ? "spurious" : "genuine"});

    MpReal genuine_dev(ctx.bits());
    for (const auto& q : poles.poles)
      if (!q.spurious) genuine_dev = max(genuine_dev, nearest_genuine(reference, q.rotated, ctx));
    MpReal corner_dev(ctx.bits());
    bool corner_missing = false;
    std::size_t c = 0;
    for (const auto& s : sing.roots) {
      if (s.cls == SingularityClass::exterior) continue;
      const Pole* ref = ref_corner[c++];
      const Pole* now = nearest_genuine_pole(poles, s.rotated);
      if (!ref || !now) {
        corner_missing = true;
        continue;
      }
      corner_dev = max(corner_dev, distance(ref->rotated, now->rotated));
    }
    ojson entry;
    entry["digits"] = d;
    entry["effective_N"] = p.effective_N;
    entry["poles"] = poles.poles.size();
    entry["spurious"] = poles.spurious_count();
    entry["max_genuine_deviation"] = to_json_double(genuine_dev);
    if (corner_missing)
      entry["corner_deviation"] = nullptr;
    else
      entry["corner_deviation"] = to_json_double(corner_dev);
    per_digit.push_back(entry);
  }
  rep.summary["N"] = N;
  rep.summary["reference_effective_N"] = ref_pade.effective_N;
  rep.summary["reference_spurious"] = reference.spurious_count();
  rep.summary["sweep"] = per_digit;
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport extrapolation_benchmark(const ExtrapolationOptions& options) {
  if (options.digits.empty()) throw InputError("extrapolation benchmark needs at least one precision");
  if (options.terms < 2 * options.N) throw InputError("terms must be >= 2N");
  ExperimentReport rep;
  rep.experiment = "extrapolation_benchmark";
  rep.params["terms"] = options.terms;
  rep.params["N"] = options.N;
  rep.params["bench_digits"] = options.digits;
  rep.params["x_grid"] = grid_json(options.x_grid);
  rep.params["reduce_order"] = options.reduce_order;
  rep.columns = {"x", "log10_err_series"};
  for (int d : options.digits) rep.columns.push_back("log10_err_pade_" + std::to_string(d));

  // (1 + u)^{3/2} = sum binom(3/2, k) u^k at u = z^2.
  std::vector<Rational> exact(static_cast<std::size_t>(options.terms) + 1, Rational(0));
  Rational binom = 1;
  for (int k = 0; 2 * k <= options.terms; ++k) {
    if (k > 0) binom *= Rational(5 - 2 * k, 2 * k);  // (3/2 - k + 1) / k
    exact[static_cast<std::size_t>(2 * k)] = binom;
  }
  const int top_digits = *std::max_element(options.digits.begin(), options.digits.end());
  const PrecisionCtx ref_ctx(top_digits + 30);
  const std::vector<MpReal> grid = options.x_grid.points(ref_ctx);

  std::vector<MpReal> truth, series_err;
  for (const auto& x : grid) {
    const MpReal u = x * x;
    truth.push_back(pow(1L + u, MpReal(1.5, ref_ctx)));
    MpReal sum(ref_ctx.bits()), power(1L, ref_ctx);
    for (const auto& a : exact) {
      if (sgn(a) != 0) sum += MpReal(a, ref_ctx) * power;
      power *= x;
    }
    series_err.push_back(log10_err(sum - truth.back(), top_digits, ref_ctx));
  }

  std::vector<std::vector<MpReal>> pade_err;
  ojson builds = ojson::array();
  for (int d : options.digits) {
    const PrecisionCtx ctx(d);
    std::vector<MpReal> coeffs;
    for (const auto& a : exact) coeffs.emplace_back(a, ctx);
    PadeOptions build;
    build.reduce_order = options.reduce_order;
    const PadeApproximant p = build_pade(std::span<const MpReal>(coeffs), options.N, ctx, build);
    std::vector<MpReal> errs(grid.size(), MpReal(ref_ctx.bits()));
    kernels::for_each_index(
        grid.size(),
        [&](std::size_t k) {
          try {
            MpReal v = pade_eval_series(p, MpReal(grid[k], ctx.bits()));
            errs[k] = log10_err(MpReal(v, ref_ctx.bits()) - truth[k], top_digits, ref_ctx);
          } catch (const std::domain_error&) {
            errs[k] = MpReal(std::numeric_limits<double>::infinity(), ref_ctx);
          }
        },
        kernels::Exec::parallel);
    pade_err.push_back(std::move(errs));
    builds.push_back({{"digits", d}, {"effective_N", p.effective_N}, {"certified", p.certified()}});
  }

  // Numbers at six significant digits: the errors are logarithms.
  const PrecisionCtx out_ctx(16);
  auto cell = [&](const MpReal& v) { return to_sci(v, 6); };
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<std::string> row = {num(MpReal(grid[k], out_ctx.bits()), out_ctx), cell(series_err[k])};
    for (const auto& errs : pade_err) row.push_back(cell(errs[k]));
    rep.rows.push_back(std::move(row));
  }
  rep.summary["builds"] = builds;
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport ratio_test(const ShapeProfile& profile, const RatioOptions& options, const PrecisionCtx& ctx) {
  if (options.n_max < options.n_min + options.window || options.n_min < 1 || options.window < 1)
    throw InputError("ratio test needs 1 <= n_min and n_min + window <= n_max");
  ExperimentReport rep;
  rep.experiment = "ratio_test";
  rep.params = params_base(profile, ctx);
  rep.params["n_max"] = options.n_max;
  rep.params["n_min"] = options.n_min;
  rep.params["radius_scale"] = options.radius_scale;
  rep.params["window"] = options.window;
  rep.columns = {"n", "ratio"};

  const SingularitySet sing = analyze(profile, ctx);
  MpReal radius(ctx.bits());
  bool found = false;
  for (const auto& s : sing.roots) {
    if (s.cls != SingularityClass::interior) continue;
    radius = max(radius, abs(s.location));
    found = true;
  }
  if (!found) throw NumericalError("ratio test: the profile has no interior discriminant roots");
  const MpReal scaled = radius * MpReal(parse_rational(options.radius_scale), ctx);

  const SheSeries series = reference_series(profile, 2 * options.n_max, ctx);
  const MpReal r2 = scaled * scaled;
  MpReal power(1L, ctx);
  std::vector<MpReal> ratio(static_cast<std::size_t>(options.n_max) + 1, MpReal(ctx.bits()));
  for (int n = 1; n <= options.n_max; ++n) {
    power *= r2;
    const auto k = static_cast<std::size_t>(n);
    ratio[k] = series.coeffs[2 * k] * static_cast<long>(n) * static_cast<long>(n) / power;
    rep.rows.push_back({std::to_string(n), num(ratio[k], ctx)});
  }

  // Envelope: maxima of |ratio| over consecutive windows in [n_min, n_max].
  std::vector<MpReal> envelope;
  std::vector<int> starts;
  for (int lo = options.n_min; lo + options.window - 1 <= options.n_max; lo += options.window) {
    MpReal m(ctx.bits());
    for (int n = lo; n < lo + options.window; ++n) m = max(m, abs(ratio[static_cast<std::size_t>(n)]));
    envelope.push_back(m);
    starts.push_back(lo);
  }
  auto spread = [&](std::size_t from) {
    MpReal hi(ctx.bits()), lo(std::numeric_limits<double>::infinity(), ctx);
    for (std::size_t i = from; i < envelope.size(); ++i) {
      hi = max(hi, envelope[i]);
      lo = min(lo, envelope[i]);
    }
    return hi / lo;
  };
  bool increasing = true, decreasing = true;
  for (std::size_t i = 1; i < envelope.size(); ++i) {
    increasing = increasing && envelope[i] > envelope[i - 1];
    decreasing = decreasing && envelope[i] < envelope[i - 1];
  }
  const int mid = (options.n_min + options.n_max) / 2;
  std::size_t half = 0;
  while (half < starts.size() && starts[half] < mid) ++half;
  if (half == starts.size()) half = starts.size() - 1;

  ojson& sm = rep.summary;
  sm["interior_radius"] = radius.to_double();
  sm["scaled_radius"] = scaled.to_double();
  sm["envelope_min"] = to_json_double(*std::min_element(envelope.begin(), envelope.end()));
  sm["envelope_max"] = to_json_double(*std::max_element(envelope.begin(), envelope.end()));
  sm["envelope_first"] = to_json_double(envelope.front());
  sm["envelope_last"] = to_json_double(envelope.back());
  sm["envelope_growth"] = to_json_double(envelope.back() / envelope.front());
  sm["envelope_max_over_min"] = to_json_double(spread(0));
  sm["envelope_max_over_min_last_half"] = to_json_double(spread(half));
  sm["envelope_trend"] = increasing ? "increasing" : decreasing ? "decreasing" : "mixed";
  return rep;
}

// ---------------------------------------------------------------------------

ShapeProfile roughened_profile(int base_order, int ripple_order, const Rational& ripple_amp) {
  if (base_order < 2 || base_order > 10 || base_order % 2 != 0)
    throw InputError("base_order must be one of 2, 4, 6, 8, 10");
  if (sgn(ripple_amp) != 0 && (ripple_order < 2 || ripple_order % 2 != 0))
    throw InputError("ripple_order must be even and >= 2");
  const int top = std::max(base_order, ripple_order);
  std::vector<RatPoly> T = {RatPoly({1}), RatPoly({0, 1})};
  for (int k = 2; k <= top; ++k) T.push_back(monomial(1, 2) * T[k - 1] - T[k - 2]);

  const Rational weights[] = {Rational(1, 4), Rational(1, 10), Rational(1, 20), Rational(1, 40)};
  RatPoly bracket({1});
  for (int k = 1; 2 * k <= base_order - 2; ++k)
    bracket = bracket + T[static_cast<std::size_t>(2 * k)] * weights[k - 1];
  if (sgn(ripple_amp) != 0) bracket = bracket + T[static_cast<std::size_t>(ripple_order)] * ripple_amp;
  const RatPoly s2 = RatPoly({1, 0, -1}) * bracket;
  try {
    return ShapeProfile::polynomial(s2, Surd(-1), Surd(1));
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + "; try a smaller ripple_amp");
  }
}

double distance_to_boundary(const ShapeProfile& profile, double x, double y) {
  const PrecisionCtx ctx(20);
  const double lo = profile.z_min().to_mp(ctx).to_double();
  const double hi = profile.z_max().to_mp(ctx).to_double();
  std::vector<double> c;
  for (const auto& q : profile.s2().coeffs()) c.push_back(q.get_d());
  auto radius = [&](double z) {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
    return std::sqrt(std::max(v, 0.0));
  };
  const double ax = std::fabs(x);
  auto dist = [&](double z) { return std::hypot(ax - radius(z), y - z); };

  const int samples = 4000;
  double best = std::numeric_limits<double>::infinity();
  int best_k = 0;
  for (int k = 0; k <= samples; ++k) {
    const double d = dist(lo + (hi - lo) * k / samples);
    if (d < best) {
      best = d;
      best_k = k;
    }
  }
  // Golden-section refinement between the neighbouring samples.
  double a = lo + (hi - lo) * std::max(best_k - 1, 0) / samples;
  double b = lo + (hi - lo) * std::min(best_k + 1, samples) / samples;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    const double m1 = b - g * (b - a), m2 = a + g * (b - a);
    if (dist(m1) < dist(m2))
      b = m2;
    else
      a = m1;
  }
  best = std::min(best, dist((a + b) / 2));
  // Flat caps where the profile ends at a nonzero radius.
  for (double end : {lo, hi}) {
    const double r = radius(end);
    if (r > 0) best = std::min(best, std::hypot(std::max(ax - r, 0.0), y - end));
  }
  return best;
}

ExperimentReport roughen_report(const RoughenOptions& options, const PrecisionCtx& ctx) {
  const Rational amp = parse_rational(options.ripple_amp);
  const ShapeProfile profile = roughened_profile(options.base_order, options.ripple_order, amp);
  ExperimentReport rep;
  rep.experiment = "roughen";
  rep.params = ctx_json(ctx);
  rep.params["base_order"] = options.base_order;
  rep.params["ripple_order"] = options.ripple_order;
  rep.params["ripple_amp"] = options.ripple_amp;
  rep.columns = {"kind", "re", "im", "label"};

  const SingularitySet sing = analyze(profile, ctx);
  int interior = 0, boundary = 0, exterior = 0;
  double min_dist = std::numeric_limits<double>::infinity();
  for (const auto& s : sing.roots) {
    rep.rows.push_back({"root", num(s.rotated.re(), ctx), num(s.rotated.im(), ctx), to_string(s.cls)});
    switch (s.cls) {
      case SingularityClass::interior:
        ++interior;
        min_dist = std::min(min_dist, distance_to_boundary(profile, s.rotated.re().to_double(), s.rotated.im().to_double()));
        break;
      case SingularityClass::boundary:
        ++boundary;
        break;
      case SingularityClass::exterior:
        ++exterior;
        break;
    }
  }
  add_boundary_rows(rep, profile, 200, ctx, false);

  ojson& sm = rep.summary;
  sm["planet"] = planet_to_json(profile);
  sm["roots"] = sing.roots.size();
  sm["interior"] = interior;
  sm["boundary"] = boundary;
  sm["exterior"] = exterior;
  sm["brillouin"] = sing.brillouin.to_double();
  sm["convergence_radius"] = sing.convergence_radius.to_double();
  sm["radius_gap"] = (sing.brillouin - sing.convergence_radius).to_double();
  if (interior > 0) sm["min_interior_boundary_distance"] = min_dist;
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport rerun(const std::string& experiment, const nlohmann::json& params) {
  try {
    if (experiment == "extrapolation_benchmark") {
      ExtrapolationOptions o;
      o.terms = params.at("terms").get<int>();
      o.N = params.at("N").get<int>();
      o.digits = params.at("bench_digits").get<std::vector<int>>();
      o.x_grid = grid_from(params.at("x_grid"));
      o.reduce_order = params.value("reduce_order", true);
      return extrapolation_benchmark(o);
    }
    const PrecisionCtx ctx = ctx_from(params);
    if (experiment == "roughen") {
      RoughenOptions o;
      o.base_order = params.at("base_order").get<int>();
      o.ripple_order = params.at("ripple_order").get<int>();
      o.ripple_amp = params.at("ripple_amp").get<std::string>();
      return roughen_report(o, ctx);
    }
    const ShapeProfile profile = planet_from_json(params.at("planet"));
    if (experiment == "pole_portrait") {
      PortraitOptions o;
      o.N = params.at("N").get<int>();
      o.theta = params.at("theta").get<std::string>();
      o.froissart = froissart_from(params);
      o.boundary_samples = params.at("boundary_samples").get<int>();
      return pole_portrait(profile, o, ctx);
    }
    if (experiment == "error_scan") {
      ErrorScanOptions o;
      o.n_terms = params.at("n_terms").get<int>();
      o.N = params.at("N").get<int>();
      o.z_grid = grid_from(params.at("z_grid"));
      return error_scan(profile, o, ctx);
    }
    if (experiment == "precision_sweep") {
      SweepOptions o;
      o.n_coeffs = params.at("n_coeffs").get<int>();
      o.digits = params.at("sweep_digits").get<std::vector<int>>();
      o.froissart = froissart_from(params);
      return precision_sweep(profile, o, ctx);
    }
    if (experiment == "ratio_test") {
      RatioOptions o;
      o.n_max = params.at("n_max").get<int>();
      o.n_min = params.at("n_min").get<int>();
      o.radius_scale = params.at("radius_scale").get<std::string>();
      o.window = params.at("window").get<int>();
      return ratio_test(profile, o, ctx);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("report params for '" + experiment + "': " + e.what());
  }
  throw InputError("unknown experiment '" + experiment + "'");
}

}  // namespace shepade
