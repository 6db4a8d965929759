#pragma once

// Scripted numerical experiments. Every run returns an ExperimentReport:
// a CSV table with a fixed header per experiment, plus a JSON sidecar holding
// the echoed parameters and scalar outcomes. rerun(name, params) rebuilds a
// report from its echoed parameters.

#include "shepade/pade.hpp"
#include "shepade/planet.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace shepade {

struct ExperimentReport {
  std::string experiment;
  nlohmann::ordered_json params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json summary;

  std::string csv() const;
  /// {"experiment", "params", "columns", "summary"}.
  nlohmann::ordered_json sidecar() const;
  /// Writes <dir>/<stem>.csv and <dir>/<stem>.json; stem defaults to the
  /// experiment name.
  void write(const std::filesystem::path& dir, const std::string& stem = "") const;
};

/// Inclusive grid lo..hi with `count` points, as exact decimal strings.
struct Grid {
  std::string lo = "0";
  std::string hi = "1";
  int count = 2;
  std::vector<MpReal> points(const PrecisionCtx& ctx) const;
};

/// Angle from "0.25", "pi", "1/3*pi" or "-0.5*pi".
MpReal parse_angle(const std::string& text, const PrecisionCtx& ctx);

/// Closed form for spheroids and cylinders, exact-symbolic otherwise.
SheSeries reference_series(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx);

struct PortraitOptions {
  int N = 100;
  std::string theta = "0";
  FroissartOptions froissart;
  int boundary_samples = 200;
};
/// Columns kind,re,im,abs_residue,label. Poles and discriminant roots are
/// drawn rotated (i Z0); boundary rows trace (+-s(y), y); radius rows carry
/// the Brillouin and convergence radii in `re`.
ExperimentReport pole_portrait(const ShapeProfile& profile, const PortraitOptions& options, const PrecisionCtx& ctx);

struct ErrorScanOptions {
  int n_terms = 500;
  int N = 0;  // 0: (n_terms - 1) / 2
  Grid z_grid{"0.88", "1.6", 30};
};
/// Columns Z,log10_err_she,log10_err_pade against the exact on-axis
/// potential. Grid points at or below z_max are skipped and listed in
/// summary.skipped.
ExperimentReport error_scan(const ShapeProfile& profile, const ErrorScanOptions& options, const PrecisionCtx& ctx);

struct SweepOptions {
  int n_coeffs = 50;
  std::vector<int> digits = {10, 11, 12, 13};
  FroissartOptions froissart;
};
/// Coefficients rounded to d digits, Pade built at ctx. Columns
/// digits,re,im,abs_residue,label. d >= ctx.digits() uses the unrounded
/// coefficients.
ExperimentReport precision_sweep(const ShapeProfile& profile, const SweepOptions& options, const PrecisionCtx& ctx);

struct ExtrapolationOptions {
  int terms = 1500;  // highest power of z kept
  int N = 750;
  std::vector<int> digits = {16, 1000};
  Grid x_grid{"0", "10", 41};
  bool reduce_order = true;
};
/// f(z) = (1 + z^2)^{3/2}. Columns x,log10_err_series,log10_err_pade_<d>...
ExperimentReport extrapolation_benchmark(const ExtrapolationOptions& options);

struct RatioOptions {
  int n_max = 200;
  int n_min = 20;
  std::string radius_scale = "1";
  int window = 10;
};
/// Columns n,ratio with ratio = n^2 A_2n / (scale |Z0|)^{2n}, |Z0| the largest
/// interior root modulus. Throws NumericalError without interior roots.
ExperimentReport ratio_test(const ShapeProfile& profile, const RatioOptions& options, const PrecisionCtx& ctx);

/// s^2 = (1 - z^2)(1 + T2/4 + T4/10 + T6/20 + T8/40 + amp T_r) on [-1, 1],
/// truncated to the terms of degree <= base_order - 2 inside the bracket.
/// base_order in {2, 4, 6, 8, 10}; ripple_order even. Throws InputError when
/// the result is negative somewhere.
ShapeProfile roughened_profile(int base_order = 10, int ripple_order = 0, const Rational& ripple_amp = 0);

struct RoughenOptions {
  int base_order = 10;
  int ripple_order = 16;
  std::string ripple_amp = "1/50";
};
/// Columns kind,re,im,label: classified discriminant roots and the boundary.
ExperimentReport roughen_report(const RoughenOptions& options, const PrecisionCtx& ctx);

/// Smallest distance from a meridian point (x, y) to the curve (+-s(z), z).
double distance_to_boundary(const ShapeProfile& profile, double x, double y);

/// Dispatches on the experiment name with the params echoed by a report.
ExperimentReport rerun(const std::string& experiment, const nlohmann::json& params);

}  // namespace shepade
