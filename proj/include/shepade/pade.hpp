#pragma once

// Diagonal Pade approximants of the on-axis series in w = 1/Z:
//   Phi(Z) ~ (1/Z) sum A_n w^n  ->  (1/Z) Q(w) / R(w),  R(0) = 1.

#include "shepade/complex.hpp"
#include "shepade/kernels.hpp"
#include "shepade/planet.hpp"
#include "shepade/poly.hpp"

#include <span>
#include <vector>

namespace shepade {

struct PadeOptions {
  kernels::Exec exec = kernels::Exec::parallel;
  // false: solve at the requested order and stop only on an exactly zero
  // pivot, the way a plain floating-point solve behaves.
  bool reduce_order = true;
};

struct PadeApproximant {
  int N = 0;            // requested order
  int effective_N = 0;  // order actually built after rank reduction
  RealPoly numerator;    // Q(w)
  RealPoly denominator;  // R(w), constant term 1
  PrecisionCtx ctx;
  // Internally the series is solved in u = scale * w, where scale is a
  // root-test estimate of the growth of A_n; Q(w) = Qs(scale w), same for R.
  MpReal scale;
  RealPoly scaled_numerator;
  RealPoly scaled_denominator;
  // Re-expansion check on the scaled coefficients: residual is
  // max_m |[Qs/Rs]_m - a_m scale^-m| for m <= 2 effective_N, bound is the
  // rounding allowance rel_tol * max(1, N |Rs|_1 max_m |[1/Rs]_m|) * max|a scale^-m|.
  MpReal certificate_residual;
  MpReal certificate_bound;

  bool certified() const { return certificate_residual <= certificate_bound; }
};

/// [N,N] approximant from A_0..A_{2N} (extra coefficients are ignored).
/// Throws std::invalid_argument if fewer than 2N+1 coefficients are given and
/// NumericalError("series is rational-degenerate") if the order collapses to 0.
PadeApproximant build_pade(std::span<const MpReal> coeffs, int N, const PrecisionCtx& ctx,
                           const PadeOptions& options = {});
PadeApproximant build_pade(const SheSeries& series, int N, const PrecisionCtx& ctx, const PadeOptions& options = {});

/// (1/Z) Q(1/Z) / R(1/Z). Throws std::domain_error at a pole.
MpComplex pade_eval(const PadeApproximant& p, const MpComplex& Z);
MpReal pade_eval(const PadeApproximant& p, const MpReal& Z);
/// Q(w)/R(w) in the series variable itself, for inputs that are ordinary
/// power series sum a_n w^n. Throws std::domain_error at a pole.
MpComplex pade_eval_series(const PadeApproximant& p, const MpComplex& w);
MpReal pade_eval_series(const PadeApproximant& p, const MpReal& w);

struct Pole {
  MpComplex location;  // Z_0
  MpComplex residue;   // residue of Q(1/Z)/R(1/Z) at Z_0
  MpComplex rotated;   // i Z_0
  bool spurious = false;
};

struct PoleSet {
  std::vector<Pole> poles;
  std::size_t spurious_count() const;
};

/// Roots of R mapped to Z_0 = 1/w, with residues -Z_0^2 Q(w)/R'(w).
PoleSet pade_poles(const PadeApproximant& p, const PrecisionCtx& ctx);
/// Roots of Q mapped to Z = 1/w.
std::vector<MpComplex> pade_zeros(const PadeApproximant& p, const PrecisionCtx& ctx);

struct FroissartOptions {
  double pair_tol = 1e-3;     // relative to |Z_0|
  double residue_tol = 1e-8;  // relative to the median |residue|
};

/// Marks as spurious every pole within pair_tol |Z_0| of a zero, or whose
/// residue is below residue_tol times the median residue magnitude.
PoleSet filter_froissart(PoleSet poles, const std::vector<MpComplex>& zeros, const FroissartOptions& options = {});

/// A_n -> A_n P_n(cos theta), 0 <= theta <= pi.
SheSeries weight_colatitude(const SheSeries& series, const MpReal& theta);

}  // namespace shepade
