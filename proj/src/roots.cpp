#include "shepade/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace shepade {

MpReal fujiwara_bound(const ComplexPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("fujiwara_bound: degree must be >= 1");
  MpReal lead = abs(p.leading());
  MpReal best(lead.precision());
  for (int k = 1; k <= n; ++k) {
    MpReal ratio = abs(p[static_cast<std::size_t>(n - k)]) / lead;
    if (k == n) ratio /= 2L;
    if (ratio.is_zero()) continue;
    MpReal root_k(ratio.precision());
    mpfr_rootn_ui(root_k.raw(), ratio.raw(), static_cast<unsigned long>(k), MPFR_RNDU);
    if (root_k > best) best = std::move(root_k);
  }
  return best * 2L;
}

namespace {

// Natural log of |c| in double range, or -inf for zero.
double log_abs(const MpComplex& c) {
  MpReal m = abs(c);
  if (m.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double d = mpfr_get_d_2exp(&e, m.raw(), MPFR_RNDN);
  return std::log(d) + static_cast<double>(e) * std::numbers::ln2;
}

bool root_less(const MpComplex& a, const MpComplex& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace

std::vector<MpComplex> find_roots(const ComplexPoly& input, const PrecisionCtx& ctx, const RootFindOptions& options) {
  if (input.degree() < 1) throw std::invalid_argument("find_roots: polynomial degree must be >= 1");
  const mpfr_prec_t bits = ctx.bits();

  // Roots at the origin are split off exactly.
  std::size_t zeros = 0;
  while (is_exact_zero(input[zeros])) ++zeros;
  std::vector<MpComplex> coeffs;
  for (std::size_t k = zeros; k < input.size(); ++k) {
    MpComplex c = input[k];
    c.re().set_precision(std::max(bits, c.re().precision()));
    c.im().set_precision(std::max(bits, c.im().precision()));
    coeffs.push_back(std::move(c));
  }
  // Monic normalization.
  const MpComplex lead = coeffs.back();
  for (auto& c : coeffs) c = c / lead;
  ComplexPoly p(std::move(coeffs));

  std::vector<MpComplex> roots(zeros, MpComplex(bits));
  const int n = p.degree();
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-p[0]);
    std::sort(roots.begin(), roots.end(), root_less);
    return roots;
  }

  ComplexPoly dp = poly_derivative(p);
  std::vector<MpReal> abs_coeffs;
  for (const auto& c : p.coeffs()) abs_coeffs.push_back(abs(c));
  RealPoly coeff_abs(std::move(abs_coeffs));

  // Initial guesses on circles read off the Newton polygon: the upper convex
  // hull of (k, log|c_k|); a hull edge from i to j carries j - i roots of
  // modulus about (|c_i| / |c_j|)^{1/(j-i)}.
  std::vector<double> logc(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) logc[k] = log_abs(p[k]);
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (logc[k] == -std::numeric_limits<double>::infinity()) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      // drop b when it lies on or below the chord from a to k
      if ((logc[b] - logc[a]) * static_cast<double>(k - a) <= (logc[k] - logc[a]) * static_cast<double>(b - a))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<MpComplex> z;
  z.reserve(static_cast<std::size_t>(n));
  const double offset = 0.4;  // keeps guesses off the real axis
  for (std::size_t h = 1; h < hull.size(); ++h) {
    const std::size_t count = hull[h] - hull[h - 1];
    const double log_r = (logc[hull[h - 1]] - logc[hull[h]]) / static_cast<double>(count);
    const double sigma = 2.0 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(n);
    for (std::size_t k = 0; k < count; ++k) {
      double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count) + sigma + offset +
                     options.jitter * unit(rng);
      MpReal r = exp(MpReal(log_r + options.jitter * unit(rng), ctx));
      MpReal ang(angle, ctx);
      z.emplace_back(r * cos(ang), r * sin(ang));
    }
  }

  const MpReal tol = ctx.rel_tol();
  MpReal eps(bits);
  mpfr_set_ui_2exp(eps.raw(), 4, -bits, MPFR_RNDN);
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  std::vector<kernels::AberthStep> steps(static_cast<std::size_t>(n));
  std::vector<MpReal> residuals(static_cast<std::size_t>(n), MpReal(bits));

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    kernels::aberth_sweep(p, dp, coeff_abs, z, active, steps, options.exec);
    std::size_t still_active = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (!active[i]) continue;
      residuals[i] = steps[i].residual;
      if (steps[i].residual <= tol * steps[i].scale) {
        active[i] = 0;
        continue;
      }
      MpReal step = abs(steps[i].correction);
      z[i] -= steps[i].correction;
      if (step <= eps * abs(z[i])) {
        // Cannot move at this precision: a cluster or a multiple root.
        active[i] = 0;
        continue;
      }
      ++still_active;
    }
    if (still_active == 0) break;
  }
  if (sweep == options.max_sweeps) {
    throw RootFindError("root finder did not converge in " + std::to_string(options.max_sweeps) + " sweeps",
                        z, residuals);
  }
  for (auto& r : z) roots.push_back(std::move(r));
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

}  // namespace shepade
