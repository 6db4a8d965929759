#include "shepade/kernels.hpp"

#include <omp.h>

#include <stdexcept>

namespace shepade::kernels {

namespace {
int g_default_threads = 0;
}

void set_thread_limit(int threads) {
  if (g_default_threads == 0) g_default_threads = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : g_default_threads);
}

int thread_limit() { return omp_get_max_threads(); }

namespace {

AberthStep aberth_one(const ComplexPoly& p, const ComplexPoly& dp, const RealPoly& coeff_abs,
                      std::span<const MpComplex> roots, std::size_t i) {
  const MpComplex& z = roots[i];
  MpComplex value = poly_eval(p, z);
  MpComplex deriv = poly_eval(dp, z);
  MpReal scale = poly_eval(coeff_abs, abs(z));
  MpReal residual = abs(value);

  MpComplex sum(z.precision());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j == i) continue;
    sum += reciprocal(z - roots[j]);
  }
  MpComplex correction(z.precision());
  if (!value.is_zero()) {
    if (deriv.is_zero()) {
      // Newton ratio undefined; fall back to the pure Aberth repulsion term.
      correction = reciprocal(-sum);
    } else {
      MpComplex ratio = value / deriv;
      MpComplex den = -(ratio * sum);
      den.re() += 1L;
      correction = ratio / den;
    }
  }
  return {std::move(correction), std::move(residual), std::move(scale)};
}

}  // namespace

void aberth_sweep(const ComplexPoly& p, const ComplexPoly& dp, const RealPoly& coeff_abs,
                  std::span<const MpComplex> roots, std::span<const char> active, std::span<AberthStep> out,
                  Exec exec) {
  if (active.size() != roots.size() || out.size() != roots.size())
    throw std::invalid_argument("aberth_sweep: size mismatch");
  for_each_index(
      roots.size(),
      [&](std::size_t i) {
        if (active[i]) out[i] = aberth_one(p, dp, coeff_abs, roots, i);
      },
      exec);
}

void eliminate_below(std::vector<MpReal>& a, std::size_t n, std::size_t cols, std::size_t k, Exec exec) {
  const MpReal& pivot = a[k * cols + k];
  const std::size_t rows = n - k - 1;
  for_each_index(
      rows,
      [&](std::size_t r) {
        const std::size_t i = k + 1 + r;
        MpReal& lead = a[i * cols + k];
        if (lead.is_zero()) return;
        MpReal factor = lead / pivot;
        for (std::size_t j = k + 1; j < cols; ++j) sub_mul(a[i * cols + j], factor, a[k * cols + j]);
        mpfr_set_zero(lead.raw(), 1);
      },
      exec);
}

}  // namespace shepade::kernels
