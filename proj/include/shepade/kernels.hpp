#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path and an
// OpenMP path selected by Exec; both write each output slot from exactly one
// iteration, so results are bit-identical regardless of thread count.

#include "shepade/complex.hpp"
#include "shepade/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace shepade::kernels {

enum class Exec { serial, parallel };

/// Caps OpenMP threads; 0 restores the runtime default.
void set_thread_limit(int threads);
int thread_limit();

/// Runs fn(i) for i in [0, n).
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, Exec exec) {
  const long count = static_cast<long>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
  }
}

struct AberthStep {
  MpComplex correction;  // Newton-Aberth step w_i; z_i <- z_i - w_i
  MpReal residual;       // |p(z_i)|
  MpReal scale;          // sum |c_k| |z_i|^k
};

/// One synchronous (Jacobi) Aberth sweep: every correction is computed from
/// the same snapshot of `roots`. Inactive slots are left untouched.
/// coeff_abs holds |c_k| of p, used for the residual scale.
void aberth_sweep(const ComplexPoly& p, const ComplexPoly& dp, const RealPoly& coeff_abs,
                  std::span<const MpComplex> roots, std::span<const char> active, std::span<AberthStep> out,
                  Exec exec);

/// Schur-complement update of rows k+1..n-1 of a row-major n x cols matrix
/// after pivot (k, k): a_ij -= (a_ik / a_kk) a_kj for j > k, a_ik <- 0.
void eliminate_below(std::vector<MpReal>& a, std::size_t n, std::size_t cols, std::size_t k, Exec exec);

/// m running sums over i in [0, n): add(i, acc) adds item i's contributions to
/// acc[0..m). The range is cut into a fixed number of contiguous blocks, each
/// summed serially; block partials are then combined in block order, so the
/// result does not depend on scheduling.
template <class Add>
std::vector<MpReal> blocked_sums(std::size_t n, std::size_t m, mpfr_prec_t bits, Add&& add, Exec exec,
                                 std::size_t blocks = 64) {
  blocks = std::max<std::size_t>(1, std::min(blocks, n));
  std::vector<std::vector<MpReal>> partial(blocks, std::vector<MpReal>(m, MpReal(bits)));
  for_each_index(
      blocks,
      [&](std::size_t b) {
        const std::size_t lo = n * b / blocks;
        const std::size_t hi = n * (b + 1) / blocks;
        for (std::size_t i = lo; i < hi; ++i) add(i, partial[b]);
      },
      exec);
  std::vector<MpReal> out(m, MpReal(bits));
  for (const auto& part : partial)
    for (std::size_t k = 0; k < m; ++k) out[k] += part[k];
  return out;
}

}  // namespace shepade::kernels
