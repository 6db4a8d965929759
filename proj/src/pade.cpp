#include "shepade/pade.hpp"

#include "shepade/errors.hpp"
#include "shepade/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shepade {

namespace {

MpReal times_pow2(const MpReal& x, long e) {
  MpReal out(x.precision());
  mpfr_mul_2si(out.raw(), x.raw(), e, MPFR_RNDN);
  return out;
}

// Power-of-two exponent e with 2^e ~ limsup |a_n|^{1/n}, so that a_n 2^{-e n}
// stays O(1) and the scaling itself is exact.
long growth_exponent(std::span<const MpReal> a) {
  double best = -1e300;
  for (std::size_t n = 1; n < a.size(); ++n) {
    if (a[n].is_zero()) continue;
    MpReal l = log(abs(a[n]));
    best = std::max(best, l.to_double() / static_cast<double>(n));
  }
  if (best == -1e300) return 0;
  return std::lround(best / std::log(2.0));
}

struct Solve {
  int rank = 0;
  std::vector<MpReal> c;  // c[0] = 1, c[1..n]
};

// Denominator coefficients from sum_{j=0..n} c_j a_{m-j} = 0, m = n+1..2n,
// by Gaussian elimination with full pivoting. Stops at the first pivot below
// tol * (largest pivot) and reports that rank.
Solve solve_denominator(const std::vector<MpReal>& a, int n, const MpReal& tol, kernels::Exec exec) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const std::size_t cols = dim + 1;
  const mpfr_prec_t bits = a.front().precision();
  std::vector<MpReal> m(dim * cols, MpReal(bits));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m[i * cols + j] = a[dim + i - j];
    m[i * cols + dim] = -a[dim + 1 + i];
  }
  std::vector<std::size_t> col_of(dim);
  for (std::size_t j = 0; j < dim; ++j) col_of[j] = j;

  Solve out;
  MpReal first(bits);
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < dim; ++i)
      for (std::size_t j = k; j < dim; ++j)
        if (mpfr_cmpabs(m[i * cols + j].raw(), m[pr * cols + pc].raw()) > 0) {
          pr = i;
          pc = j;
        }
    MpReal piv = abs(m[pr * cols + pc]);
    if (k == 0) first = piv;
    if (piv.is_zero() || piv <= tol * first) {
      out.rank = static_cast<int>(k);
      return out;
    }
    if (pr != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[k * cols + j], m[pr * cols + j]);
    if (pc != k) {
      for (std::size_t i = 0; i < dim; ++i) std::swap(m[i * cols + k], m[i * cols + pc]);
      std::swap(col_of[k], col_of[pc]);
    }
    kernels::eliminate_below(m, dim, cols, k, exec);
  }
  out.rank = n;
  std::vector<MpReal> x(dim, MpReal(bits));
  for (std::size_t k = dim; k-- > 0;) {
    MpReal acc = m[k * cols + dim];
    for (std::size_t j = k + 1; j < dim; ++j) sub_mul(acc, m[k * cols + j], x[j]);
    x[k] = acc / m[k * cols + k];
  }
  out.c.assign(dim + 1, MpReal(bits));
  out.c[0] += 1L;
  for (std::size_t j = 0; j < dim; ++j) out.c[col_of[j] + 1] = x[j];
  return out;
}

MpReal max_abs(const std::vector<MpReal>& v, mpfr_prec_t bits) {
  MpReal m(bits);
  for (const auto& x : v) m = max(m, abs(x));
  return m;
}

}  // namespace

PadeApproximant build_pade(std::span<const MpReal> coeffs, int N, const PrecisionCtx& ctx,
                           const PadeOptions& options) {
  if (N < 1) throw std::invalid_argument("Pade order N must be >= 1");
  const std::size_t needed = 2 * static_cast<std::size_t>(N) + 1;
  if (coeffs.size() < needed) {
    throw std::invalid_argument("series has " + std::to_string(coeffs.size()) + " coefficients; [N,N] with N = " +
                                std::to_string(N) + " needs " + std::to_string(needed));
  }
  const mpfr_prec_t bits = ctx.bits();
  const long e = growth_exponent(coeffs.subspan(0, needed));
  std::vector<MpReal> a;
  a.reserve(needed);
  for (std::size_t n = 0; n < needed; ++n) a.push_back(times_pow2(MpReal(coeffs[n], bits), -e * static_cast<long>(n)));

  const MpReal tol = options.reduce_order ? ctx.rel_tol() : MpReal(bits);
  int order = N;
  Solve solve;
  for (;;) {
    std::vector<MpReal> head(a.begin(), a.begin() + 2 * order + 1);
    solve = solve_denominator(head, order, tol, options.exec);
    if (solve.rank == order) break;
    order = std::min(order - 1, solve.rank);
    if (order < 1) throw NumericalError("series is rational-degenerate");
  }

  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<MpReal> b(n + 1, MpReal(bits));
  for (std::size_t m = 0; m <= n; ++m)
    for (std::size_t j = 0; j <= m; ++j) add_mul(b[m], solve.c[j], a[m - j]);

  PadeApproximant p;
  p.N = N;
  p.effective_N = order;
  p.ctx = ctx;
  p.scale = times_pow2(MpReal(1L, ctx), e);

  // Re-expansion certificate.
  const std::size_t top = 2 * n;
  std::vector<MpReal> inv(top + 1, MpReal(bits));  // series of 1/Rs
  inv[0] += 1L;
  for (std::size_t m = 1; m <= top; ++m)
    for (std::size_t j = 1; j <= std::min(m, n); ++j) sub_mul(inv[m], solve.c[j], inv[m - j]);
  MpReal residual(bits);
  for (std::size_t m = 0; m <= top; ++m) {
    MpReal v = -a[m];
    for (std::size_t i = 0; i <= std::min(m, n); ++i) add_mul(v, b[i], inv[m - i]);
    residual = max(residual, abs(v));
  }
  MpReal c_norm(bits);
  for (const auto& c : solve.c) c_norm += abs(c);
  MpReal growth = c_norm * max_abs(inv, bits) * static_cast<long>(top + 1);
  std::vector<MpReal> head(a.begin(), a.begin() + static_cast<long>(top + 1));
  p.certificate_residual = residual;
  p.certificate_bound = tol * max(MpReal(1L, ctx), growth) * max_abs(head, bits);

  std::vector<MpReal> qn, rn;
  for (std::size_t m = 0; m <= n; ++m) {
    qn.push_back(times_pow2(b[m], e * static_cast<long>(m)));
    rn.push_back(times_pow2(solve.c[m], e * static_cast<long>(m)));
  }
  p.scaled_numerator = RealPoly(std::move(b));
  p.scaled_denominator = RealPoly(std::move(solve.c));
  p.numerator = RealPoly(std::move(qn));
  p.denominator = RealPoly(std::move(rn));
  return p;
}

PadeApproximant build_pade(const SheSeries& series, int N, const PrecisionCtx& ctx, const PadeOptions& options) {
  return build_pade(std::span<const MpReal>(series.coeffs), N, ctx, options);
}

MpComplex pade_eval_series(const PadeApproximant& p, const MpComplex& w) {
  const MpComplex r = poly_eval(p.denominator, w);
  MpReal scale(r.precision());
  const MpReal aw = abs(w);
  for (std::size_t j = p.denominator.size(); j-- > 0;) scale = scale * aw + abs(p.denominator[j]);
  if (abs(r) <= p.ctx.rel_tol() * scale) {
    throw std::domain_error("Pade evaluation at a pole: w = " + to_sci(w, 12));
  }
  return poly_eval(p.numerator, w) / r;
}

MpReal pade_eval_series(const PadeApproximant& p, const MpReal& w) { return pade_eval_series(p, MpComplex(w)).re(); }

MpComplex pade_eval(const PadeApproximant& p, const MpComplex& Z) {
  if (Z.is_zero()) throw std::domain_error("Pade evaluation at Z = 0");
  const MpComplex w = reciprocal(Z);
  try {
    return pade_eval_series(p, w) * w;
  } catch (const std::domain_error&) {
    throw std::domain_error("Pade evaluation at a pole: Z = " + to_sci(Z, 12));
  }
}

MpReal pade_eval(const PadeApproximant& p, const MpReal& Z) { return pade_eval(p, MpComplex(Z)).re(); }

std::size_t PoleSet::spurious_count() const {
  return static_cast<std::size_t>(std::count_if(poles.begin(), poles.end(), [](const Pole& q) { return q.spurious; }));
}

PoleSet pade_poles(const PadeApproximant& p, const PrecisionCtx& ctx) {
  if (p.effective_N < 1 || p.scaled_denominator.degree() < 1) return {};
  const ComplexPoly r = to_complex(p.scaled_denominator);
  const ComplexPoly dr = poly_derivative(r);
  const ComplexPoly q = to_complex(p.scaled_numerator);
  PoleSet out;
  for (const auto& u : find_roots(r, ctx)) {
    Pole pole;
    pole.location = reciprocal(u) * p.scale;
    // Q(w)/R'(w) with R'(w) = scale Rs'(u).
    MpComplex ratio = poly_eval(q, u) / poly_eval(dr, u) / p.scale;
    pole.residue = -(pole.location * pole.location * ratio);
    pole.rotated = times_i(pole.location);
    out.poles.push_back(std::move(pole));
  }
  std::sort(out.poles.begin(), out.poles.end(), [](const Pole& x, const Pole& y) {
    if (x.location.re() != y.location.re()) return x.location.re() < y.location.re();
    return x.location.im() < y.location.im();
  });
  return out;
}

std::vector<MpComplex> pade_zeros(const PadeApproximant& p, const PrecisionCtx& ctx) {
  std::vector<MpComplex> out;
  if (p.scaled_numerator.degree() < 1) return out;
  for (const auto& u : find_roots(to_complex(p.scaled_numerator), ctx)) {
    if (u.is_zero()) continue;  // zero at Z = infinity
    out.push_back(reciprocal(u) * p.scale);
  }
  return out;
}

PoleSet filter_froissart(PoleSet ps, const std::vector<MpComplex>& zeros, const FroissartOptions& options) {
  if (ps.poles.empty()) return ps;
  std::vector<double> mags;
  for (const auto& pole : ps.poles) mags.push_back(abs(pole.residue).to_double());
  std::vector<double> sorted = mags;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2), sorted.end());
  const double median = sorted[sorted.size() / 2];
  for (std::size_t i = 0; i < ps.poles.size(); ++i) {
    Pole& pole = ps.poles[i];
    // Reach scales with the smaller of |Z0| and the gap to the nearest other
    // pole: poles that interlace with zeros along a cut sit closer to their
    // zeros than 1e-3 |Z0| but not closer than 1e-3 of the pole spacing.
    double spacing = abs(pole.location).to_double();
    for (std::size_t j = 0; j < ps.poles.size(); ++j)
      if (j != i) spacing = std::min(spacing, distance(ps.poles[j].location, pole.location).to_double());
    const double reach = options.pair_tol * spacing;
    bool paired = std::any_of(zeros.begin(), zeros.end(),
                              [&](const MpComplex& z) { return distance(z, pole.location).to_double() <= reach; });
    pole.spurious = paired || mags[i] < options.residue_tol * median;
  }
  return ps;
}

SheSeries weight_colatitude(const SheSeries& series, const MpReal& theta) {
  const PrecisionCtx& ctx = series.ctx;
  if (theta < 0L || theta > pi(ctx)) throw std::invalid_argument("colatitude must lie in [0, pi]");
  SheSeries out = series;
  if (series.coeffs.empty()) return out;
  std::vector<MpReal> p = legendre_all(static_cast<int>(series.coeffs.size()) - 1, cos(MpReal(theta, ctx.bits())));
  for (std::size_t n = 0; n < out.coeffs.size(); ++n) out.coeffs[n] *= p[n];
  return out;
}

}  // namespace shepade
