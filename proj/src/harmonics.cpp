#include "shepade/harmonics.hpp"

#include "shepade/singularity.hpp"

#include <stdexcept>

namespace shepade {

PotentialField::PotentialField(SheSeries series) : series_(std::move(series)) {
  radius_ = analyze(series_.profile, series_.ctx).convergence_radius;
}

PotentialField::PotentialField(SheSeries series, MpReal convergence_radius)
    : series_(std::move(series)), radius_(std::move(convergence_radius)) {}

PotentialValue PotentialField::potential(const MpReal& r, const MpReal& theta, int n_terms) const {
  return {shepade::potential(series_, r, theta, n_terms), r < radius_};
}

MpReal potential(const SheSeries& series, const MpReal& r, const MpReal& theta, int n_terms) {
  const PrecisionCtx& ctx = series.ctx;
  if (r <= 0L) throw std::invalid_argument("potential needs r > 0");
  if (theta < 0L || theta > pi(ctx)) throw std::invalid_argument("colatitude must lie in [0, pi]");
  if (n_terms < 0 || static_cast<std::size_t>(n_terms) >= series.coeffs.size()) {
    throw std::invalid_argument("n_terms = " + std::to_string(n_terms) + " but the series stores " +
                                std::to_string(series.coeffs.size()) + " coefficients");
  }
  // Same Legendre values and the same products as weight_colatitude, so the
  // two routes agree term by term.
  const std::vector<MpReal> p = legendre_all(n_terms, cos(MpReal(theta, ctx.bits())));
  const MpReal inv = MpReal(1L, ctx) / MpReal(r, ctx.bits());
  MpReal power = inv;
  MpReal sum(ctx.bits());
  for (int n = 0; n <= n_terms; ++n) {
    const auto k = static_cast<std::size_t>(n);
    sum += series.coeffs[k] * p[k] * power;
    power *= inv;
  }
  return sum;
}

}  // namespace shepade
