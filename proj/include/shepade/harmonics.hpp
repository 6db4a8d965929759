#pragma once

// Partial sums of Phi(r, theta) = sum A_n P_n(cos theta) / r^{n+1}.

#include "shepade/planet.hpp"

namespace shepade {

struct PotentialValue {
  MpReal value;
  /// r is below the convergence radius: the partial sums need not converge.
  bool below_convergence = false;
};

class PotentialField {
 public:
  /// Takes the convergence radius from the singularity analysis of the profile.
  explicit PotentialField(SheSeries series);
  PotentialField(SheSeries series, MpReal convergence_radius);

  /// Sum over n <= n_terms. Throws std::invalid_argument for r <= 0, theta
  /// outside [0, pi] or n_terms beyond the stored coefficients.
  PotentialValue potential(const MpReal& r, const MpReal& theta, int n_terms) const;

  const SheSeries& series() const { return series_; }
  const MpReal& convergence_radius() const { return radius_; }

 private:
  SheSeries series_;
  MpReal radius_;
};

/// Plain partial sum without the convergence flag.
MpReal potential(const SheSeries& series, const MpReal& r, const MpReal& theta, int n_terms);

}  // namespace shepade
