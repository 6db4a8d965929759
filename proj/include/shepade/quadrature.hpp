#pragma once

// Gauss-Legendre rules at arbitrary precision.

#include "shepade/kernels.hpp"
#include "shepade/mp.hpp"

#include <memory>
#include <vector>

namespace shepade {

struct GaussRule {
  std::vector<MpReal> nodes;    // ascending, on [-1, 1]
  std::vector<MpReal> weights;
};

/// n-point rule accurate to the context precision. Rules are cached per
/// (n, bits) and shared read-only.
std::shared_ptr<const GaussRule> gauss_legendre(int n, const PrecisionCtx& ctx,
                                                kernels::Exec exec = kernels::Exec::parallel);

/// Same rule mapped affinely onto [lo, hi].
GaussRule map_rule(const GaussRule& rule, const MpReal& lo, const MpReal& hi);

}  // namespace shepade
