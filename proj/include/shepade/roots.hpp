#pragma once

#include "shepade/complex.hpp"
#include "shepade/errors.hpp"
#include "shepade/kernels.hpp"
#include "shepade/poly.hpp"

#include <cstdint>
#include <vector>

namespace shepade {

struct RootFindOptions {
  int max_sweeps = 200;
  std::uint64_t seed = 0x5eedULL;
  double jitter = 1e-3;
  kernels::Exec exec = kernels::Exec::parallel;
};

class RootFindError : public NumericalError {
 public:
  RootFindError(const std::string& what, std::vector<MpComplex> best, std::vector<MpReal> residuals)
      : NumericalError(what), best_(std::move(best)), residuals_(std::move(residuals)) {}
  const std::vector<MpComplex>& best() const { return best_; }
  const std::vector<MpReal>& residuals() const { return residuals_; }

 private:
  std::vector<MpComplex> best_;
  std::vector<MpReal> residuals_;
};

/// All deg(p) roots with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration. Each root satisfies |p(z)| <= rel_tol * sum|c_k||z|^k unless it
/// stagnated inside a cluster. Roots are returned sorted by (re, im).
std::vector<MpComplex> find_roots(const ComplexPoly& p, const PrecisionCtx& ctx,
                                  const RootFindOptions& options = {});

/// Fujiwara's bound on the moduli of the roots.
MpReal fujiwara_bound(const ComplexPoly& p);

}  // namespace shepade
