#include "shepade/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace shepade {

namespace {

// P_n(x) and P_n'(x) in double, for the starting guesses.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

// Newton correction P_n/P_n' at x; dp receives P_n'(x).
MpReal newton_step(int n, const MpReal& x, MpReal& dp) {
  MpReal p0(x.precision());
  p0 += 1L;
  MpReal p1 = x;
  for (long k = 2; k <= n; ++k) {
    MpReal p2 = x * p1 * (2 * k - 1);
    p2 -= p0 * (k - 1);
    p2 /= k;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  dp = (x * p1 - p0) * static_cast<long>(n) / (x * x - 1L);
  return p1 / dp;
}

std::shared_ptr<const GaussRule> compute_rule(int n, const PrecisionCtx& ctx, kernels::Exec exec) {
  auto rule = std::make_shared<GaussRule>();
  const mpfr_prec_t bits = ctx.bits();
  rule->nodes.assign(static_cast<std::size_t>(n), MpReal(bits));
  rule->weights.assign(static_cast<std::size_t>(n), MpReal(bits));
  const int half = (n + 1) / 2;
  MpReal done(bits);
  mpfr_set_ui_2exp(done.raw(), 1, -(bits / 2 + 8), MPFR_RNDN);

  kernels::for_each_index(
      static_cast<std::size_t>(half),
      [&](std::size_t idx) {
        const int i = static_cast<int>(idx);
        // i-th largest root.
        double xd = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 6; ++it) {
          auto [p, dp] = legendre_pair(n, xd);
          xd -= p / dp;
        }
        MpReal x(xd, ctx);
        MpReal dp(bits);
        if (n % 2 == 1 && i == half - 1) {
          x = MpReal(bits);  // exact middle node
        } else {
          for (int it = 0; it < 64; ++it) {
            MpReal dx = newton_step(n, x, dp);
            x -= dx;
            if (abs(dx) <= done) break;
          }
        }
        newton_step(n, x, dp);  // dp at the converged node
        MpReal w = MpReal(2L, ctx) / ((1L - x * x) * dp * dp);
        const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
        const std::size_t lo = static_cast<std::size_t>(i);
        rule->nodes[hi] = x;
        rule->weights[hi] = w;
        rule->nodes[lo] = -x;
        rule->weights[lo] = w;
      },
      exec);
  return rule;
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_legendre(int n, const PrecisionCtx& ctx, kernels::Exec exec) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const GaussRule>> cache;
  const auto key = std::make_pair(n, ctx.bits());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = compute_rule(n, ctx, exec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(rule)).first->second;
}

GaussRule map_rule(const GaussRule& rule, const MpReal& lo, const MpReal& hi) {
  MpReal mid = (lo + hi) / 2L;
  MpReal half = (hi - lo) / 2L;
  GaussRule out;
  out.nodes.reserve(rule.nodes.size());
  out.weights.reserve(rule.weights.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * rule.nodes[i]);
    out.weights.push_back(half * rule.weights[i]);
  }
  return out;
}

}  // namespace shepade
