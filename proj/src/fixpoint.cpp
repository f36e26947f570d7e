#include "mdpkit/fixpoint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mdpkit/errors.hpp"

namespace mdpkit {

namespace {
constexpr double kContractionSlack = 1e-9;
}

void FixpointConfig::validate() const {
  if (!std::isfinite(theta) || theta <= 0.0)
    throw std::invalid_argument("FixpointConfig: theta must be positive");
  if (max_iter < 1)
    throw std::invalid_argument("FixpointConfig: max_iter must be at least 1");
  if (gamma_hint && (!std::isfinite(*gamma_hint) || *gamma_hint < 0.0 || *gamma_hint >= 1.0))
    throw std::invalid_argument("FixpointConfig: gamma_hint must lie in [0, 1)");
}

FixpointResult iterate_to_fixpoint(const ValueOp& F, const ValueFn& x0,
                                   const FixpointConfig& cfg,
                                   const IterationObserver& observer) {
  cfg.validate();
  ValueFn current = x0;
  double residual = 0.0;
  for (int k = 1; k <= cfg.max_iter; ++k) {
    ValueFn next = F(current);
    if (next.size() != current.size())
      throw std::invalid_argument("iterate_to_fixpoint: map changed dimension");
    residual = dist(next, current);
    if (observer) observer(k, next, residual);
    current = std::move(next);
    if (residual < cfg.theta) {
      std::optional<double> bound;
      if (cfg.gamma_hint) bound = *cfg.gamma_hint * residual / (1.0 - *cfg.gamma_hint);
      return {std::move(current), k, residual, bound};
    }
  }
  throw NonConvergenceError("iterate_to_fixpoint: residual " + std::to_string(residual) +
                                " still above theta after " + std::to_string(cfg.max_iter) +
                                " iterations",
                            cfg.max_iter, residual);
}

ContractionReport check_contraction(const ValueOp& F, double modulus,
                                    const std::vector<std::pair<ValueFn, ValueFn>>& samples) {
  if (!std::isfinite(modulus) || modulus < 0.0 || modulus >= 1.0)
    throw std::invalid_argument("check_contraction: modulus must lie in [0, 1)");
  ContractionReport report;
  for (const auto& [u, v] : samples) {
    const double duv = dist(u, v);
    if (duv == 0.0) continue;
    const double ratio = dist(F(u), F(v)) / duv;
    report.max_ratio = std::max(report.max_ratio, ratio);
    ++report.pairs_used;
  }
  report.within_modulus = report.max_ratio <= modulus + kContractionSlack;
  return report;
}

OrderCoinductionReport check_order_coinduction(const ValueOp& F, const ValueFn& x,
                                               const ValueFn& fixed_point, double gamma,
                                               double solver_bound, double eps) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma >= 1.0)
    throw std::invalid_argument("check_order_coinduction: gamma must lie in [0, 1)");
  OrderCoinductionReport report;
  report.eps = eps;
  report.eps_prime = eps / (1.0 - gamma) + solver_bound;
  const ValueFn fx = F(x);
  report.upper_applicable = le_within(fx, x, eps);
  if (report.upper_applicable)
    report.upper_holds = le_within(fixed_point, x, report.eps_prime);
  report.lower_applicable = le_within(x, fx, eps);
  if (report.lower_applicable)
    report.lower_holds = le_within(x, fixed_point, report.eps_prime);
  return report;
}

}  // namespace mdpkit
