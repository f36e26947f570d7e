#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mdpkit/fnspace.hpp"

namespace mdpkit {

/// A self-map on the value-function space.
using ValueOp = std::function<ValueFn(const ValueFn&)>;

/// Stopping rule and iteration budget for fixed-point iteration.
/// gamma_hint, when present, is a known contraction modulus and turns
/// the stopping residual into a posterior error bound.
struct FixpointConfig {
  double theta = 1e-10;
  int max_iter = 10000;
  std::optional<double> gamma_hint;

  void validate() const;
};

struct FixpointResult {
  ValueFn point;
  int iterations = 0;
  double residual = 0.0;
  /// gamma * residual / (1 - gamma) when gamma_hint was supplied.
  std::optional<double> error_bound;
};

/// Called after every application of the map with the iteration count
/// (starting at 1), the new iterate, and the successive residual.
using IterationObserver = std::function<void(int, const ValueFn&, double)>;

/**
 * Iterates F from x0 until the successive sup-norm residual drops
 * below cfg.theta, returning the first iterate that does.
 *
 * Throws NonConvergenceError when cfg.max_iter applications were not
 * enough (the exception carries the last residual). Deterministic for
 * fixed (F, x0, cfg).
 */
FixpointResult iterate_to_fixpoint(const ValueOp& F, const ValueFn& x0,
                                   const FixpointConfig& cfg,
                                   const IterationObserver& observer = {});

struct ContractionReport {
  double max_ratio = 0.0;
  int pairs_used = 0;
  /// max_ratio <= modulus + 1e-9 over every sampled pair.
  bool within_modulus = true;
};

/// Samples dist(F(u), F(v)) / dist(u, v) over the given pairs; pairs
/// with dist(u, v) = 0 are skipped. Report-only, never throws on a
/// ratio violation.
ContractionReport check_contraction(const ValueOp& F, double modulus,
                                    const std::vector<std::pair<ValueFn, ValueFn>>& samples);

struct OrderCoinductionReport {
  /// F(x) <= x held within eps, so x certifies an upper bound.
  bool upper_applicable = false;
  /// fixed_point <= x held within eps_prime.
  bool upper_holds = false;
  /// x <= F(x) held within eps.
  bool lower_applicable = false;
  /// x <= fixed_point held within eps_prime.
  bool lower_holds = false;
  double eps = 0.0;
  double eps_prime = 0.0;
};

/// Numeric check of both order-coinduction implications for a monotone
/// contraction with modulus gamma: whenever F(x) <= x (within eps), the
/// converged fixed point must satisfy fix <= x within
/// eps / (1 - gamma) + solver_bound, and dually for >=.
OrderCoinductionReport check_order_coinduction(const ValueOp& F, const ValueFn& x,
                                               const ValueFn& fixed_point, double gamma,
                                               double solver_bound, double eps = 1e-12);

}  // namespace mdpkit
