#pragma once

#include <functional>
#include <vector>

namespace mdpkit {

/// One atom of a finitely supported distribution: probability mass
/// attached to an outcome index.
struct WeightedOutcome {
  double weight = 0.0;
  int outcome = 0;
};

/**
 * A finitely supported probability distribution over {0, ..., n-1}.
 *
 * The entry list is kept as given, so duplicate outcomes are legal;
 * compact() merges them into the canonical sorted form. Construction
 * rejects negative or non-finite weights, out-of-range outcomes, and
 * total mass away from 1 beyond kMassTolerance.
 *
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class Dist {
 public:
  Dist(std::vector<WeightedOutcome> entries, int cardinality);

  /// Point mass at `outcome` over a set of `cardinality` elements.
  static Dist point_mass(int outcome, int cardinality);

  /// Uniform distribution over {0, ..., cardinality-1}.
  static Dist uniform(int cardinality);

  int cardinality() const noexcept { return cardinality_; }
  const std::vector<WeightedOutcome>& entries() const noexcept { return entries_; }

  /// Total probability of `outcome`, summing duplicate entries.
  double prob(int outcome) const;

  /// Dense probability vector of length cardinality().
  std::vector<double> to_dense() const;

  static constexpr double kMassTolerance = 1e-9;

 private:
  std::vector<WeightedOutcome> entries_;
  int cardinality_;
};

/// A stochastic kernel: maps an outcome index to a distribution.
using Kernel = std::function<Dist(int)>;

/// Unit of the distribution monad: the point mass at `outcome`.
Dist ret(int outcome, int cardinality);

/// Monadic bind: result(b) = sum over a of f(a)(b) * p(a). The kernel
/// is evaluated only on the support of p and must map every supported
/// outcome to a distribution of one common cardinality.
Dist bind(const Dist& p, const Kernel& f);

/// Kleisli composition f then g; the sum over intermediate outcomes
/// recovers the Chapman-Kolmogorov product of stochastic matrices.
Kernel kleisli_compose(Kernel f, Kernel g);

/// k-fold composite p0 >=> T >=> ... >=> T; steps = 0 returns p0 and
/// steps = 1 equals bind(p0, T).
Dist kleisli_iterate(const Dist& p0, const Kernel& transition, int steps);

/// Canonical form: duplicate outcomes merged by weight addition,
/// zero-weight entries dropped, entries sorted by outcome index.
Dist compact(const Dist& p);

/// Expected value of f under p; f is evaluated on the support only.
double expectation(const Dist& p, const std::function<double(int)>& f);

/// Largest absolute difference between the dense forms of a and b.
double max_abs_diff(const Dist& a, const Dist& b);

/// Equality of compacted forms with per-entry tolerance.
bool approx_equal(const Dist& a, const Dist& b, double tol = 1e-12);

}  // namespace mdpkit
