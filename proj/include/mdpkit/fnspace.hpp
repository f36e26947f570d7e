#pragma once

#include <vector>

namespace mdpkit {

/**
 * A real-valued function on a finite index set, with the sup norm and
 * the pointwise partial order. Entries must be finite; immutable after
 * construction.
 */
class ValueFn {
 public:
  explicit ValueFn(std::vector<double> values);

  static ValueFn zero(int n);
  static ValueFn constant(int n, double value);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Largest absolute entry.
double sup_norm(const ValueFn& f);

/// Sup-norm distance between f and g.
double dist(const ValueFn& f, const ValueFn& g);

/// Pointwise order: true iff f(i) <= g(i) at every index.
bool le(const ValueFn& f, const ValueFn& g);

/// Tolerance-relaxed order: f(i) <= g(i) + eps at every index.
bool le_within(const ValueFn& f, const ValueFn& g, double eps);

/// Entrywise alpha * f + g.
ValueFn axpy(double alpha, const ValueFn& f, const ValueFn& g);

ValueFn add(const ValueFn& f, const ValueFn& g);
ValueFn sub(const ValueFn& f, const ValueFn& g);
ValueFn scale(double alpha, const ValueFn& f);

}  // namespace mdpkit
