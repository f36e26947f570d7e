#include "mdpkit/dist.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "mdpkit/errors.hpp"

namespace mdpkit {

Dist::Dist(std::vector<WeightedOutcome> entries, int cardinality)
    : entries_(std::move(entries)), cardinality_(cardinality) {
  if (cardinality_ < 1)
    throw std::invalid_argument("Dist: cardinality must be at least 1, got " +
                                std::to_string(cardinality_));
  double sum = 0.0;
  for (const auto& e : entries_) {
    if (!std::isfinite(e.weight))
      throw NonFiniteError("Dist: non-finite weight");
    if (e.weight < 0.0)
      throw std::invalid_argument("Dist: negative weight " + std::to_string(e.weight));
    if (e.outcome < 0 || e.outcome >= cardinality_)
      throw std::out_of_range("Dist: outcome " + std::to_string(e.outcome) +
                              " not in [0, " + std::to_string(cardinality_) + ")");
    sum += e.weight;
  }
  if (std::abs(sum - 1.0) > kMassTolerance)
    throw std::invalid_argument("Dist: total mass " + std::to_string(sum) +
                                " differs from 1 beyond tolerance");
}

Dist Dist::point_mass(int outcome, int cardinality) {
  return Dist({{1.0, outcome}}, cardinality);
}

Dist Dist::uniform(int cardinality) {
  if (cardinality < 1)
    throw std::invalid_argument("Dist: cardinality must be at least 1");
  std::vector<WeightedOutcome> entries;
  entries.reserve(static_cast<std::size_t>(cardinality));
  const double w = 1.0 / cardinality;
  for (int i = 0; i < cardinality; ++i) entries.push_back({w, i});
  return Dist(std::move(entries), cardinality);
}

double Dist::prob(int outcome) const {
  double total = 0.0;
  for (const auto& e : entries_)
    if (e.outcome == outcome) total += e.weight;
  return total;
}

std::vector<double> Dist::to_dense() const {
  std::vector<double> dense(static_cast<std::size_t>(cardinality_), 0.0);
  for (const auto& e : entries_) dense[static_cast<std::size_t>(e.outcome)] += e.weight;
  return dense;
}

Dist ret(int outcome, int cardinality) { return Dist::point_mass(outcome, cardinality); }

Dist bind(const Dist& p, const Kernel& f) {
  int codomain = -1;
  std::vector<double> mass;
  for (const auto& e : p.entries()) {
    if (e.weight == 0.0) continue;
    const Dist d = f(e.outcome);
    if (codomain < 0) {
      codomain = d.cardinality();
      mass.assign(static_cast<std::size_t>(codomain), 0.0);
    } else if (d.cardinality() != codomain) {
      throw std::invalid_argument("bind: kernel codomain cardinality " +
                                  std::to_string(d.cardinality()) + " does not match " +
                                  std::to_string(codomain));
    }
    for (const auto& out : d.entries())
      mass[static_cast<std::size_t>(out.outcome)] += e.weight * out.weight;
  }
  std::vector<WeightedOutcome> entries;
  for (int b = 0; b < codomain; ++b)
    if (mass[static_cast<std::size_t>(b)] != 0.0)
      entries.push_back({mass[static_cast<std::size_t>(b)], b});
  return Dist(std::move(entries), codomain);
}

Kernel kleisli_compose(Kernel f, Kernel g) {
  return [f = std::move(f), g = std::move(g)](int a) { return bind(f(a), g); };
}

Dist kleisli_iterate(const Dist& p0, const Kernel& transition, int steps) {
  if (steps < 0)
    throw std::invalid_argument("kleisli_iterate: steps must be nonnegative, got " +
                                std::to_string(steps));
  Dist current = p0;
  for (int k = 0; k < steps; ++k) current = bind(current, transition);
  return current;
}

Dist compact(const Dist& p) {
  std::vector<double> mass = p.to_dense();
  std::vector<WeightedOutcome> entries;
  for (int i = 0; i < p.cardinality(); ++i)
    if (mass[static_cast<std::size_t>(i)] != 0.0)
      entries.push_back({mass[static_cast<std::size_t>(i)], i});
  return Dist(std::move(entries), p.cardinality());
}

double expectation(const Dist& p, const std::function<double(int)>& f) {
  double total = 0.0;
  for (const auto& e : p.entries())
    if (e.weight != 0.0) total += e.weight * f(e.outcome);
  return total;
}

double max_abs_diff(const Dist& a, const Dist& b) {
  if (a.cardinality() != b.cardinality())
    throw std::invalid_argument("max_abs_diff: cardinality mismatch");
  const std::vector<double> da = a.to_dense();
  const std::vector<double> db = b.to_dense();
  double worst = 0.0;
  for (std::size_t i = 0; i < da.size(); ++i)
    worst = std::max(worst, std::abs(da[i] - db[i]));
  return worst;
}

bool approx_equal(const Dist& a, const Dist& b, double tol) {
  return a.cardinality() == b.cardinality() && max_abs_diff(a, b) <= tol;
}

}  // namespace mdpkit
