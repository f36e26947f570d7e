#include "mdpkit/fnspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "mdpkit/errors.hpp"

namespace mdpkit {

namespace {

void require_same_size(const ValueFn& f, const ValueFn& g, const char* op) {
  if (f.size() != g.size())
    throw std::invalid_argument(std::string(op) + ": length mismatch (" +
                                std::to_string(f.size()) + " vs " +
                                std::to_string(g.size()) + ")");
}

}  // namespace

ValueFn::ValueFn(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("ValueFn: at least one entry required");
  for (double v : values_)
    if (!std::isfinite(v)) throw NonFiniteError("ValueFn: non-finite entry");
}

ValueFn ValueFn::zero(int n) { return constant(n, 0.0); }

ValueFn ValueFn::constant(int n, double value) {
  if (n < 1) throw std::invalid_argument("ValueFn: size must be at least 1");
  return ValueFn(std::vector<double>(static_cast<std::size_t>(n), value));
}

double sup_norm(const ValueFn& f) {
  double worst = 0.0;
  for (double v : f.values()) worst = std::max(worst, std::abs(v));
  return worst;
}

double dist(const ValueFn& f, const ValueFn& g) {
  require_same_size(f, g, "dist");
  double worst = 0.0;
  for (int i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(f[i] - g[i]));
  return worst;
}

bool le(const ValueFn& f, const ValueFn& g) { return le_within(f, g, 0.0); }

bool le_within(const ValueFn& f, const ValueFn& g, double eps) {
  require_same_size(f, g, "le");
  for (int i = 0; i < f.size(); ++i)
    if (f[i] > g[i] + eps) return false;
  return true;
}

ValueFn axpy(double alpha, const ValueFn& f, const ValueFn& g) {
  require_same_size(f, g, "axpy");
  std::vector<double> out(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(i)] = alpha * f[i] + g[i];
  return ValueFn(std::move(out));
}

ValueFn add(const ValueFn& f, const ValueFn& g) { return axpy(1.0, f, g); }

ValueFn sub(const ValueFn& f, const ValueFn& g) { return axpy(-1.0, g, f); }

ValueFn scale(double alpha, const ValueFn& f) {
  std::vector<double> out(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(i)] = alpha * f[i];
  return ValueFn(std::move(out));
}

}  // namespace mdpkit
