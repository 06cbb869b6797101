#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "wellkit/errors.hpp"

namespace wellkit {

template <typename Derived>
double mean(const Eigen::DenseBase<Derived>& x) {
  if (x.size() == 0) throw ParameterError("mean: empty input");
  return x.derived().template cast<double>().sum() / static_cast<double>(x.size());
}

/// Sample standard deviation (divisor n-1); 0 for fewer than two values.
template <typename Derived>
double sample_std(const Eigen::DenseBase<Derived>& x) {
  const auto n = x.size();
  if (n < 2) return 0.0;
  const double m = mean(x);
  const double ss = (x.derived().template cast<double>().array() - m).square().sum();
  return std::sqrt(ss / static_cast<double>(n - 1));
}

/// Quantile of a sorted sequence by linear interpolation between closest
/// ranks: position h = (n-1)*p, value = x[floor(h)] + frac(h) * (x[floor(h)+1]
/// - x[floor(h)]).
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw ParameterError("quantile: empty input");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("quantile: p must be in [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline double quantile(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, p);
}

template <typename Derived>
double quantile(const Eigen::DenseBase<Derived>& x, double p) {
  std::vector<double> values(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    values[static_cast<std::size_t>(i)] = static_cast<double>(x.derived()(i));
  }
  return quantile(std::move(values), p);
}

/// Median absolute deviation from the median.
inline double median_abs_deviation(std::vector<double> values) {
  const double med = quantile(values, 0.5);
  for (double& v : values) v = std::abs(v - med);
  return quantile(std::move(values), 0.5);
}

}  // namespace wellkit
