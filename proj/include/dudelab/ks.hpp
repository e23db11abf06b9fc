#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "dudelab/errors.hpp"

namespace dudelab {

// One-sample Kolmogorov-Smirnov statistic against a cdf:
// D = sup_x |F_n(x) - F(x)|, evaluated at the jump points of the empirical cdf.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
  if (samples.size() < 2) throw DomainError("KS statistic needs at least two samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    if (!(f >= 0.0 && f <= 1.0)) throw DomainError("cdf value outside [0,1]");
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

// Two-sample KS statistic: sup over the pooled sample of |F_a - F_b|.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 2 || b.size() < 2) throw DomainError("KS statistic needs at least two samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

// Critical value of the one-sample statistic at significance level ~alpha in
// the asymptotic regime: c(alpha)/sqrt(n), with c(0.05)=1.358, c(0.01)=1.628.
inline double ks_critical_value(std::size_t n, double c_alpha) {
  return c_alpha / std::sqrt(static_cast<double>(n));
}

inline double ks_two_sample_critical_value(std::size_t n, std::size_t m, double c_alpha) {
  const double nn = static_cast<double>(n), mm = static_cast<double>(m);
  return c_alpha * std::sqrt((nn + mm) / (nn * mm));
}

}  // namespace dudelab
