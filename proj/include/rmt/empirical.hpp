#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace rmt {

// Sorted sample with ECDF / quantile / two-sample queries.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  explicit EmpiricalDistribution(std::vector<double> samples);

  std::size_t count() const { return samples_.size(); }
  std::span<const double> samples() const { return samples_; }

  // Right-continuous ECDF: P(X <= x).
  double ecdf(double x) const;

  // Quantile by linear interpolation of order statistics (position
  // q * (count - 1)).
  double quantile(double q) const;

  // Pooled sample.
  friend EmpiricalDistribution merge(const EmpiricalDistribution& a,
                                     const EmpiricalDistribution& b);

 private:
  std::vector<double> samples_;
};

struct SummaryStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  std::map<int, double> quantiles;  // percent -> value at 1,5,25,50,75,95,99
};

SummaryStats summarize(const EmpiricalDistribution& dist);

struct KSResult {
  double d = 0.0;  // sup distance of the two ECDFs
  std::size_t m = 0;
  std::size_t n = 0;
  double alpha = 0.0;
  double critical_value = 0.0;  // c(alpha) * sqrt((m+n)/(m n))
  bool reject = false;
};

// Two-sample Kolmogorov-Smirnov with the asymptotic critical value
// c(alpha) = sqrt(-ln(alpha/2)/2). Requires both counts >= 10.
KSResult ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b,
                       double alpha);

}  // namespace rmt
