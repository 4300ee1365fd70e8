#include "rmt/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDistribution::ecdf(double x) const {
  if (samples_.empty()) throw Error("insufficient-samples", "empty distribution");
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) /
         static_cast<double>(samples_.size());
}

double EmpiricalDistribution::quantile(double q) const {
  if (samples_.empty()) throw Error("insufficient-samples", "empty distribution");
  q = std::clamp(q, 0.0, 1.0);
  const double pos = q * static_cast<double>(samples_.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= samples_.size()) return samples_.back();
  return samples_[lo] * (1.0 - frac) + samples_[lo + 1] * frac;
}

EmpiricalDistribution merge(const EmpiricalDistribution& a,
                            const EmpiricalDistribution& b) {
  std::vector<double> pooled;
  pooled.reserve(a.samples_.size() + b.samples_.size());
  std::merge(a.samples_.begin(), a.samples_.end(), b.samples_.begin(),
             b.samples_.end(), std::back_inserter(pooled));
  EmpiricalDistribution out;
  out.samples_ = std::move(pooled);
  return out;
}

SummaryStats summarize(const EmpiricalDistribution& dist) {
  if (dist.count() == 0) throw Error("insufficient-samples", "empty distribution");
  SummaryStats s;
  const auto xs = dist.samples();
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / (n - 1.0);
  }
  for (int p : {1, 5, 25, 50, 75, 95, 99}) s.quantiles[p] = dist.quantile(p / 100.0);
  return s;
}

KSResult ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b,
                       double alpha) {
  if (a.count() < 10 || b.count() < 10)
    throw Error("insufficient-samples", "two-sample KS needs at least 10 per side");
  KSResult r;
  r.m = a.count();
  r.n = b.count();
  r.alpha = alpha;

  // The sup of |F_a - F_b| over step functions is attained just after a
  // sample point; scan the merged sample points.
  double d = 0.0;
  for (double x : a.samples()) d = std::max(d, std::abs(a.ecdf(x) - b.ecdf(x)));
  for (double x : b.samples()) d = std::max(d, std::abs(a.ecdf(x) - b.ecdf(x)));
  r.d = d;

  const double c_alpha = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double m = static_cast<double>(r.m);
  const double n = static_cast<double>(r.n);
  r.critical_value = c_alpha * std::sqrt((m + n) / (m * n));
  r.reject = r.d > r.critical_value;
  return r;
}

}  // namespace rmt
