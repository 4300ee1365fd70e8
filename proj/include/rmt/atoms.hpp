#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "rmt/matrix.hpp"
#include "rmt/rational.hpp"
#include "rmt/rng.hpp"

namespace rmt {

enum class AtomKind {
  RealGaussian,
  ComplexGaussian,
  DiscreteReal,
  DiscreteComplex,
  ScaledSum,
};

struct DiscretePoint {
  cxd value;
  Rational prob;
};

// Law of a single matrix entry. Mean zero is required of every atom; all
// mixed moments E Re^m Im^l with m+l <= 8 are queryable in closed form.
//
// ScaledSum(base, scale) is the law of scale * (X + iY) with X, Y
// independent draws from a real-valued base atom; it is how the
// GUE-matched three-point atom is assembled.
struct AtomDistribution {
  AtomKind kind = AtomKind::RealGaussian;

  double variance = 1.0;                     // RealGaussian
  double var_re = 0.0, var_im = 0.0, cov = 0.0;  // ComplexGaussian
  std::vector<DiscretePoint> points;         // Discrete*
  std::shared_ptr<AtomDistribution> base;    // ScaledSum
  double scale = 1.0;                        // ScaledSum

  // Almost-sure magnitude bound; 0 means unbounded (gaussian kinds).
  double bound = 0.0;

  static AtomDistribution real_gaussian(double variance);
  static AtomDistribution complex_gaussian(double var_re, double var_im, double cov);
  static AtomDistribution discrete_real(std::vector<std::pair<double, Rational>> pts);
  static AtomDistribution discrete_complex(std::vector<DiscretePoint> pts);
  static AtomDistribution scaled_sum(AtomDistribution real_base, double scale);

  bool is_real() const;

  // Checks probabilities sum to one, mean zero, parameter sanity.
  void validate() const;

  // One draw. Consumes the stream deterministically.
  cxd sample(CounterRng& rng) const;
};

// E[Re(zeta)^m Im(zeta)^l]. Exact for discrete atoms (probabilities stay
// rational); gaussian moments via Wick pairing. Requires m + l <= 8.
double moment(const AtomDistribution& atom, int m, int l);

// Largest k <= k_max such that all mixed moments of total order <= k agree
// within 1e-10.
int match_order(const AtomDistribution& a, const AtomDistribution& b, int k_max);

}  // namespace rmt
