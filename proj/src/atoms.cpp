#include "rmt/atoms.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

constexpr int kMaxMomentOrder = 8;

double gaussian_moment(int m, double variance) {
  // E X^m for X ~ N(0, variance): 0 for odd m, variance^{m/2} (m-1)!! for even.
  if (m % 2 == 1) return 0.0;
  double r = 1.0;
  for (int j = m - 1; j >= 1; j -= 2) r *= j;
  return r * std::pow(variance, m / 2);
}

// Wick pairing sum for a jointly gaussian vector of "types" (0 = Re, 1 = Im)
// with covariance given by cv[t1][t2]. Order <= 8 keeps this tiny.
double wick(std::vector<int>& types, const double cv[2][2]) {
  const std::size_t k = types.size();
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;
  const int first = types.front();
  double total = 0.0;
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<int> rest;
    rest.reserve(k - 2);
    for (std::size_t t = 1; t < k; ++t)
      if (t != j) rest.push_back(types[t]);
    total += cv[first][types[j]] * wick(rest, cv);
  }
  return total;
}

double discrete_moment(const std::vector<DiscretePoint>& pts, int m, int l) {
  long double acc = 0.0L;
  for (const DiscretePoint& p : pts) {
    long double t = 1.0L;
    for (int i = 0; i < m; ++i) t *= p.value.real();
    for (int i = 0; i < l; ++i) t *= p.value.imag();
    acc += static_cast<long double>(p.prob.num) * t / p.prob.den;
  }
  return static_cast<double>(acc);
}

}  // namespace

AtomDistribution AtomDistribution::real_gaussian(double variance) {
  AtomDistribution a;
  a.kind = AtomKind::RealGaussian;
  a.variance = variance;
  a.bound = 0.0;
  return a;
}

AtomDistribution AtomDistribution::complex_gaussian(double var_re, double var_im,
                                                    double cov) {
  AtomDistribution a;
  a.kind = AtomKind::ComplexGaussian;
  a.var_re = var_re;
  a.var_im = var_im;
  a.cov = cov;
  a.bound = 0.0;
  return a;
}

AtomDistribution AtomDistribution::discrete_real(
    std::vector<std::pair<double, Rational>> pts) {
  AtomDistribution a;
  a.kind = AtomKind::DiscreteReal;
  for (auto& [v, p] : pts) a.points.push_back({cxd(v, 0.0), p});
  a.bound = 0.0;
  for (const auto& p : a.points) a.bound = std::max(a.bound, std::abs(p.value));
  return a;
}

AtomDistribution AtomDistribution::discrete_complex(std::vector<DiscretePoint> pts) {
  AtomDistribution a;
  a.kind = AtomKind::DiscreteComplex;
  a.points = std::move(pts);
  a.bound = 0.0;
  for (const auto& p : a.points) a.bound = std::max(a.bound, std::abs(p.value));
  return a;
}

AtomDistribution AtomDistribution::scaled_sum(AtomDistribution real_base, double scale) {
  if (!real_base.is_real())
    throw Error("config-invalid", "scaled_sum base must be real-valued");
  AtomDistribution a;
  a.kind = AtomKind::ScaledSum;
  a.base = std::make_shared<AtomDistribution>(std::move(real_base));
  a.scale = scale;
  a.bound = a.base->bound > 0.0
                ? std::abs(scale) * a.base->bound * std::sqrt(2.0)
                : 0.0;
  return a;
}

bool AtomDistribution::is_real() const {
  switch (kind) {
    case AtomKind::RealGaussian:
    case AtomKind::DiscreteReal:
      return true;
    case AtomKind::ComplexGaussian:
      return var_im == 0.0 && cov == 0.0;
    case AtomKind::DiscreteComplex:
      return std::all_of(points.begin(), points.end(),
                         [](const DiscretePoint& p) { return p.value.imag() == 0.0; });
    case AtomKind::ScaledSum:
      return false;
  }
  return false;
}

void AtomDistribution::validate() const {
  switch (kind) {
    case AtomKind::RealGaussian:
      if (variance < 0.0) throw Error("config-invalid", "negative gaussian variance");
      break;
    case AtomKind::ComplexGaussian: {
      if (var_re < 0.0 || var_im < 0.0)
        throw Error("config-invalid", "negative gaussian variance");
      if (cov * cov > var_re * var_im + 1e-15)
        throw Error("config-invalid", "gaussian covariance exceeds variances");
      break;
    }
    case AtomKind::DiscreteReal:
    case AtomKind::DiscreteComplex: {
      if (points.empty()) throw Error("config-invalid", "discrete atom with no points");
      Rational total(0);
      for (const DiscretePoint& p : points) {
        if (p.prob.num < 0) throw Error("config-invalid", "negative probability");
        total = total + p.prob;
      }
      if (!(total == Rational(1)))
        throw Error("config-invalid", "probabilities sum to " + total.str() + ", not 1");
      break;
    }
    case AtomKind::ScaledSum:
      if (!base) throw Error("config-invalid", "scaled_sum without base");
      base->validate();
      break;
  }
  if (std::abs(moment(*this, 1, 0)) > 1e-12 || std::abs(moment(*this, 0, 1)) > 1e-12)
    throw Error("config-invalid", "atom mean is not zero");
}

cxd AtomDistribution::sample(CounterRng& rng) const {
  switch (kind) {
    case AtomKind::RealGaussian:
      return cxd(std::sqrt(variance) * rng.next_gaussian(), 0.0);
    case AtomKind::ComplexGaussian: {
      // Cholesky of [[var_re, cov], [cov, var_im]].
      const double a = std::sqrt(var_re);
      const double b = a > 0.0 ? cov / a : 0.0;
      const double c2 = var_im - b * b;
      const double c = c2 > 0.0 ? std::sqrt(c2) : 0.0;
      const double g1 = rng.next_gaussian();
      const double g2 = rng.next_gaussian();
      return cxd(a * g1, b * g1 + c * g2);
    }
    case AtomKind::DiscreteReal:
    case AtomKind::DiscreteComplex: {
      const double u = rng.next_unit();
      double cum = 0.0;
      for (const DiscretePoint& p : points) {
        cum += p.prob.to_double();
        if (u < cum) return p.value;
      }
      return points.back().value;
    }
    case AtomKind::ScaledSum: {
      const double x = base->sample(rng).real();
      const double y = base->sample(rng).real();
      return scale * cxd(x, y);
    }
  }
  return cxd(0.0);
}

double moment(const AtomDistribution& atom, int m, int l) {
  if (m < 0 || l < 0 || m + l > kMaxMomentOrder)
    throw Error("moment-unavailable",
                "mixed moment order " + std::to_string(m + l) + " not supported");
  switch (atom.kind) {
    case AtomKind::RealGaussian:
      if (l > 0) return 0.0;  // Im == 0 a.s.
      return gaussian_moment(m, atom.variance);
    case AtomKind::ComplexGaussian: {
      const double cv[2][2] = {{atom.var_re, atom.cov}, {atom.cov, atom.var_im}};
      std::vector<int> types(static_cast<std::size_t>(m), 0);
      types.insert(types.end(), static_cast<std::size_t>(l), 1);
      return wick(types, cv);
    }
    case AtomKind::DiscreteReal:
    case AtomKind::DiscreteComplex:
      return discrete_moment(atom.points, m, l);
    case AtomKind::ScaledSum: {
      // Re = scale X, Im = scale Y with X, Y iid base.
      const double sm = moment(*atom.base, m, 0);
      const double sl = moment(*atom.base, l, 0);
      return std::pow(atom.scale, m + l) * sm * sl;
    }
  }
  throw Error("moment-unavailable", "unknown atom kind");
}

int match_order(const AtomDistribution& a, const AtomDistribution& b, int k_max) {
  if (k_max > kMaxMomentOrder)
    throw Error("moment-unavailable", "match order beyond supported moments");
  int best = 0;
  for (int k = 1; k <= k_max; ++k) {
    bool agree = true;
    for (int m = 0; m <= k && agree; ++m) {
      const int l = k - m;
      if (std::abs(moment(a, m, l) - moment(b, m, l)) > 1e-10) agree = false;
    }
    if (!agree) break;
    best = k;
  }
  return best;
}

}  // namespace rmt
