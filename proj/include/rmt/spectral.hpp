#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmt/matrix.hpp"
#include "rmt/tridiagonal.hpp"

namespace rmt {

// Half-open interval [a, b).
struct Interval {
  double a;
  double b;
  double width() const { return b - a; }
};

// Semicircular density: sqrt(4 - x^2) / (2 pi) on [-2, 2], zero outside.
double rho_sc(double x);

// Integral of rho_sc over I (closed-form antiderivative, endpoints clipped
// to [-2, 2]).
double semicircle_mass(Interval iv);

// s_n(z) = (1/n) sum 1/(lambda_i - z). Requires Im z > 0.
cxd stieltjes_empirical(std::span<const double> eigenvalues, cxd z);

// Semicircle Stieltjes transform s(z) = (-z + sqrt(z^2-4))/2 on the branch
// with cut [-2, 2] that is asymptotic to -1/z at infinity; Im s(z) > 0 for
// Im z > 0 and s + 1/(s+z) = 0.
cxd stieltjes_sc(cxd z);

struct StieltjesSample {
  cxd z;
  cxd s_n;
  cxd s_sc;
  double deviation;  // |s_n - s_sc|
};

StieltjesSample stieltjes_sample(std::span<const double> eigenvalues, cxd z);

struct EsdDeviation {
  std::size_t count;  // N_I
  double deviation;   // |N_I - n * semicircle_mass(I)|
};

// Direct count over sorted-or-not eigenvalues.
EsdDeviation esd_deviation(std::span<const double> eigenvalues, Interval iv);
// Sturm-count variant for when only the tridiagonal form is available.
EsdDeviation esd_deviation(const Tridiagonal& t, Interval iv);

// Residual of the row-removal resolvent identity
//   s_n(z) = (1/n) sum_k 1 / (w_kk - z - a_k^* (W_k - z)^{-1} a_k)
// for a matrix at W scale. Throws resolvent-solve-unstable when a minor
// solve leaves a relative residual above 1e-8.
double schur_identity_residual(const HermitianMatrix& w, cxd z);

}  // namespace rmt
