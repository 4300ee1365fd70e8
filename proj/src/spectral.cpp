#include "rmt/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/eigensolve.hpp"
#include "rmt/errors.hpp"

namespace rmt {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double rho_sc(double x) {
  if (std::abs(x) >= 2.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

namespace {

// Antiderivative of rho_sc on [-2, 2].
double semicircle_cdf_term(double x) {
  x = std::clamp(x, -2.0, 2.0);
  const double s = std::sqrt(std::max(0.0, 4.0 - x * x));
  return (0.5 * x * s + 2.0 * std::asin(0.5 * x)) / (2.0 * kPi);
}

}  // namespace

double semicircle_mass(Interval iv) {
  if (!(iv.a < iv.b)) throw Error("contract-violation", "interval requires a < b");
  return semicircle_cdf_term(iv.b) - semicircle_cdf_term(iv.a);
}

cxd stieltjes_empirical(std::span<const double> eigenvalues, cxd z) {
  if (!(z.imag() > 0.0))
    throw Error("contract-violation", "stieltjes transform requires Im z > 0");
  cxd s = 0.0;
  for (double lam : eigenvalues) s += 1.0 / (cxd(lam, 0.0) - z);
  return s / static_cast<double>(eigenvalues.size());
}

cxd stieltjes_sc(cxd z) {
  if (!(z.imag() > 0.0))
    throw Error("contract-violation", "stieltjes transform requires Im z > 0");
  // sqrt(z^2-4) as sqrt(z-2)*sqrt(z+2): the principal-branch product puts
  // the cut on [-2, 2] and behaves like z at infinity.
  const cxd root = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
  return 0.5 * (-z + root);
}

StieltjesSample stieltjes_sample(std::span<const double> eigenvalues, cxd z) {
  StieltjesSample out;
  out.z = z;
  out.s_n = stieltjes_empirical(eigenvalues, z);
  out.s_sc = stieltjes_sc(z);
  out.deviation = std::abs(out.s_n - out.s_sc);
  return out;
}

EsdDeviation esd_deviation(std::span<const double> eigenvalues, Interval iv) {
  if (!(iv.a < iv.b)) throw Error("contract-violation", "interval requires a < b");
  std::size_t count = 0;
  for (double lam : eigenvalues)
    if (lam >= iv.a && lam < iv.b) ++count;
  const double expected = static_cast<double>(eigenvalues.size()) * semicircle_mass(iv);
  return {count, std::abs(static_cast<double>(count) - expected)};
}

EsdDeviation esd_deviation(const Tridiagonal& t, Interval iv) {
  const std::size_t count = count_in_interval(t, iv.a, iv.b);
  const double expected = static_cast<double>(t.n()) * semicircle_mass(iv);
  return {count, std::abs(static_cast<double>(count) - expected)};
}

double schur_identity_residual(const HermitianMatrix& w, cxd z) {
  if (!(z.imag() > 0.0))
    throw Error("contract-violation", "schur identity requires Im z > 0");
  const std::size_t n = w.n();
  if (n == 0) throw Error("contract-violation", "empty matrix");

  cxd rhs = 0.0;
  std::vector<cxd> a_k(n > 0 ? n - 1 : 0);
  ComplexMatrix minor(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k < n; ++k) {
    cxd y_k = 0.0;
    if (n > 1) {
      // minor = W with row/col k removed, shifted by -z
      std::size_t ii = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        std::size_t jj = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == k) continue;
          minor(ii, jj) = w.at(i, j) - (ii == jj ? z : cxd(0.0));
          ++jj;
        }
        ++ii;
      }
      // a_k = row k of W with element k removed
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        a_k[jj++] = w.at(k, j);
      }
      double rel = 0.0;
      const std::vector<cxd> y = lu_solve(minor, a_k, &rel);
      if (rel > 1e-8)
        throw Error("resolvent-solve-unstable",
                    "minor solve residual " + std::to_string(rel));
      for (std::size_t j = 0; j + 1 < n; ++j) y_k += std::conj(a_k[j]) * y[j];
    }
    rhs += 1.0 / (w.at(k, k) - z - y_k);
  }
  rhs /= static_cast<double>(n);

  std::vector<double> eig;
  if (n == 1) {
    eig.push_back(w.at(0, 0).real());
  } else {
    eig = eigenvalues_only(w);
  }
  const cxd s_n = stieltjes_empirical(eig, z);
  return std::abs(rhs - s_n);
}

}  // namespace rmt
