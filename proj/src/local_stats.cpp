#include "rmt/local_stats.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

InterlacingReport interlacing_check(const HermitianMatrix& w) {
  const std::size_t n = w.n();
  if (n < 2) throw Error("contract-violation", "interlacing needs n >= 2");
  const std::vector<double> full = eigenvalues_only(w);
  const std::vector<double> minor = eigenvalues_only(w.leading_minor());

  InterlacingReport rep;
  rep.n = n;
  rep.upper_distances.resize(n - 1);
  rep.lower_distances.resize(n - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rep.lower_distances[i] = minor[i] - full[i];
    rep.upper_distances[i] = full[i + 1] - minor[i];
    worst = std::max(worst, -rep.lower_distances[i]);
    worst = std::max(worst, -rep.upper_distances[i]);
  }
  rep.max_violation = std::max(0.0, worst);
  double wnorm = 1.0;
  for (double lam : full) wnorm = std::max(wnorm, std::abs(lam));
  rep.holds = rep.max_violation <= 1e-9 * wnorm;
  return rep;
}

double delocalization_sup(const SpectralDecomposition& decomp) {
  double sup = 0.0;
  const ComplexMatrix& u = decomp.eigenvectors;
  for (std::size_t i = 0; i < u.n(); ++i)
    for (std::size_t j = 0; j < u.n(); ++j) sup = std::max(sup, std::abs(u(i, j)));
  return sup;
}

std::vector<double> gaps(std::span<const double> sorted_w_eigenvalues, GapScale scale) {
  const std::size_t n = sorted_w_eigenvalues.size();
  const double factor = scale == GapScale::A ? static_cast<double>(n) : 1.0;
  std::vector<double> out(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    out[i] = factor * (sorted_w_eigenvalues[i + 1] - sorted_w_eigenvalues[i]);
  return out;
}

namespace {

// Inner products |u_j(minor)^* X|^2 for the last column X of h.
std::vector<double> minor_overlaps(const SpectralDecomposition& minor_decomp,
                                   const HermitianMatrix& h) {
  const std::size_t m = minor_decomp.eigenvalues.size();
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    cxd dot = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      dot += std::conj(minor_decomp.eigenvectors(i, j)) * h.at(i, m);
    out[j] = std::norm(dot);
  }
  return out;
}

}  // namespace

double interlacing_identity_residual(const HermitianMatrix& w) {
  const std::size_t n = w.n();
  if (n < 2) throw Error("contract-violation", "identity needs n >= 2");
  const SpectralDecomposition minor = eigen_full(w.leading_minor());
  const std::vector<double> full = eigenvalues_only(w);
  const double lam_top = full.back();

  const std::vector<double> over = minor_overlaps(minor, w);
  for (double o2 : over)
    if (std::sqrt(o2) < 1e-13)
      throw Error("identity-degenerate", "an inner product u_j^* X vanishes");

  double lhs = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j)
    lhs += over[j] / (minor.eigenvalues[j] - lam_top);
  const double rhs = w.at(n - 1, n - 1).real() - lam_top;
  return std::abs(lhs - rhs);
}

double first_coordinate_residual(const HermitianMatrix& h, std::size_t i) {
  const std::size_t n = h.n();
  if (n < 2) throw Error("contract-violation", "identity needs n >= 2");
  if (i < 1 || i > n) throw Error("contract-violation", "index out of range");
  const SpectralDecomposition full = eigen_full(h);
  const SpectralDecomposition minor = eigen_full(h.leading_minor());
  const double lam = full.eigenvalues[i - 1];

  for (double mu : minor.eigenvalues)
    if (std::abs(mu - lam) <= 1e-12)
      throw Error("eigenvalue-collision",
                  "lambda_i collides with a minor eigenvalue");

  const std::vector<double> over = minor_overlaps(minor, h);
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double gap = minor.eigenvalues[j] - lam;
    sum += over[j] / (gap * gap);
  }
  const double formula = 1.0 / (1.0 + sum);
  const double direct = std::norm(full.eigenvectors(n - 1, i - 1));
  return std::abs(direct - formula);
}

ProjectionStat projection_statistic(const SpectralDecomposition& minor_decomp,
                                    std::span<const cxd> x,
                                    std::span<const std::size_t> index_set) {
  const std::size_t m = minor_decomp.eigenvalues.size();
  if (x.size() != m)
    throw Error("contract-violation", "projection vector length mismatch");
  double norm2 = 0.0;
  for (std::size_t j : index_set) {
    if (j >= m) throw Error("contract-violation", "projection index out of range");
    cxd dot = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      dot += std::conj(minor_decomp.eigenvectors(i, j)) * x[i];
    norm2 += std::norm(dot);
  }
  const double norm = std::sqrt(norm2);
  return {norm, norm - std::sqrt(static_cast<double>(index_set.size()))};
}

EdgeStatistic edge_rescale(std::span<const double> sorted_w_eigenvalues,
                           std::size_t k, EdgeSide side) {
  const std::size_t n = sorted_w_eigenvalues.size();
  if (k > n) throw Error("contract-violation", "edge statistic needs k <= n");
  const double factor = std::pow(static_cast<double>(n), 2.0 / 3.0);
  EdgeStatistic out;
  out.k = k;
  out.side = side;
  out.values.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (side == EdgeSide::Top)
      out.values[j] = (sorted_w_eigenvalues[n - 1 - j] - 2.0) * factor;
    else
      out.values[j] = (-2.0 - sorted_w_eigenvalues[j]) * factor;
  }
  return out;
}

}  // namespace rmt
