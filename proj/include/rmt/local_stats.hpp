#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmt/eigensolve.hpp"
#include "rmt/matrix.hpp"

namespace rmt {

// Interlacing of a matrix at W scale against its leading principal minor
// (last row/column removed): lambda_i(W_n) <= lambda_i(W_{n-1}) <=
// lambda_{i+1}(W_n).
struct InterlacingReport {
  std::size_t n = 0;
  bool holds = false;
  double max_violation = 0.0;
  // entry i: lambda_{i+1}(W_n) - lambda_i(W_{n-1})
  std::vector<double> upper_distances;
  // entry i: lambda_i(W_{n-1}) - lambda_i(W_n)
  std::vector<double> lower_distances;
};

InterlacingReport interlacing_check(const HermitianMatrix& w);

// sup_{i,j} |(u_i)_j| over an orthonormal eigenbasis.
double delocalization_sup(const SpectralDecomposition& decomp);

enum class GapScale { W, A };

// Consecutive differences of W-scale eigenvalues; A scale multiplies by n.
std::vector<double> gaps(std::span<const double> sorted_w_eigenvalues, GapScale scale);

// Residual of the minor identity at the top index i = n:
//   sum_j |u_j(W_{n-1})^* X|^2 / (lambda_j(W_{n-1}) - lambda_n(W_n))
//     = w_nn - lambda_n(W_n),
// with X the last column of W_n minus its last entry. Throws
// identity-degenerate when some |u_j^* X| < 1e-13.
double interlacing_identity_residual(const HermitianMatrix& w);

// Residual of the last-coordinate identity for the unit eigenvector of
// lambda_i (i is 1-based):
//   |x|^2 = 1 / (1 + sum_j (lambda_j(minor) - lambda_i)^{-2} |u_j(minor)^* X|^2).
// Scale-invariant; throws eigenvalue-collision when lambda_i comes within
// 1e-12 of a minor eigenvalue.
double first_coordinate_residual(const HermitianMatrix& h, std::size_t i);

struct ProjectionStat {
  double norm;      // ||pi_H X||
  double centered;  // ||pi_H X|| - sqrt(|index_set|)
};

// Projection of X onto the span of the selected minor eigenvectors
// (0-based indices into decomp columns). X should carry unit-variance
// entries (atom scale).
ProjectionStat projection_statistic(const SpectralDecomposition& minor_decomp,
                                    std::span<const cxd> x,
                                    std::span<const std::size_t> index_set);

enum class EdgeSide { Top, Bottom };

// Rescaled edge eigenvalues: top entry j is (lambda_{n-j}(W_n) - 2) n^{2/3};
// bottom entry j is (-2 - lambda_{j+1}(W_n)) n^{2/3}, sign-flipped so both
// sides share the same limiting law.
struct EdgeStatistic {
  std::size_t k = 0;
  std::vector<double> values;
  EdgeSide side = EdgeSide::Top;
};

EdgeStatistic edge_rescale(std::span<const double> sorted_w_eigenvalues,
                           std::size_t k, EdgeSide side);

}  // namespace rmt
