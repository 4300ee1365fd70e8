#pragma once

#include <vector>

#include "rmt/matrix.hpp"
#include "rmt/tridiagonal.hpp"

namespace rmt {

// Full spectral decomposition H = U diag(lambda) U*. Eigenvalues ascend;
// column i of eigenvectors belongs to eigenvalues[i]. Phases are fixed so
// the largest-magnitude coordinate of each vector is real positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  // max_i ||H u_i - lambda_i u_i||_2 / max(1, max|lambda|)
  double residual = 0.0;
};

// Implicit-shift QL on the tridiagonal form, eigenvectors accumulated.
// Throws eigensolver-no-convergence past 50 sweeps per eigenvalue.
SpectralDecomposition eigen_full(const HermitianMatrix& h);

// Eigenvalues only (no accumulation); much cheaper for large n.
std::vector<double> eigenvalues_only(const HermitianMatrix& h);

// QL pass on an existing tridiagonal; exposed for reuse when the caller
// also needs Sturm counts from the same reduction.
std::vector<double> eigenvalues_only(const Tridiagonal& t);

// max_ij |(U* U - I)_ij|; test helper.
double gram_error(const ComplexMatrix& u);

}  // namespace rmt
