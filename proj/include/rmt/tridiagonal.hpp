#pragma once

#include <vector>

#include "rmt/matrix.hpp"

namespace rmt {

// Real symmetric tridiagonal form of a Hermitian matrix: H = Q T Q* with
// offdiag real nonnegative (complex phases absorbed into Q).
struct Tridiagonal {
  std::vector<double> diag;     // n
  std::vector<double> offdiag;  // n-1
  ComplexMatrix q;              // empty unless requested

  std::size_t n() const { return diag.size(); }
  bool has_q() const { return !q.empty(); }

  // max(|diag|, |offdiag|); cheap stand-in for ||T||.
  double norm_est() const;
};

// Householder reduction. Throws contract-violation when the input fails the
// Hermitian check (asymmetry > 1e-12 * max(1, max|entry|)).
Tridiagonal tridiagonalize(const HermitianMatrix& h, bool want_q);

// Number of eigenvalues of T strictly below x (Sturm sign count with pivots
// floored at tiny * ||T||; exact zero pivots count as nonnegative, which
// makes interval counts half-open).
std::size_t sturm_count_below(const Tridiagonal& t, double x);

// Eigenvalues of T in [a, b).
std::size_t count_in_interval(const Tridiagonal& t, double a, double b);

// All eigenvalues by pure bisection on Sturm counts. Independent of the
// QL path; used as a cross-check.
std::vector<double> bisection_eigenvalues(const Tridiagonal& t);

}  // namespace rmt
