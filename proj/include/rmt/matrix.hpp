#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rmt {

using cxd = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t n() const { return n_; }
  bool empty() const { return n_ == 0; }

  cxd& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  cxd* row(std::size_t i) { return a_.data() + i * n_; }
  const cxd* row(std::size_t i) const { return a_.data() + i * n_; }

  cxd* data() { return a_.data(); }
  const cxd* data() const { return a_.data(); }

  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<cxd> a_;
};

// Scale conventions: M is the raw atom scale, W = M / sqrt(n), A = sqrt(n) M.
enum class Scale { M, W, A };

// Hermitian matrix with sampling provenance. Entries of the lower triangle
// are stored as exact conjugates of the upper triangle.
struct HermitianMatrix {
  ComplexMatrix entries;
  std::string ensemble_id;
  std::uint64_t seed = 0;
  Scale scale = Scale::M;

  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : entries(n) {}

  std::size_t n() const { return entries.n(); }
  cxd& at(std::size_t i, std::size_t j) { return entries(i, j); }
  const cxd& at(std::size_t i, std::size_t j) const { return entries(i, j); }

  // max_ij |a_ij - conj(a_ji)|; zero for matrices built by sample_matrix.
  double hermiticity_error() const;

  // Returns the same matrix re-expressed at another scale.
  HermitianMatrix rescaled(Scale target) const;

  // Leading principal minor: drop the last row and column.
  HermitianMatrix leading_minor() const;
};

// Multiplier that converts entries at scale `from` to scale `to` for an
// n x n matrix.
double scale_factor(Scale from, Scale to, std::size_t n);

// Solves A x = b for dense complex A via partial-pivot LU with one step of
// iterative refinement. Returns x; *rel_residual (if non-null) receives
// ||b - A x|| / max(1, ||b||) after refinement.
std::vector<cxd> lu_solve(const ComplexMatrix& a, const std::vector<cxd>& b,
                          double* rel_residual = nullptr);

}  // namespace rmt
