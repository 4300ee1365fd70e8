#include "rmt/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

constexpr int kMaxSweeps = 50;

// Implicit-shift QL with optional eigenvector accumulation (rotations are
// real and act on columns of q).
void tql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                        ComplexMatrix* q) {
  const int n = static_cast<int>(d.size());
  if (n <= 1) return;
  std::vector<double> ee(n, 0.0);
  std::copy(e.begin(), e.end(), ee.begin());
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(ee[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps)
          throw Error("eigensolver-no-convergence",
                      "QL exceeded " + std::to_string(kMaxSweeps) +
                          " sweeps at eigenvalue " + std::to_string(l));
        double g = (d[l + 1] - d[l]) / (2.0 * ee[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + ee[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * ee[i];
          const double b = c * ee[i];
          r = std::hypot(f, g);
          ee[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            ee[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (q) {
            for (std::size_t row = 0; row < q->n(); ++row) {
              const cxd t = (*q)(row, i + 1);
              (*q)(row, i + 1) = s * (*q)(row, i) + c * t;
              (*q)(row, i) = c * (*q)(row, i) - s * t;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        ee[l] = g;
        ee[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& d, ComplexMatrix* q) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (std::size_t i = 0; i < n; ++i) ds[i] = d[order[i]];
  d = std::move(ds);
  if (q) {
    ComplexMatrix p(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) p(i, j) = (*q)(i, order[j]);
    *q = std::move(p);
  }
}

// Modified Gram-Schmidt within clusters of near-equal eigenvalues, then a
// phase convention: largest-magnitude coordinate real positive.
void polish_vectors(const std::vector<double>& d, ComplexMatrix& u) {
  const std::size_t n = d.size();
  double lam_max = 1.0;
  for (double v : d) lam_max = std::max(lam_max, std::abs(v));
  const double cluster_tol = 1e-12 * lam_max;

  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && d[stop] - d[stop - 1] <= cluster_tol) ++stop;
    for (std::size_t j = start + 1; j < stop; ++j) {
      for (std::size_t prev = start; prev < j; ++prev) {
        cxd dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, prev)) * u(i, j);
        for (std::size_t i = 0; i < n; ++i) u(i, j) -= dot * u(i, prev);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < n; ++i) nrm += std::norm(u(i, j));
      nrm = std::sqrt(nrm);
      if (nrm > 0.0)
        for (std::size_t i = 0; i < n; ++i) u(i, j) /= nrm;
    }
    start = stop;
  }

  for (std::size_t j = 0; j < n; ++j) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(u(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (best > 0.0) {
      const cxd ph = u(imax, j) / best;
      const cxd correction = std::conj(ph);
      for (std::size_t i = 0; i < n; ++i) u(i, j) *= correction;
    }
  }
}

double residual_of(const HermitianMatrix& h, const std::vector<double>& d,
                   const ComplexMatrix& u) {
  const std::size_t n = h.n();
  double lam_max = 1.0;
  for (double v : d) lam_max = std::max(lam_max, std::abs(v));
  double worst = 0.0;
  std::vector<cxd> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = u(i, j);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cxd s = 0.0;
      const cxd* row = h.entries.row(i);
      for (std::size_t kk = 0; kk < n; ++kk) s += row[kk] * col[kk];
      s -= d[j] * col[i];
      r2 += std::norm(s);
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  return worst / lam_max;
}

}  // namespace

SpectralDecomposition eigen_full(const HermitianMatrix& h) {
  Tridiagonal t = tridiagonalize(h, true);
  SpectralDecomposition out;
  out.eigenvalues = t.diag;
  tql_implicit_shift(out.eigenvalues, t.offdiag, &t.q);
  sort_ascending(out.eigenvalues, &t.q);
  polish_vectors(out.eigenvalues, t.q);
  out.eigenvectors = std::move(t.q);
  out.residual = residual_of(h, out.eigenvalues, out.eigenvectors);
  return out;
}

std::vector<double> eigenvalues_only(const HermitianMatrix& h) {
  return eigenvalues_only(tridiagonalize(h, false));
}

std::vector<double> eigenvalues_only(const Tridiagonal& t) {
  std::vector<double> d = t.diag;
  std::vector<double> e = t.offdiag;
  tql_implicit_shift(d, e, nullptr);
  sort_ascending(d, nullptr);
  return d;
}

double gram_error(const ComplexMatrix& u) {
  const std::size_t n = u.n();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      cxd dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, a)) * u(i, b);
      if (a == b) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

}  // namespace rmt
