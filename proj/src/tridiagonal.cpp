#include "rmt/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmt/errors.hpp"

namespace rmt {

double Tridiagonal::norm_est() const {
  double m = 0.0;
  for (double v : diag) m = std::max(m, std::abs(v));
  for (double v : offdiag) m = std::max(m, std::abs(v));
  return m;
}

namespace {

struct Reflector {
  std::size_t k;
  std::vector<cxd> v;  // support on rows k+1 .. n-1
  double tau;
};

cxd unit_phase(const cxd& z) {
  const double a = std::abs(z);
  return a > 0.0 ? z / a : cxd(1.0, 0.0);
}

}  // namespace

Tridiagonal tridiagonalize(const HermitianMatrix& h, bool want_q) {
  const std::size_t n = h.n();
  if (n == 0) throw Error("contract-violation", "empty matrix");
  if (h.hermiticity_error() > 1e-12 * std::max(1.0, h.entries.max_abs()))
    throw Error("contract-violation", "input matrix is not Hermitian");

  ComplexMatrix a = h.entries;  // working copy
  std::vector<Reflector> reflectors;
  if (want_q && n > 2) reflectors.reserve(n - 2);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    // x = a[k+1 .. n-1, k]
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      a(k + 1, k) = 0.0;
      a(k, k + 1) = 0.0;
      continue;
    }
    const cxd alpha = a(k + 1, k);
    const cxd beta = -unit_phase(alpha) * xnorm;

    std::vector<cxd> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    v[0] -= beta;
    double vnorm2 = 0.0;
    for (const cxd& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) {
      a(k + 1, k) = beta;
      a(k, k + 1) = std::conj(beta);
      continue;
    }
    const double tau = 2.0 / vnorm2;

    // p = tau * B v on the trailing block B = a[k+1.., k+1..]
    std::vector<cxd> p(m);
    for (std::size_t i = 0; i < m; ++i) {
      const cxd* row = a.row(k + 1 + i) + (k + 1);
      cxd s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += row[j] * v[j];
      p[i] = tau * s;
    }
    // w = p - (tau/2) (v* p) v ; v* B v is real, so kappa is real
    cxd vp = 0.0;
    for (std::size_t i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
    const cxd kappa = 0.5 * tau * vp;
    std::vector<cxd> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kappa * v[i];

    // B <- B - v w* - w v*
    for (std::size_t i = 0; i < m; ++i) {
      cxd* row = a.row(k + 1 + i) + (k + 1);
      const cxd vi = v[i];
      const cxd wi = w[i];
      for (std::size_t j = 0; j < m; ++j) {
        row[j] -= vi * std::conj(w[j]) + wi * std::conj(v[j]);
      }
    }

    a(k + 1, k) = beta;
    a(k, k + 1) = std::conj(beta);
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }
    if (want_q) reflectors.push_back({k, std::move(v), tau});
  }

  Tridiagonal t;
  t.diag.resize(n);
  t.offdiag.assign(n > 1 ? n - 1 : 0, 0.0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a(i, i).real();

  // Absorb subdiagonal phases: ph[i+1] = phase(t_i) * ph[i] makes
  // conj(ph[i+1]) t_i ph[i] = |t_i|.
  std::vector<cxd> ph(n, cxd(1.0, 0.0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const cxd ti = a(i + 1, i);
    t.offdiag[i] = std::abs(ti);
    ph[i + 1] = unit_phase(ti) * ph[i];
  }

  if (want_q) {
    // Backward accumulation of Q = H_0 H_1 ... then column phase scaling.
    t.q = ComplexMatrix::identity(n);
    for (auto it = reflectors.rbegin(); it != reflectors.rend(); ++it) {
      const std::size_t k = it->k;
      const std::size_t m = it->v.size();
      const double tau = it->tau;
      std::vector<cxd> u(n - k - 1);
      for (std::size_t j = k + 1; j < n; ++j) {
        cxd s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::conj(it->v[i]) * t.q(k + 1 + i, j);
        u[j - k - 1] = s;
      }
      for (std::size_t i = 0; i < m; ++i) {
        const cxd tv = tau * it->v[i];
        cxd* row = t.q.row(k + 1 + i);
        for (std::size_t j = k + 1; j < n; ++j) row[j] -= tv * u[j - k - 1];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (ph[j] == cxd(1.0, 0.0)) continue;
      for (std::size_t i = 0; i < n; ++i) t.q(i, j) *= ph[j];
    }
  }
  return t;
}

std::size_t sturm_count_below(const Tridiagonal& t, double x) {
  const std::size_t n = t.n();
  // Pivot floor keeps the recurrence finite; sqrt(DBL_MIN) is small enough
  // never to move a count at double precision.
  const double tiny = std::sqrt(std::numeric_limits<double>::min());
  const double floor_val = tiny * std::max(1.0, t.norm_est());
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i > 0 ? t.offdiag[i - 1] * t.offdiag[i - 1] : 0.0;
    d = (t.diag[i] - x) - (i > 0 ? e2 / d : 0.0);
    if (std::abs(d) < floor_val) d = d < 0.0 ? -floor_val : floor_val;
    if (d < 0.0) ++count;
  }
  return count;
}

std::size_t count_in_interval(const Tridiagonal& t, double a, double b) {
  if (!(a < b)) throw Error("contract-violation", "interval requires a < b");
  return sturm_count_below(t, b) - sturm_count_below(t, a);
}

std::vector<double> bisection_eigenvalues(const Tridiagonal& t) {
  const std::size_t n = t.n();
  double lo = t.diag[0], hi = t.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? t.offdiag[i - 1] : 0.0) + (i + 1 < n ? t.offdiag[i] : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 1e-8 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> eig(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (sturm_count_below(t, mid) >= k + 1)
        b = mid;
      else
        a = mid;
      if (b - a <= 2.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::max(std::abs(a), std::abs(b))))
        break;
    }
    eig[k] = 0.5 * (a + b);
  }
  return eig;
}

}  // namespace rmt
