#include "rmt/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cxd& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double HermitianMatrix::hermiticity_error() const {
  const std::size_t nn = n();
  double err = 0.0;
  for (std::size_t i = 0; i < nn; ++i) {
    err = std::max(err, std::abs(entries(i, i).imag()));
    for (std::size_t j = i + 1; j < nn; ++j) {
      err = std::max(err, std::abs(entries(i, j) - std::conj(entries(j, i))));
    }
  }
  return err;
}

double scale_factor(Scale from, Scale to, std::size_t n) {
  auto exponent = [](Scale s) {
    switch (s) {
      case Scale::W: return -0.5;
      case Scale::A: return 0.5;
      default: return 0.0;
    }
  };
  return std::pow(static_cast<double>(n), exponent(to) - exponent(from));
}

HermitianMatrix HermitianMatrix::rescaled(Scale target) const {
  HermitianMatrix out = *this;
  if (target == scale) return out;
  const double f = scale_factor(scale, target, n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) out.entries(i, j) *= f;
  out.scale = target;
  return out;
}

HermitianMatrix HermitianMatrix::leading_minor() const {
  if (n() == 0) throw Error("contract-violation", "minor of empty matrix");
  HermitianMatrix out(n() - 1);
  out.ensemble_id = ensemble_id;
  out.seed = seed;
  out.scale = scale;
  for (std::size_t i = 0; i + 1 < n(); ++i)
    for (std::size_t j = 0; j + 1 < n(); ++j) out.entries(i, j) = entries(i, j);
  return out;
}

namespace {

struct LuFactor {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
};

LuFactor lu_factor(const ComplexMatrix& a) {
  const std::size_t n = a.n();
  LuFactor f{a, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw Error("resolvent-solve-unstable", "singular pivot in LU");
    if (piv != k) {
      std::swap(f.perm[k], f.perm[piv]);
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
    }
    const cxd pivot = f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cxd m = f.lu(i, k) / pivot;
      f.lu(i, k) = m;
      if (m != cxd(0.0)) {
        const cxd* rk = f.lu.row(k);
        cxd* ri = f.lu.row(i);
        for (std::size_t j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
      }
    }
  }
  return f;
}

std::vector<cxd> lu_apply(const LuFactor& f, const std::vector<cxd>& b) {
  const std::size_t n = f.lu.n();
  std::vector<cxd> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i) {
    cxd s = x[i];
    const cxd* ri = f.lu.row(i);
    for (std::size_t j = 0; j < i; ++j) s -= ri[j] * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cxd s = x[ii];
    const cxd* ri = f.lu.row(ii);
    for (std::size_t j = ii + 1; j < n; ++j) s -= ri[j] * x[j];
    x[ii] = s / ri[ii];
  }
  return x;
}

std::vector<cxd> residual_of(const ComplexMatrix& a, const std::vector<cxd>& x,
                             const std::vector<cxd>& b) {
  const std::size_t n = a.n();
  std::vector<cxd> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    cxd s = b[i];
    const cxd* ri = a.row(i);
    for (std::size_t j = 0; j < n; ++j) s -= ri[j] * x[j];
    r[i] = s;
  }
  return r;
}

double norm2(const std::vector<cxd>& v) {
  double s = 0.0;
  for (const cxd& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

std::vector<cxd> lu_solve(const ComplexMatrix& a, const std::vector<cxd>& b,
                          double* rel_residual) {
  if (a.n() != b.size()) throw Error("contract-violation", "lu_solve size mismatch");
  if (a.n() == 0) {
    if (rel_residual) *rel_residual = 0.0;
    return {};
  }
  LuFactor f = lu_factor(a);
  std::vector<cxd> x = lu_apply(f, b);
  // one refinement step
  std::vector<cxd> r = residual_of(a, x, b);
  std::vector<cxd> d = lu_apply(f, r);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += d[i];
  if (rel_residual) {
    r = residual_of(a, x, b);
    *rel_residual = norm2(r) / std::max(1.0, norm2(b));
  }
  return x;
}

}  // namespace rmt
