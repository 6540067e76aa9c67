// SPDX-License-Identifier: Apache-2.0
#include "specmat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace specmat {

Vector matvec(const DenseMatrix& M, const Vector& v) {
  const int n = M.size();
  if (v.size() != n) raise(Errc::Usage, "matvec: dimension mismatch");
  Vector y(n);
  const double* a = M.data().data();
  const double* x = v.data().data();
  for (int i = 0; i < n; ++i) {
    const double* row = a + static_cast<std::size_t>(i) * n;
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += row[k] * x[k];
    y[i] = s;
  }
  return y;
}

LUFactors lu_factor(const DenseMatrix& M) {
  const int n = M.size();
  LUFactors f;
  f.n = n;
  f.lu = M.data();
  f.perm.resize(static_cast<std::size_t>(n));
  std::iota(f.perm.begin(), f.perm.end(), 0);

  auto at = [&](int i, int j) -> double& { return f.lu[static_cast<std::size_t>(i) * n + j]; };

  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::abs(at(i, k));
      if (cand > best) {  // strict: ties keep the lowest row index
        best = cand;
        p = i;
      }
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.parity = -f.parity;
    }
    const double piv = at(k, k);
    if (piv == 0.0) {
      f.singular = true;
      continue;  // column is zero from row k down; nothing to eliminate
    }
    for (int i = k + 1; i < n; ++i) {
      const double m = at(i, k) / piv;
      at(i, k) = m;
      for (int j = k + 1; j < n; ++j) at(i, j) -= m * at(k, j);
    }
  }
  return f;
}

double determinant(const LUFactors& f) {
  if (f.singular) return 0.0;
  double d = static_cast<double>(f.parity);
  for (int k = 0; k < f.n; ++k) d *= f.pivot(k);
  return d;
}

SignLogDet sign_log_determinant(const LUFactors& f) {
  SignLogDet r;
  if (f.singular) {
    r.sign = 0;
    r.log_abs = -std::numeric_limits<double>::infinity();
    return r;
  }
  r.sign = f.parity;
  r.log_abs = 0.0;
  for (int k = 0; k < f.n; ++k) {
    const double p = f.pivot(k);
    if (p < 0.0) r.sign = -r.sign;
    r.log_abs += std::log(std::abs(p));
  }
  return r;
}

Vector solve(const LUFactors& f, const Vector& b) {
  const int n = f.n;
  if (b.size() != n) raise(Errc::Usage, "solve: dimension mismatch");
  if (f.singular) raise(Errc::SingularMatrix, "solve: matrix is singular");

  Vector x(n);
  // forward substitution on P*b with unit-lower L
  for (int i = 0; i < n; ++i) {
    double s = b[f.perm[i]];
    for (int j = 0; j < i; ++j) s -= f.lu[static_cast<std::size_t>(i) * n + j] * x[j];
    x[i] = s;
  }
  // back substitution with U
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) s -= f.lu[static_cast<std::size_t>(i) * n + j] * x[j];
    x[i] = s / f.lu[static_cast<std::size_t>(i) * n + i];
  }
  return x;
}

int numerical_rank(const DenseMatrix& M, double rel_tol) {
  if (rel_tol <= 0.0) raise(Errc::Usage, "numerical_rank: rel_tol must be positive");
  const int n = M.size();
  std::vector<double> w = M.data();
  auto at = [&](int i, int j) -> double& { return w[static_cast<std::size_t>(i) * n + j]; };

  const double scale0 = M.max_abs();
  if (scale0 == 0.0) return 0;
  const double thresh = rel_tol * scale0;

  int rank = 0;
  for (int s = 0; s < n; ++s) {
    int pi = s, pj = s;
    double best = 0.0;
    for (int i = s; i < n; ++i)
      for (int j = s; j < n; ++j) {
        const double cand = std::abs(at(i, j));
        if (cand > best) {
          best = cand;
          pi = i;
          pj = j;
        }
      }
    if (best <= thresh) break;
    if (pi != s)
      for (int j = 0; j < n; ++j) std::swap(at(s, j), at(pi, j));
    if (pj != s)
      for (int i = 0; i < n; ++i) std::swap(at(i, s), at(i, pj));
    ++rank;
    const double piv = at(s, s);
    for (int i = s + 1; i < n; ++i) {
      const double m = at(i, s) / piv;
      for (int j = s; j < n; ++j) at(i, j) -= m * at(s, j);
    }
  }
  return rank;
}

}  // namespace specmat
