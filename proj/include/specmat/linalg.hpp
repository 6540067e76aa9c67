// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "specmat/dense.hpp"

namespace specmat {

// Combined LU storage from partial-pivoting Gaussian elimination:
// P*M = L*U with unit-lower L below the diagonal and U on/above it.
// perm[i] is the original row now sitting at position i; parity is the
// sign of that permutation. A pivot that is exactly zero marks the
// factorization singular; near-singularity is judged by callers from
// the pivot magnitudes themselves.
struct LUFactors {
  int n = 0;
  std::vector<double> lu;   // row-major combined storage
  std::vector<int> perm;
  int parity = 1;
  bool singular = false;

  double pivot(int k) const { return lu[static_cast<std::size_t>(k) * n + k]; }
};

// Determinant as (sign, log|det|): det(A - lambda*B) magnitudes span
// hundreds of orders at large n, so the verification side consumes this
// form. sign is 0 for a singular factorization (log_abs = -inf).
struct SignLogDet {
  int sign = 0;
  double log_abs = 0.0;
};

Vector matvec(const DenseMatrix& M, const Vector& v);

// Partial (row) pivoting by maximum absolute value, ties broken by the
// lowest row index. Never throws: singularity is reported via the flag.
LUFactors lu_factor(const DenseMatrix& M);

double determinant(const LUFactors& f);
SignLogDet sign_log_determinant(const LUFactors& f);

// Throws SingularMatrix when f.singular.
Vector solve(const LUFactors& f, const Vector& b);

// Complete-pivoting Gaussian elimination; counts pivots with
// |pivot| > rel_tol * (largest initial column scale).
int numerical_rank(const DenseMatrix& M, double rel_tol);

}  // namespace specmat
