// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "specmat/ansatz.hpp"
#include "specmat/dense.hpp"

namespace specmat {

// Band parameter vector (xi_0, ..., xi_m); m is the bandwidth.
class BandCoefficients {
 public:
  BandCoefficients() = default;
  BandCoefficients(std::initializer_list<double> xs) : v_(xs) { validate(); }
  explicit BandCoefficients(std::vector<double> xs) : v_(std::move(xs)) { validate(); }

  int bandwidth() const noexcept { return static_cast<int>(v_.size()) - 1; }
  int size() const noexcept { return static_cast<int>(v_.size()); }
  double operator[](int l) const { return v_[static_cast<std::size_t>(l)]; }
  // Zero-extended lookup: offsets beyond the stored bandwidth are 0.
  double coeff(int l) const { return l < size() ? v_[static_cast<std::size_t>(l)] : 0.0; }
  const std::vector<double>& values() const noexcept { return v_; }

 private:
  void validate() const;
  std::vector<double> v_;
};

// Band coefficients whose odd offsets differ between row parities:
// odd rows carry base (alpha_l) everywhere, even rows carry hat values at
// odd offsets and base values at even offsets.
class AlternatingBandCoefficients {
 public:
  AlternatingBandCoefficients(BandCoefficients base, std::vector<double> hat_odd);

  const BandCoefficients& base() const noexcept { return base_; }
  const std::vector<double>& hat_odd() const noexcept { return hat_; }
  int bandwidth() const noexcept { return base_.bandwidth(); }

  double odd_row_coeff(int l) const { return base_.coeff(l); }
  double even_row_coeff(int l) const {
    if (l % 2 == 0) return base_.coeff(l);
    const int i = (l - 1) / 2;
    return i < static_cast<int>(hat_.size()) ? hat_[static_cast<std::size_t>(i)] : 0.0;
  }

  // Common ratio hat_{2l-1}/alpha_{2l-1} across l, or nullopt when the
  // ratios disagree beyond rel_tol (or a hat is nonzero over a zero base).
  // Pairs that are both zero are unconstrained; all-zero pairs give 1.
  std::optional<double> common_ratio(double rel_tol = 1e-12) const;

 private:
  BandCoefficients base_;
  std::vector<double> hat_;
};

// The two corner Hankel patterns used by the Toeplitz-plus-Hankel families.
enum class HankelKind {
  CornerSet1,             // upper-left triangle alpha_{j+k-1}, lower-right alpha_{j+k}
  MixedDirichletNeumann,  // upper-left -alpha_{j+k-1}, lower-right alpha_{j+k-1}
};

// The MixedDirichletNeumann lower-right corner admits two readings; the
// displayed full-triangle form is the default (it is exactly the Neumann
// fold), the shifted-index clause remains constructible for adjudication.
enum class MixedCornerSource { Displayed, FormulaClause };

// Symmetric banded Toeplitz: T_{j,j+k} = alpha_{|k|} for |k| <= m.
DenseMatrix build_toeplitz(const BandCoefficients& alpha, int n);

DenseMatrix build_hankel(HankelKind kind, const BandCoefficients& alpha, int n,
                         MixedCornerSource source = MixedCornerSource::Displayed);

// Flip along the anti-diagonal: result_{j,k} = M_{n+1-k,n+1-j}.
DenseMatrix antitranspose(const DenseMatrix& M);

// Tridiagonal, diagonal alternating a0 (odd rows) / a2 (even rows),
// constant off-diagonal a1. n must be even.
DenseMatrix build_alternating_tridiagonal(const std::array<double, 3>& a, int n);

// Tridiagonal with fully alternating rows: odd rows (a1, a0, a1),
// even rows (a3, a2, a3). n must be even.
DenseMatrix build_alternating_tridiagonal_rows(const std::array<double, 4>& a, int n);

// Pentadiagonal with alternating rows (a2,a1,a0,a1,a2) / (a2,a3,a0,a3,a2)
// and Dirichlet-folded boundary rows; corners come out as a0 - a2.
DenseMatrix build_alternating_pentadiagonal(const std::array<double, 4>& a, int n);

// General alternating band with Dirichlet-folded boundary rows.
DenseMatrix build_alternating_banded(const AlternatingBandCoefficients& coeffs, int n);

// Applies the per-parity stencils row by row; out-of-range columns are
// reflected back through the ansatz's boundary points, with sign -1
// across a zero of the sine and +1 across a mirror point. A coefficient
// that lands exactly on a zero point is dropped.
DenseMatrix fold_reflection(const BandCoefficients& odd_rows, const BandCoefficients& even_rows,
                            const AnsatzFamily& ansatz, int n);
DenseMatrix fold_reflection(const BandCoefficients& stencil, const AnsatzFamily& ansatz, int n);

}  // namespace specmat
