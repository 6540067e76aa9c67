// SPDX-License-Identifier: Apache-2.0
#include "specmat/structures.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace specmat {

void BandCoefficients::validate() const {
  if (v_.empty()) raise(Errc::Usage, "band coefficients must contain at least xi_0");
  for (double x : v_)
    if (!std::isfinite(x)) raise(Errc::NonFinite, "band coefficient is not finite");
}

AlternatingBandCoefficients::AlternatingBandCoefficients(BandCoefficients base,
                                                         std::vector<double> hat_odd)
    : base_(std::move(base)), hat_(std::move(hat_odd)) {
  const int expected = (base_.bandwidth() + 1) / 2;
  if (static_cast<int>(hat_.size()) != expected)
    raise(Errc::Usage, "alternating band: expected " + std::to_string(expected) +
                           " hat coefficients for bandwidth " + std::to_string(base_.bandwidth()));
  for (double x : hat_)
    if (!std::isfinite(x)) raise(Errc::NonFinite, "hat coefficient is not finite");
}

std::optional<double> AlternatingBandCoefficients::common_ratio(double rel_tol) const {
  std::optional<double> ratio;
  for (std::size_t i = 0; i < hat_.size(); ++i) {
    const double a = base_.coeff(static_cast<int>(2 * i + 1));
    const double h = hat_[i];
    if (a == 0.0) {
      if (h != 0.0) return std::nullopt;
      continue;  // 0/0 pair constrains nothing
    }
    const double r = h / a;
    if (!ratio) {
      ratio = r;
    } else if (std::abs(r - *ratio) > rel_tol * std::max(std::abs(r), std::abs(*ratio))) {
      return std::nullopt;
    }
  }
  return ratio ? ratio : std::optional<double>(1.0);
}

DenseMatrix build_toeplitz(const BandCoefficients& alpha, int n) {
  const int m = alpha.bandwidth();
  if (m > n - 1)
    raise(Errc::BandTooWide, "toeplitz: bandwidth m=" + std::to_string(m) +
                                 " exceeds n-1=" + std::to_string(n - 1));
  DenseMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - m); j <= std::min(n - 1, i + m); ++j)
      t(i, j) = alpha[std::abs(i - j)];
  return t;
}

DenseMatrix build_hankel(HankelKind kind, const BandCoefficients& alpha, int n,
                         MixedCornerSource source) {
  const int m = alpha.bandwidth();
  const int max_m = (kind == HankelKind::CornerSet1) ? n : n - 1;
  if (m < 1 || m > max_m)
    raise(Errc::BandTooWide, "hankel: bandwidth m=" + std::to_string(m) +
                                 " outside 1.." + std::to_string(max_m));
  DenseMatrix h(n);
  // upper-left corner triangle (1-based ranges: j = 1..m, k = 1..m-j+1)
  const double upper_sign = (kind == HankelKind::CornerSet1) ? 1.0 : -1.0;
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m - j + 1; ++k) h(j - 1, k - 1) = upper_sign * alpha[j + k - 1];

  if (kind == HankelKind::CornerSet1) {
    for (int j = 1; j <= m - 1; ++j)
      for (int k = 1; k <= m - j; ++k) h(n - j, n - k) = alpha[j + k];
  } else if (source == MixedCornerSource::Displayed) {
    // full lower-right triangle mirroring the upper-left one, positive sign
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m - j + 1; ++k) h(n - j, n - k) = alpha[j + k - 1];
  } else {
    // shifted-index reading, kept only so it can be compared against the
    // displayed form
    for (int j = 1; j <= m - 1; ++j)
      for (int k = 1; k <= m - j; ++k) h(n - j, n - k) = alpha.coeff(j + k + 1);
  }
  return h;
}

DenseMatrix antitranspose(const DenseMatrix& M) {
  const int n = M.size();
  DenseMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = M(n - 1 - j, n - 1 - i);
  return r;
}

namespace {

void require_even(int n, const char* what) {
  if (n < 2) raise(Errc::DimensionTooSmall, std::string(what) + ": n must be at least 2");
  if (n % 2 != 0)
    raise(Errc::OddDimension, std::string(what) + ": n must be even (got " + std::to_string(n) + ")");
}

}  // namespace

DenseMatrix build_alternating_tridiagonal(const std::array<double, 3>& a, int n) {
  require_even(n, "alternating tridiagonal");
  return build_alternating_tridiagonal_rows({a[0], a[1], a[2], a[1]}, n);
}

DenseMatrix build_alternating_tridiagonal_rows(const std::array<double, 4>& a, int n) {
  require_even(n, "alternating tridiagonal");
  DenseMatrix g(n);
  for (int i = 0; i < n; ++i) {
    const bool odd_row = (i % 2 == 0);  // 1-based row parity
    const double diag = odd_row ? a[0] : a[2];
    const double off = odd_row ? a[1] : a[3];
    g(i, i) = diag;
    if (i > 0) g(i, i - 1) = off;
    if (i + 1 < n) g(i, i + 1) = off;
  }
  return g;
}

DenseMatrix build_alternating_pentadiagonal(const std::array<double, 4>& a, int n) {
  if (n < 4) raise(Errc::DimensionTooSmall, "alternating pentadiagonal: n must be at least 4");
  const BandCoefficients odd_rows{a[0], a[1], a[2]};
  const BandCoefficients even_rows{a[0], a[3], a[2]};
  return fold_reflection(odd_rows, even_rows, AnsatzFamily::dirichlet(), n);
}

DenseMatrix build_alternating_banded(const AlternatingBandCoefficients& coeffs, int n) {
  if (n < 4) raise(Errc::DimensionTooSmall, "alternating banded: n must be at least 4");
  const int m = coeffs.bandwidth();
  if (m < 2) raise(Errc::Usage, "alternating banded: bandwidth must be at least 2");
  if (m > n - 2)
    raise(Errc::BandTooWide, "alternating banded: bandwidth m=" + std::to_string(m) +
                                 " exceeds n-2=" + std::to_string(n - 2));
  std::vector<double> odd(static_cast<std::size_t>(m) + 1), even(static_cast<std::size_t>(m) + 1);
  for (int l = 0; l <= m; ++l) {
    odd[static_cast<std::size_t>(l)] = coeffs.odd_row_coeff(l);
    even[static_cast<std::size_t>(l)] = coeffs.even_row_coeff(l);
  }
  return fold_reflection(BandCoefficients(std::move(odd)), BandCoefficients(std::move(even)),
                         AnsatzFamily::dirichlet(), n);
}

DenseMatrix fold_reflection(const BandCoefficients& odd_rows, const BandCoefficients& even_rows,
                            const AnsatzFamily& ansatz, int n) {
  const int m = std::max(odd_rows.bandwidth(), even_rows.bandwidth());
  if (m > n - 1)
    raise(Errc::BandTooWide, "fold_reflection: stencil bandwidth m=" + std::to_string(m) +
                                 " exceeds n-1=" + std::to_string(n - 1));
  const FoldRule fr = fold_rule(ansatz, n);
  DenseMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    const BandCoefficients& st = (i % 2 == 1) ? odd_rows : even_rows;
    const int w = st.bandwidth();
    for (int d = -w; d <= w; ++d) {
      const double c = st[std::abs(d)];
      std::int64_t k2 = 2LL * (i + d);
      int sign = 1;
      bool dropped = false;
      for (int iter = 0; k2 < 2 || k2 > 2LL * n; ++iter) {
        if (iter > 64)
          raise(Errc::UnsupportedAnsatz, "fold_reflection: reflection does not converge");
        if (k2 < 2) {
          if (k2 == fr.left_pos2) {
            if (fr.left_sign < 0) {
              dropped = true;  // coefficient lands on a zero of the ansatz
              break;
            }
            raise(Errc::UnsupportedAnsatz,
                  "fold_reflection: stencil hits an integer mirror point");
          }
          k2 = 2 * fr.left_pos2 - k2;
          sign *= fr.left_sign;
        } else {
          if (k2 == fr.right_pos2) {
            if (fr.right_sign < 0) {
              dropped = true;
              break;
            }
            raise(Errc::UnsupportedAnsatz,
                  "fold_reflection: stencil hits an integer mirror point");
          }
          k2 = 2 * fr.right_pos2 - k2;
          sign *= fr.right_sign;
        }
      }
      if (dropped) continue;
      a(i - 1, static_cast<int>(k2 / 2) - 1) += sign * c;
    }
  }
  return a;
}

DenseMatrix fold_reflection(const BandCoefficients& stencil, const AnsatzFamily& ansatz, int n) {
  return fold_reflection(stencil, stencil, ansatz, n);
}

}  // namespace specmat
