// SPDX-License-Identifier: Apache-2.0
#include "specmat/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace specmat {

namespace {

constexpr double kHardZero = 1e-300;
constexpr double kWarnRel = 1e-12;

// cos(pi * num / den) with the rational formed first, so large-index
// angles are not degraded by a rounded h.
double cos_frac(std::int64_t num, std::int64_t den) {
  return std::cos(std::numbers::pi * (static_cast<double>(num) / static_cast<double>(den)));
}

double sin_frac(std::int64_t num, std::int64_t den) {
  return std::sin(std::numbers::pi * (static_cast<double>(num) / static_cast<double>(den)));
}

void apply_normalization(Spectrum& s) {
  if (s.normalization == Normalization::RawC1) return;
  const int n = s.n;
  for (int j = 0; j < n; ++j) {
    double sq = 0.0;
    for (int k = 0; k < n; ++k) sq += s.eigenvectors(k, j) * s.eigenvectors(k, j);
    const double nrm = std::sqrt(sq);
    if (nrm > 0.0)
      for (int k = 0; k < n; ++k) s.eigenvectors(k, j) /= nrm;
  }
}

BandCoefficients extend_to(const BandCoefficients& b, int m, const char* which) {
  if (b.bandwidth() > m)
    raise(Errc::Usage, std::string(which) + " has " + std::to_string(b.size()) +
                           " values but bandwidth m=" + std::to_string(m) +
                           " allows at most " + std::to_string(m + 1));
  std::vector<double> v = b.values();
  v.resize(static_cast<std::size_t>(m) + 1, 0.0);
  return BandCoefficients(std::move(v));
}

void check_band_window(SetId set, int n, int m) {
  if (n < 2) raise(Errc::DimensionTooSmall, "set " + set_id_string(set) + ": n must be at least 2");
  if (m < 1) raise(Errc::Usage, "set " + set_id_string(set) + ": m must be at least 1");
  if (m > n - 1)
    raise(Errc::BandTooWide, "set " + set_id_string(set) + ": m=" + std::to_string(m) +
                                 " exceeds n-1=" + std::to_string(n - 1));
}

// Generators for the three Toeplitz-plus-Hankel families. The eigenvalue
// is a ratio of cosine polynomials evaluated at set-specific angles; the
// eigenvector is the family ansatz with C = 1.
Spectrum ratio_family_spectrum(SetId set, const BandCoefficients& alpha,
                               const BandCoefficients& beta, int n, int m,
                               FormulaVariant variant, const AnsatzFamily& ansatz,
                               Normalization norm) {
  check_band_window(set, n, m);
  Spectrum s;
  s.set_id = set;
  s.variant = variant;
  s.n = n;
  s.m = m;
  s.h = ansatz.h(n);
  s.ansatz = ansatz;
  s.normalization = norm;
  s.eigenvalues.resize(static_cast<std::size_t>(n));
  s.eigenvectors = DenseMatrix(n);

  double beta_scale = std::abs(beta.coeff(0));
  for (int l = 1; l <= m; ++l) beta_scale += 2.0 * std::abs(beta.coeff(l));

  // cosine argument for term l at index j, as (num, den) of a fraction of pi
  auto angle_num = [&](int l, int j) -> std::int64_t {
    if (set == SetId::Set2Mixed && variant == FormulaVariant::Rederived)
      return static_cast<std::int64_t>(l) * (2LL * j - 1);
    return 2LL * l * j;
  };
  const std::int64_t angle_den = (set == SetId::Set2Mixed) ? 2LL * n : 2LL * n + 1;

  for (int j = 1; j <= n; ++j) {
    double num = alpha.coeff(0);
    double den = beta.coeff(0);
    for (int l = 1; l <= m; ++l) {
      const double c = cos_frac(angle_num(l, j), angle_den);
      num += 2.0 * alpha.coeff(l) * c;
      den += 2.0 * beta.coeff(l) * c;
    }
    if (std::abs(den) <= kHardZero)
      raise(Errc::ZeroDenominator, "set " + set_id_string(set) +
                                       ": eigenvalue denominator vanishes at j=" + std::to_string(j));
    if (std::abs(den) <= kWarnRel * beta_scale) s.warn_denominator_js.push_back(j);
    s.eigenvalues[static_cast<std::size_t>(j - 1)] = num / den;
    for (int k = 1; k <= n; ++k) s.eigenvectors(k - 1, j - 1) = ansatz.eigenvector_entry(j, k, n);
  }
  apply_normalization(s);
  return s;
}

// Shared core of sets 3 and 4: per-j quadratic pencils from the even-row
// elimination, odd eigenvector entries on the half-shifted sine grid and
// even entries filled by the recurrence
//   x_{2k} = factor(lambda) * (x_{2k-1} + x_{2k+1}),  x_{n+1} = 0.
Spectrum paired_family_spectrum(SetId set, int n, FormulaVariant variant, double beta0,
                                double beta2, double alpha2, double numerator_coupling,
                                const std::vector<QuadraticPencil>& pencils, Normalization norm) {
  Spectrum s;
  s.set_id = set;
  s.variant = variant;
  s.n = n;
  const int m = n / 2;
  s.m = m;
  s.h = 2.0 / (n + 1);
  s.ansatz = {GridRule::OddHalf, false, true, false};  // odd-entry grid, h = 2/(n+1)
  s.normalization = norm;
  s.eigenvalues.resize(static_cast<std::size_t>(n));
  s.eigenvectors = DenseMatrix(n);

  if (beta0 * beta2 == 0.0)
    raise(Errc::ZeroCoefficient, "set " + set_id_string(set) + ": beta0*beta2 must be nonzero");

  for (int j = 1; j <= m; ++j) {
    const QuadraticRoots roots = solve_quadratic(pencils[static_cast<std::size_t>(j - 1)]);
    const double pair_lambda[2] = {roots.lo, roots.hi};
    for (int which = 0; which < 2; ++which) {
      const int col = 2 * (j - 1) + which;  // eigenpair index 2j-1, 2j
      const double lambda = pair_lambda[which];
      s.eigenvalues[static_cast<std::size_t>(col)] = lambda;

      const double denom = beta2 * lambda - alpha2;
      if (std::abs(denom) <= kHardZero)
        raise(Errc::DegenerateEigenvector,
              "set " + set_id_string(set) + ": even entries undefined (beta2*lambda = alpha2) at j=" +
                  std::to_string(col + 1));
      if (std::abs(denom) <= kWarnRel * (std::abs(beta2 * lambda) + std::abs(alpha2)))
        s.warn_denominator_js.push_back(col + 1);
      const double factor = numerator_coupling / denom;

      for (int k = 1; k <= m; ++k) {
        const double yk = sin_frac(static_cast<std::int64_t>(j) * (2 * k - 1), n + 1);
        const double ynext = (k == m) ? 0.0 : sin_frac(static_cast<std::int64_t>(j) * (2 * k + 1), n + 1);
        s.eigenvectors(2 * k - 2, col) = yk;
        s.eigenvectors(2 * k - 1, col) = factor * (yk + ynext);
      }
    }
  }
  apply_normalization(s);
  return s;
}

// Sets 5 and 6 share the parity-amplitude ansatz x_k = (a or b) sin(j pi k h).
Spectrum parity_family_spectrum(SetId set, int n, int m, const std::vector<double>& odd_coupling,
                                const std::vector<double>& even_coeff, double alpha0, double b,
                                Normalization norm) {
  Spectrum s;
  s.set_id = set;
  s.variant = FormulaVariant::Published;
  s.n = n;
  s.m = m;
  s.h = 1.0 / (n + 1);
  s.ansatz = AnsatzFamily::dirichlet();
  s.normalization = norm;
  s.parity_amplitudes = std::make_pair(1.0, b);
  s.eigenvalues.resize(static_cast<std::size_t>(n));
  s.eigenvectors = DenseMatrix(n);

  for (int j = 1; j <= n; ++j) {
    double lambda = alpha0;
    for (std::size_t i = 0; i < odd_coupling.size(); ++i) {
      const int l = static_cast<int>(2 * i + 1);
      lambda += 2.0 * odd_coupling[i] * cos_frac(static_cast<std::int64_t>(l) * j, n + 1);
    }
    for (std::size_t i = 0; i < even_coeff.size(); ++i) {
      const int l = static_cast<int>(2 * i + 2);
      lambda += 2.0 * even_coeff[i] * cos_frac(static_cast<std::int64_t>(l) * j, n + 1);
    }
    s.eigenvalues[static_cast<std::size_t>(j - 1)] = lambda;
    for (int k = 1; k <= n; ++k) {
      const double amp = (k % 2 == 1) ? 1.0 : b;
      s.eigenvectors(k - 1, j - 1) = amp * sin_frac(static_cast<std::int64_t>(j) * k, n + 1);
    }
  }
  apply_normalization(s);
  return s;
}

}  // namespace

std::string set_id_string(SetId s) {
  switch (s) {
    case SetId::Set1: return "1";
    case SetId::Set2: return "2";
    case SetId::Set2Mixed: return "2m";
    case SetId::Set3: return "3";
    case SetId::Set4: return "4";
    case SetId::Set5: return "5";
    case SetId::Set6: return "6";
  }
  return "?";
}

SetId set_id_from_string(const std::string& s) {
  if (s == "1") return SetId::Set1;
  if (s == "2") return SetId::Set2;
  if (s == "2m") return SetId::Set2Mixed;
  if (s == "3") return SetId::Set3;
  if (s == "4") return SetId::Set4;
  if (s == "5") return SetId::Set5;
  if (s == "6") return SetId::Set6;
  raise(Errc::Usage, "unknown set id '" + s + "' (expected 1, 2, 2m, 3, 4, 5 or 6)");
}

std::string variant_string(FormulaVariant v) {
  return v == FormulaVariant::Published ? "published" : "rederived";
}

FormulaVariant variant_from_string(const std::string& s) {
  if (s == "published") return FormulaVariant::Published;
  if (s == "rederived") return FormulaVariant::Rederived;
  raise(Errc::Usage, "unknown variant '" + s + "' (expected published or rederived)");
}

QuadraticRoots solve_quadratic(const QuadraticPencil& p) {
  if (p.a2 == 0.0) raise(Errc::ZeroCoefficient, "quadratic pencil: leading coefficient is zero");
  double disc = p.a1 * p.a1 - 4.0 * p.a2 * p.a0;
  const double scale = std::max(p.a1 * p.a1, std::abs(4.0 * p.a2 * p.a0));
  if (disc < -1e-12 * scale)
    raise(Errc::NegativeDiscriminant, "quadratic pencil: complex root pair (discriminant " +
                                          std::to_string(disc) + ")");
  if (disc < 0.0) disc = 0.0;
  const double sign_a1 = (p.a1 >= 0.0) ? 1.0 : -1.0;
  const double q = -0.5 * (p.a1 + sign_a1 * std::sqrt(disc));
  double r1, r2;
  if (q == 0.0) {
    r1 = r2 = -p.a1 / (2.0 * p.a2);  // double root at the vertex
  } else {
    r1 = q / p.a2;
    r2 = p.a0 / q;
  }
  return {std::min(r1, r2), std::max(r1, r2)};
}

Spectrum eigs_set1(const BandCoefficients& alpha, const BandCoefficients& beta, int n, int m,
                   Normalization norm) {
  return ratio_family_spectrum(SetId::Set1, alpha, beta, n, m, FormulaVariant::Published,
                               AnsatzFamily::half_shifted(), norm);
}

Spectrum eigs_set2(const BandCoefficients& alpha, const BandCoefficients& beta, int n, int m,
                   Normalization norm) {
  return ratio_family_spectrum(SetId::Set2, alpha, beta, n, m, FormulaVariant::Published,
                               AnsatzFamily::half_shifted_reflected(), norm);
}

Spectrum eigs_set2_mixed(const BandCoefficients& alpha, const BandCoefficients& beta, int n, int m,
                         FormulaVariant variant, Normalization norm) {
  return ratio_family_spectrum(SetId::Set2Mixed, alpha, beta, n, m, variant,
                               AnsatzFamily::mixed(), norm);
}

QuadraticPencil pair_pencil_set3(const std::array<double, 3>& alpha,
                                 const std::array<double, 3>& beta, int n, int j) {
  const double b = alpha[1] - beta[1];
  const double s = alpha[0] * alpha[2] - 2.0 * b * b - 2.0 * b * b * cos_frac(2LL * j, n + 1);
  return {beta[0] * beta[2], -(alpha[0] * beta[2] + alpha[2] * beta[0]), s};
}

QuadraticPencil pair_pencil_set4(const std::array<double, 4>& alpha,
                                 const std::array<double, 4>& beta, int n, int j,
                                 FormulaVariant variant) {
  const double b1 = alpha[1] - beta[1];
  const double b3 = alpha[3] - beta[3];
  const double constant = (variant == FormulaVariant::Published) ? 2.0 * b1 * b1 : 2.0 * b1 * b3;
  const double s = alpha[0] * alpha[2] - constant - 2.0 * b1 * b3 * cos_frac(2LL * j, n + 1);
  return {beta[0] * beta[2], -(alpha[0] * beta[2] + alpha[2] * beta[0]), s};
}

Spectrum eigs_set3(const std::array<double, 3>& alpha, const std::array<double, 3>& beta, int n,
                   Normalization norm) {
  if (n < 2) raise(Errc::DimensionTooSmall, "set 3: n must be at least 2");
  if (n % 2 != 0) raise(Errc::OddDimension, "set 3: n must be even");
  std::vector<QuadraticPencil> pencils;
  pencils.reserve(static_cast<std::size_t>(n / 2));
  for (int j = 1; j <= n / 2; ++j) pencils.push_back(pair_pencil_set3(alpha, beta, n, j));
  return paired_family_spectrum(SetId::Set3, n, FormulaVariant::Published, beta[0], beta[2],
                                alpha[2], alpha[1] - beta[1], pencils, norm);
}

Spectrum eigs_set4(const std::array<double, 4>& alpha, const std::array<double, 4>& beta, int n,
                   FormulaVariant variant, Normalization norm) {
  if (n < 2) raise(Errc::DimensionTooSmall, "set 4: n must be at least 2");
  if (n % 2 != 0) raise(Errc::OddDimension, "set 4: n must be even");
  std::vector<QuadraticPencil> pencils;
  pencils.reserve(static_cast<std::size_t>(n / 2));
  for (int j = 1; j <= n / 2; ++j) pencils.push_back(pair_pencil_set4(alpha, beta, n, j, variant));
  return paired_family_spectrum(SetId::Set4, n, variant, beta[0], beta[2], alpha[2],
                                alpha[3] - beta[3], pencils, norm);
}

Spectrum eigs_set5(const std::array<double, 4>& alpha, int n, Normalization norm) {
  if (n < 4) raise(Errc::DimensionTooSmall, "set 5: n must be at least 4");
  if (alpha[1] * alpha[3] <= 0.0)
    raise(Errc::SignCondition, "set 5: requires alpha1*alpha3 > 0 (got alpha1=" +
                                   std::to_string(alpha[1]) + ", alpha3=" +
                                   std::to_string(alpha[3]) + ")");
  const double b = std::sqrt(alpha[3] / alpha[1]);
  // coupling alpha1 * (b/a) = sign(alpha1) * sqrt(alpha1*alpha3); the sign
  // keeps each eigenvalue paired with its own eigenvector.
  const double coupling = alpha[1] * b;
  Spectrum s = parity_family_spectrum(SetId::Set5, n, 2, {coupling}, {alpha[2]}, alpha[0], b, norm);
  s.set_id = SetId::Set5;
  return s;
}

Spectrum eigs_set6(const AlternatingBandCoefficients& coeffs, int n, Normalization norm) {
  if (n < 4) raise(Errc::DimensionTooSmall, "set 6: n must be at least 4");
  const int m = coeffs.bandwidth();
  if (m < 2) raise(Errc::Usage, "set 6: bandwidth must be at least 2");
  if (m > n - 2)
    raise(Errc::BandTooWide,
          "set 6: m=" + std::to_string(m) + " exceeds n-2=" + std::to_string(n - 2));
  const auto ratio = coeffs.common_ratio(1e-12);
  if (!ratio)
    raise(Errc::RatioConstraintViolated,
          "set 6: hat/base ratios of odd coefficients must agree to 1e-12");
  if (*ratio <= 0.0)
    raise(Errc::SignCondition,
          "set 6: requires a positive hat/base ratio (got " + std::to_string(*ratio) + ")");
  const double b = std::sqrt(*ratio);
  std::vector<double> odd_coupling, even_coeff;
  for (int l = 1; l <= m; l += 2) odd_coupling.push_back(coeffs.base().coeff(l) * b);
  for (int l = 2; l <= m; l += 2) even_coeff.push_back(coeffs.base().coeff(l));
  Spectrum s = parity_family_spectrum(SetId::Set6, n, m, odd_coupling, even_coeff,
                                      coeffs.base().coeff(0), b, norm);
  s.set_id = SetId::Set6;
  return s;
}

namespace {

std::array<double, 3> as_triplet(const BandCoefficients& b, SetId set) {
  if (b.size() != 3)
    raise(Errc::Usage, "set " + set_id_string(set) + ": expected exactly 3 coefficients, got " +
                           std::to_string(b.size()));
  return {b[0], b[1], b[2]};
}

std::array<double, 4> as_quad(const BandCoefficients& b, SetId set) {
  if (b.size() != 4)
    raise(Errc::Usage, "set " + set_id_string(set) + ": expected exactly 4 coefficients, got " +
                           std::to_string(b.size()));
  return {b[0], b[1], b[2], b[3]};
}

const BandCoefficients& require_beta(const FamilyParams& p) {
  if (!p.beta)
    raise(Errc::Usage, "set " + set_id_string(p.set) + ": beta is required (generalized problem)");
  return *p.beta;
}

void forbid_beta(const FamilyParams& p) {
  if (p.beta)
    raise(Errc::Usage, "set " + set_id_string(p.set) + ": beta is not accepted (standard problem)");
}

const AlternatingBandCoefficients& require_alt(const FamilyParams& p) {
  if (!p.alt) raise(Errc::Usage, "set 6: alternating coefficients (base + hat) are required");
  return *p.alt;
}

}  // namespace

FamilyMatrices build_family(const FamilyParams& p) {
  switch (p.set) {
    case SetId::Set1:
    case SetId::Set2:
    case SetId::Set2Mixed: {
      check_band_window(p.set, p.n, p.m);
      const BandCoefficients a = extend_to(p.alpha, p.m, "alpha");
      const BandCoefficients b = extend_to(require_beta(p), p.m, "beta");
      auto assemble = [&](const BandCoefficients& xi) {
        const DenseMatrix t = build_toeplitz(xi, p.n);
        if (p.set == SetId::Set2Mixed) {
          const DenseMatrix h = build_hankel(HankelKind::MixedDirichletNeumann, xi, p.n);
          DenseMatrix r(p.n);
          for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) r(i, j) = t(i, j) + h(i, j);
          return r;
        }
        DenseMatrix h = build_hankel(HankelKind::CornerSet1, xi, p.n);
        if (p.set == SetId::Set2) h = antitranspose(h);
        DenseMatrix r(p.n);
        for (int i = 0; i < p.n; ++i)
          for (int j = 0; j < p.n; ++j) r(i, j) = t(i, j) - h(i, j);
        return r;
      };
      return {assemble(a), assemble(b)};
    }
    case SetId::Set3: {
      const auto a = as_triplet(p.alpha, p.set);
      const auto b = as_triplet(require_beta(p), p.set);
      return {build_alternating_tridiagonal(a, p.n), build_alternating_tridiagonal(b, p.n)};
    }
    case SetId::Set4: {
      const auto a = as_quad(p.alpha, p.set);
      const auto b = as_quad(require_beta(p), p.set);
      return {build_alternating_tridiagonal_rows(a, p.n),
              build_alternating_tridiagonal_rows(b, p.n)};
    }
    case SetId::Set5: {
      forbid_beta(p);
      return {build_alternating_pentadiagonal(as_quad(p.alpha, p.set), p.n), std::nullopt};
    }
    case SetId::Set6: {
      forbid_beta(p);
      return {build_alternating_banded(require_alt(p), p.n), std::nullopt};
    }
  }
  raise(Errc::Usage, "unknown set");
}

Spectrum family_spectrum(const FamilyParams& p, Normalization norm) {
  switch (p.set) {
    case SetId::Set1: return eigs_set1(p.alpha, require_beta(p), p.n, p.m, norm);
    case SetId::Set2: return eigs_set2(p.alpha, require_beta(p), p.n, p.m, norm);
    case SetId::Set2Mixed:
      return eigs_set2_mixed(p.alpha, require_beta(p), p.n, p.m, p.variant, norm);
    case SetId::Set3:
      return eigs_set3(as_triplet(p.alpha, p.set), as_triplet(require_beta(p), p.set), p.n, norm);
    case SetId::Set4:
      return eigs_set4(as_quad(p.alpha, p.set), as_quad(require_beta(p), p.set), p.n, p.variant,
                       norm);
    case SetId::Set5:
      forbid_beta(p);
      return eigs_set5(as_quad(p.alpha, p.set), p.n, norm);
    case SetId::Set6:
      forbid_beta(p);
      return eigs_set6(require_alt(p), p.n, norm);
  }
  raise(Errc::Usage, "unknown set");
}

int family_m(const FamilyParams& p) {
  switch (p.set) {
    case SetId::Set1:
    case SetId::Set2:
    case SetId::Set2Mixed: return p.m;
    case SetId::Set3:
    case SetId::Set4: return p.n / 2;
    case SetId::Set5: return 2;
    case SetId::Set6: return p.alt ? p.alt->bandwidth() : p.m;
  }
  return p.m;
}

}  // namespace specmat
