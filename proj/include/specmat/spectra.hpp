// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specmat/ansatz.hpp"
#include "specmat/dense.hpp"
#include "specmat/structures.hpp"

namespace specmat {

// The certified matrix families, by the ids used throughout the CLI and
// the reports.
enum class SetId { Set1, Set2, Set2Mixed, Set3, Set4, Set5, Set6 };

std::string set_id_string(SetId s);
SetId set_id_from_string(const std::string& s);

// Sets 4 and 2-mixed ship with two eigenvalue formulas: the one as
// published and a re-derivation that is consistent with the elimination
// proof. The adjudicator decides empirically which one certifies.
enum class FormulaVariant { Published, Rederived };

std::string variant_string(FormulaVariant v);
FormulaVariant variant_from_string(const std::string& s);

enum class Normalization { RawC1, UnitTwoNorm };

// a2*lambda^2 + a1*lambda + a0 obtained from the even/odd-row elimination
// of the alternating tridiagonal families.
struct QuadraticPencil {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
};

struct QuadraticRoots {
  double lo = 0.0;
  double hi = 0.0;
};

// Both real roots via the cancellation-free form
// q = -(a1 + sign(a1) sqrt(disc))/2, roots q/a2 and a0/q, sorted ascending.
// Throws NegativeDiscriminant (complex regimes are out of scope) and
// ZeroCoefficient when a2 = 0.
QuadraticRoots solve_quadratic(const QuadraticPencil& p);

// Closed-form eigendecomposition of one family instance. Eigenvalues are
// indexed by j exactly as the formulas order them; no reordering.
struct Spectrum {
  SetId set_id = SetId::Set1;
  FormulaVariant variant = FormulaVariant::Published;
  int n = 0;
  int m = 0;
  double h = 0.0;
  AnsatzFamily ansatz;
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;  // column j-1 is x_j
  std::optional<std::pair<double, double>> parity_amplitudes;  // (a, b) for sets 5/6
  Normalization normalization = Normalization::RawC1;
  // 1-based j values whose denominator passed the hard-zero gate but fell
  // below 1e-12 * scale.
  std::vector<int> warn_denominator_js;
};

Spectrum eigs_set1(const BandCoefficients& alpha, const BandCoefficients& beta, int n, int m,
                   Normalization norm = Normalization::RawC1);

Spectrum eigs_set2(const BandCoefficients& alpha, const BandCoefficients& beta, int n, int m,
                   Normalization norm = Normalization::RawC1);

Spectrum eigs_set2_mixed(const BandCoefficients& alpha, const BandCoefficients& beta, int n, int m,
                         FormulaVariant variant, Normalization norm = Normalization::RawC1);

Spectrum eigs_set3(const std::array<double, 3>& alpha, const std::array<double, 3>& beta, int n,
                   Normalization norm = Normalization::RawC1);

Spectrum eigs_set4(const std::array<double, 4>& alpha, const std::array<double, 4>& beta, int n,
                   FormulaVariant variant, Normalization norm = Normalization::RawC1);

Spectrum eigs_set5(const std::array<double, 4>& alpha, int n,
                   Normalization norm = Normalization::RawC1);

Spectrum eigs_set6(const AlternatingBandCoefficients& coeffs, int n,
                   Normalization norm = Normalization::RawC1);

// The per-j quadratic whose roots are (lambda_{2j-1}, lambda_{2j}),
// exposed so the pencils can be inspected without building eigenvectors.
QuadraticPencil pair_pencil_set3(const std::array<double, 3>& alpha,
                                 const std::array<double, 3>& beta, int n, int j);
QuadraticPencil pair_pencil_set4(const std::array<double, 4>& alpha,
                                 const std::array<double, 4>& beta, int n, int j,
                                 FormulaVariant variant);

// One bag of parameters describing a family instance; the common currency
// between the CLI, the sweep runner and the verification suite.
struct FamilyParams {
  SetId set = SetId::Set1;
  int n = 0;
  int m = 0;  // band m for sets 1/2/2m (and implied for 6); ignored for 3/4/5
  BandCoefficients alpha;
  std::optional<BandCoefficients> beta;
  std::optional<AlternatingBandCoefficients> alt;  // set 6 only
  FormulaVariant variant = FormulaVariant::Rederived;
};

struct FamilyMatrices {
  DenseMatrix A;
  std::optional<DenseMatrix> B;
};

FamilyMatrices build_family(const FamilyParams& p);
Spectrum family_spectrum(const FamilyParams& p, Normalization norm = Normalization::RawC1);

// Reported band parameter of a family instance (n/2 for the tridiagonal
// pairs, 2 for the pentadiagonal).
int family_m(const FamilyParams& p);

}  // namespace specmat
