// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "specmat/errors.hpp"

namespace specmat {

// Grid spacing rule for the trigonometric eigenvector families.
enum class GridRule {
  OverHalf,   // h = 1/(n + 1/2)
  Unit,       // h = 1/n
  Dirichlet,  // h = 1/(n + 1)
  OddHalf,    // h = 2/(n + 1)
};

// One trigonometric eigenvector family
//   x_{j,k} = sin((j - rs) * pi * (k' - cs) * h),  k' = reflected ? n-k+1 : k,
// with rs, cs in {0, 1/2}. The family determines where (as a function of
// the continuous column index) the sine vanishes for every j (Dirichlet
// point, reflection sign -1) or is mirror-symmetric for every j (Neumann
// point, reflection sign +1). Those points drive the boundary folding of
// the structured builders.
struct AnsatzFamily {
  GridRule grid_rule = GridRule::Dirichlet;
  bool row_half_shift = false;
  bool col_half_shift = false;
  bool reflected = false;

  double h(int n) const {
    switch (grid_rule) {
      case GridRule::OverHalf: return 1.0 / (n + 0.5);
      case GridRule::Unit: return 1.0 / n;
      case GridRule::Dirichlet: return 1.0 / (n + 1);
      case GridRule::OddHalf: return 2.0 / (n + 1);
    }
    return 0.0;
  }

  // sin((j - rs) pi (k' - cs) h) for 1-based j, k. The angle is formed as
  // pi * (integer / integer) so large-n arguments do not lose accuracy to
  // a premature h rounding.
  double eigenvector_entry(int j, int k, int n) const;

  static AnsatzFamily half_shifted() {        // sin(j pi (k-1/2) h), h = 1/(n+1/2)
    return {GridRule::OverHalf, false, true, false};
  }
  static AnsatzFamily half_shifted_reflected() {  // sin(j pi (n-k+1/2) h)
    return {GridRule::OverHalf, false, true, true};
  }
  static AnsatzFamily mixed() {               // sin((j-1/2) pi (k-1/2) h), h = 1/n
    return {GridRule::Unit, true, true, false};
  }
  static AnsatzFamily dirichlet() {           // sin(j pi k h), h = 1/(n+1)
    return {GridRule::Dirichlet, false, false, false};
  }
};

// Reflection data for one boundary of an ansatz at dimension n: the
// lattice position (stored doubled so half-integers stay exact) and the
// fold sign (-1 across a zero of the sine, +1 across a mirror point).
struct FoldRule {
  std::int64_t left_pos2 = 0;
  int left_sign = -1;
  std::int64_t right_pos2 = 0;
  int right_sign = -1;
};

// Throws UnsupportedAnsatz when the family has a zero/mirror point inside
// [1, n] (folding is then ill-defined) or off the half-integer lattice.
FoldRule fold_rule(const AnsatzFamily& ansatz, int n);

}  // namespace specmat
