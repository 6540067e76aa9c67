// SPDX-License-Identifier: Apache-2.0
#include "specmat/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace specmat {

double AnsatzFamily::eigenvector_entry(int j, int k, int n) const {
  const int kk = reflected ? (n - k + 1) : k;
  const std::int64_t num =
      (2LL * j - (row_half_shift ? 1 : 0)) * (2LL * kk - (col_half_shift ? 1 : 0));
  std::int64_t den = 0;  // 4/h, exact for every grid rule
  switch (grid_rule) {
    case GridRule::OverHalf: den = 4LL * n + 2; break;
    case GridRule::Unit: den = 4LL * n; break;
    case GridRule::Dirichlet: den = 4LL * n + 4; break;
    case GridRule::OddHalf: den = 2LL * (n + 1); break;
  }
  return std::sin(std::numbers::pi * (static_cast<double>(num) / static_cast<double>(den)));
}

FoldRule fold_rule(const AnsatzFamily& ansatz, int n) {
  std::int64_t period2 = 0;  // sine period in half-index units, 2/h
  switch (ansatz.grid_rule) {
    case GridRule::OverHalf: period2 = 2LL * n + 1; break;
    case GridRule::Unit: period2 = 2LL * n; break;
    case GridRule::Dirichlet: period2 = 2LL * n + 2; break;
    case GridRule::OddHalf: period2 = n + 1; break;
  }
  const std::int64_t base2 = ansatz.col_half_shift ? 1 : 0;

  struct Point {
    std::int64_t pos2;
    int sign;
  };
  std::vector<Point> points;
  if (!ansatz.row_half_shift) {
    // sin(j * pi * u / P): zeros wherever u is a multiple of the period,
    // no mirror points shared by every j.
    for (std::int64_t t = -6; t <= 6; ++t) points.push_back({base2 + t * period2, -1});
  } else {
    // sin((j-1/2) * pi * u / P): zeros at even multiples of the period,
    // mirrors at odd multiples.
    for (std::int64_t t = -6; t <= 6; ++t) {
      const int sign = (t % 2 == 0) ? -1 : +1;
      points.push_back({base2 + t * period2, sign});
    }
  }
  if (ansatz.reflected)
    for (auto& p : points) p.pos2 = 2LL * (n + 1) - p.pos2;

  FoldRule fr;
  bool have_left = false, have_right = false;
  for (const auto& p : points) {
    if (p.pos2 >= 2 && p.pos2 <= 2LL * n)
      raise(Errc::UnsupportedAnsatz,
            "fold_reflection: ansatz has a zero/mirror point inside the index range");
    if (p.pos2 < 2 && (!have_left || p.pos2 > fr.left_pos2)) {
      fr.left_pos2 = p.pos2;
      fr.left_sign = p.sign;
      have_left = true;
    }
    if (p.pos2 > 2LL * n && (!have_right || p.pos2 < fr.right_pos2)) {
      fr.right_pos2 = p.pos2;
      fr.right_sign = p.sign;
      have_right = true;
    }
  }
  if (!have_left || !have_right)
    raise(Errc::UnsupportedAnsatz, "fold_reflection: no boundary reflection point found");
  return fr;
}

}  // namespace specmat
