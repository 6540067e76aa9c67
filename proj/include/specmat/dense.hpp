// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "specmat/errors.hpp"

namespace specmat {

// Dense real vector. Entries are checked finite when built through from();
// all library functions treat vectors as immutable values.
class Vector {
 public:
  Vector() = default;
  explicit Vector(int n) : x_(static_cast<std::size_t>(check_dim(n))) {}
  Vector(std::initializer_list<double> xs) : x_(xs) { check_finite(); }

  static Vector from(std::vector<double> xs) {
    Vector v;
    v.x_ = std::move(xs);
    if (v.x_.empty()) raise(Errc::Usage, "vector must have positive length");
    v.check_finite();
    return v;
  }

  int size() const noexcept { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x_[static_cast<std::size_t>(i)]; }

  double inf_norm() const {
    double m = 0.0;
    for (double v : x_) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<double>& data() const noexcept { return x_; }
  bool operator==(const Vector&) const = default;

 private:
  static int check_dim(int n) {
    if (n <= 0) raise(Errc::Usage, "vector must have positive length");
    return n;
  }
  void check_finite() const {
    for (double v : x_)
      if (!std::isfinite(v)) raise(Errc::NonFinite, "vector entry is not finite");
  }

  std::vector<double> x_;
};

// Square dense matrix, row-major. Small by design: every family in this
// project is built dense at n up to a few thousand.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n)
      : n_(check_dim(n)), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    DenseMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.n_)
        raise(Errc::Usage, "matrix rows must all have length n");
      int j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    m.check_finite();
    return m;
  }

  static DenseMatrix from_buffer(int n, std::vector<double> rowmajor) {
    if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != rowmajor.size())
      raise(Errc::Usage, "buffer length must be n*n");
    DenseMatrix m;
    m.n_ = check_dim(n);
    m.a_ = std::move(rowmajor);
    m.check_finite();
    return m;
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int size() const noexcept { return n_; }

  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  double& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

  // Max absolute row sum.
  double inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<double>& data() const noexcept { return a_; }
  bool operator==(const DenseMatrix&) const = default;

 private:
  static int check_dim(int n) {
    if (n <= 0) raise(Errc::Usage, "matrix dimension must be positive");
    return n;
  }
  void check_finite() const {
    for (double v : a_)
      if (!std::isfinite(v)) raise(Errc::NonFinite, "matrix entry is not finite");
  }

  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace specmat
