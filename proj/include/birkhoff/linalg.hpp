// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_LINALG_HPP
#define BIRKHOFF_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace birkhoff {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const std::vector<double>& data() const { return a_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

Vec mat_vec(const Matrix& A, const Vec& x);

double max_abs(const Matrix& A);
double max_abs(const Vec& v);

/// Partial-pivoted LU factorization of a square matrix.
///
/// Factored once and reused for repeated solves; throws solver_error on a
/// zero pivot. Deterministic: no parallelism, fixed elimination order.
class LuFactor {
public:
  explicit LuFactor(Matrix A);

  Vec solve(Vec b) const;

  /// Determinant from the pivot product (sign included).
  double det() const;

private:
  Matrix lu_;
  std::vector<int> piv_;
  int sign_ = 1;
};

/// Neumaier-compensated running sum; keeps global reductions deterministic
/// and accurate to a few ulps regardless of term cancellation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = s_ + x;
    if (std::abs(s_) >= std::abs(x)) {
      c_ += (s_ - t) + x;
    } else {
      c_ += (x - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace birkhoff

#endif
