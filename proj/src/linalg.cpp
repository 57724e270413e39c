// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "birkhoff/errors.hpp"

namespace birkhoff {

Vec mat_vec(const Matrix& A, const Vec& x) {
  Vec y(A.rows(), 0.0);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double max_abs(const Matrix& A) {
  double m = 0.0;
  for (double v : A.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const Vec& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

LuFactor::LuFactor(Matrix A) : lu_(std::move(A)), piv_(lu_.rows()) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) throw usage_error("LuFactor: matrix must be square");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) throw solver_error("LU factorization hit a zero pivot at column " + std::to_string(k));
    piv_[k] = static_cast<int>(p);
    if (p != k) {
      sign_ = -sign_;
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
    }
    const double inv = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) * inv;
      lu_(i, k) = m;
      if (m == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
    }
  }
}

Vec LuFactor::solve(Vec b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw usage_error("LuFactor::solve: size mismatch");
  // P A = L U with fully swapped rows: permute b first, then substitute
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = static_cast<std::size_t>(piv_[k]);
    if (p != k) std::swap(b[k], b[p]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double bk = b[k];
    if (bk == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu_(i, k) * bk;
  }
  for (std::size_t k = n; k-- > 0;) {
    double acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= lu_(k, j) * b[j];
    b[k] = acc / lu_(k, k);
  }
  return b;
}

double LuFactor::det() const {
  double d = sign_;
  for (std::size_t k = 0; k < lu_.rows(); ++k) d *= lu_(k, k);
  return d;
}

}  // namespace birkhoff
