// Copyright 2026 The qslip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qslip/numerics/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qslip {

namespace {

constexpr int kMaxQlSweeps = 50;

inline double sign_like(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Householder reduction to tridiagonal form.  `a` is dim x dim row-major and,
// when accumulate is set, is replaced by the orthogonal transform whose
// columns seed the QL eigenvector accumulation.
void householder_tridiag(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                         std::vector<double>& e, bool accumulate) {
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          if (accumulate) A(j, i) = A(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;

  if (accumulate) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        const std::size_t l = i - 1;
        if (d[i] != 0.0) {
          for (std::size_t j = 0; j <= l; ++j) {
            double g = 0.0;
            for (std::size_t k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
            for (std::size_t k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
          }
        }
      }
      d[i] = A(i, i);
      A(i, i) = 1.0;
      if (i > 0) {
        for (std::size_t j = 0; j < i; ++j) A(j, i) = A(i, j) = 0.0;
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) d[i] = A(i, i);
  }
}

// Implicit-shift QL on a tridiagonal (d, e); e[0] unused on input and the
// subdiagonal lives in e[1..n-1].  `z` (n x n row-major) accumulates rotations
// when non-null.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z,
                 std::size_t n) {
  auto Z = [&](std::size_t i, std::size_t j) -> double& { return (*z)[i * n + j]; };

  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlSweeps)
          throw ConvergenceError("symmetric_eigen: QL failed to converge", iter);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (std::size_t ip1 = m; ip1 > l; --ip1) {
          const std::size_t i = ip1 - 1;
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (std::size_t k = 0; k < n; ++k) {
              f = Z(k, i + 1);
              Z(k, i + 1) = s * Z(k, i) + c * f;
              Z(k, i) = c * Z(k, i) - s * f;
            }
          }
        }
        if (r == 0.0 && m - l > 1) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

void tridiagonal_eigen(std::vector<double>& diag, std::vector<double>& offdiag,
                       std::vector<double>* vectors) {
  const std::size_t n = diag.size();
  if (n == 0) throw ValidationError("tridiagonal_eigen: empty matrix");
  if (n == 1) return;
  if (offdiag.size() != n - 1) throw ValidationError("tridiagonal_eigen: offdiag size mismatch");
  // ql_implicit wants the subdiagonal in e[1..n-1].
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = offdiag[i - 1];
  ql_implicit(diag, e, vectors, n);
}

EigenResult symmetric_eigen(const SymmetricMatrix& m, std::size_t k) {
  const std::size_t n = m.dim();
  if (k < 1 || k > n) throw ValidationError("symmetric_eigen: need 1 <= k <= dim");
  const double scale = m.max_abs();
  if (m.max_asymmetry() > 64.0 * 2.3e-16 * std::max(scale, 1.0))
    throw ValidationError("symmetric_eigen: matrix is not symmetric to machine precision");

  std::vector<double> a = m.data();
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) {
    return EigenResult{{a[0]}, {{1.0}}};
  }
  householder_tridiag(a, n, d, e, /*accumulate=*/true);
  ql_implicit(d, e, &a, n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

  EigenResult out;
  out.values.resize(k);
  out.vectors.assign(k, std::vector<double>(n));
  for (std::size_t j = 0; j < k; ++j) {
    out.values[j] = d[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors[j][i] = a[i * n + order[j]];
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.dim();
  const double scale = m.max_abs();
  if (m.max_asymmetry() > 64.0 * 2.3e-16 * std::max(scale, 1.0))
    throw ValidationError("symmetric_eigen: matrix is not symmetric to machine precision");
  std::vector<double> a = m.data();
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) return {a[0]};
  householder_tridiag(a, n, d, e, /*accumulate=*/false);
  ql_implicit(d, e, nullptr, n);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace qslip
