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

#ifndef QSLIP_NUMERICS_EIGEN_HPP
#define QSLIP_NUMERICS_EIGEN_HPP

#include <cstddef>
#include <vector>

#include "qslip/numerics/matrix.hpp"

namespace qslip {

struct EigenResult {
  std::vector<double> values;               ///< ascending, size k
  std::vector<std::vector<double>> vectors; ///< k orthonormal vectors, each of length dim
};

/// Lowest-k eigenpairs of a dense real symmetric matrix.
/// Householder tridiagonalization followed by implicit-shift QL; the full
/// spectrum is computed and the k smallest returned.  Dims up to a few
/// hundred solve in milliseconds, which covers every basis in this library.
///
/// Throws ValidationError for non-symmetric input or k out of range,
/// ConvergenceError (with iteration count) if QL stalls.
EigenResult symmetric_eigen(const SymmetricMatrix& m, std::size_t k);

/// Eigenvalues only (ascending, all of them).  Skips the transform
/// accumulation, roughly 3x faster; used by convergence re-checks.
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m);

/// Eigen decomposition of a symmetric tridiagonal matrix given by its
/// diagonal and subdiagonal (offdiag.size() == diag.size() - 1).
/// If `vectors` is null only eigenvalues are produced.
void tridiagonal_eigen(std::vector<double>& diag, std::vector<double>& offdiag,
                       std::vector<double>* vectors /* dim x dim row-major, in: identity-like */);

}  // namespace qslip

#endif  // QSLIP_NUMERICS_EIGEN_HPP
