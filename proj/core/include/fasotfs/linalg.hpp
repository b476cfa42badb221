// SPDX-License-Identifier: Apache-2.0
//
// fasotfs - outage and capacity analysis for fluid-antenna OTFS satellite links
// Copyright (C) 2026 the fasotfs contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FASOTFS_LINALG_HPP
#define FASOTFS_LINALG_HPP

#include <cstddef>
#include <vector>

namespace fasotfs::linalg {

/// Dense row-major matrix of doubles. Only what the port-correlation
/// machinery needs: storage, symmetric eigendecomposition, determinants.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<double> &data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct EigenDecomposition {
    std::vector<double> values; // ascending
    Matrix vectors;             // column i is the eigenvector of values[i]
};

/// Cyclic Jacobi on a symmetric matrix. Deterministic sweep order, so the
/// result is bit-stable for a given input.
EigenDecomposition eigh(const Matrix &symmetric);

/// Determinant via LU with partial pivoting.
double det(const Matrix &a);

struct PsdProjection {
    Matrix factor;                          // L with L*L^T == projected matrix
    std::vector<double> clipped_eigenvalues; // strictly negative eigenvalues set to 0
    double reconstruction_error = 0.0;       // max-norm residual of L*L^T
};

/// Eigen-clip to the nearest PSD matrix, renormalise the diagonal to the
/// original one, and return a lower-triangular (semidefinite Cholesky) factor.
PsdProjection psd_project(const Matrix &symmetric);

} // namespace fasotfs::linalg

#endif
