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

#include "fasotfs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fasotfs::linalg {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

EigenDecomposition eigh(const Matrix &symmetric)
{
    const std::size_t n = symmetric.rows();
    if (n != symmetric.cols())
        throw std::invalid_argument("eigh: matrix must be square");

    Matrix a = symmetric;
    Matrix v = Matrix::identity(n);

    auto offdiag_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(a(i, j)));
    const double tol = (scale > 0.0 ? scale : 1.0) * 1e-15 * static_cast<double>(n);

    for (int sweep = 0; sweep < 100 && offdiag_norm() > tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol * 1e-3)
                    continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r)
            out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

double det(const Matrix &a)
{
    const std::size_t n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("det: matrix must be square");
    Matrix lu = a;
    double d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k)))
                piv = i;
        if (lu(piv, k) == 0.0)
            return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(lu(piv, j), lu(k, j));
            d = -d;
        }
        d *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (std::size_t j = k; j < n; ++j)
                lu(i, j) -= f * lu(k, j);
        }
    }
    return d;
}

PsdProjection psd_project(const Matrix &symmetric)
{
    const std::size_t n = symmetric.rows();
    EigenDecomposition ed = eigh(symmetric);

    PsdProjection out;
    double max_abs = 0.0;
    for (double w : ed.values)
        max_abs = std::max(max_abs, std::abs(w));
    const double neg_tol = max_abs * 1e-12;

    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ed.values[i] < -neg_tol)
            out.clipped_eigenvalues.push_back(ed.values[i]);
        lam[i] = std::max(ed.values[i], 0.0);
    }

    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += ed.vectors(i, k) * lam[k] * ed.vectors(j, k);
            r(i, j) = s;
            r(j, i) = s;
        }

    // restore the original diagonal (clipping shrinks it slightly)
    std::vector<double> dscale(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double want = symmetric(i, i);
        if (r(i, i) > 0.0 && want > 0.0)
            dscale[i] = std::sqrt(want / r(i, i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) *= dscale[i] * dscale[j];

    // exact square root F0 = V sqrt(lambda+) (diagonal-rescaled), then the
    // lower-triangular factor via Householder QR of F0^T: L = R_qr^T keeps
    // L L^T = F0 F0^T even for rank-deficient inputs
    Matrix a(n, n); // starts as F0^T
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = ed.vectors(j, i) * std::sqrt(lam[i]) * dscale[j];

    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k; i < n; ++i)
            norm2 += a(i, k) * a(i, k);
        const double alpha = a(k, k) >= 0.0 ? -std::sqrt(norm2) : std::sqrt(norm2);
        if (norm2 == 0.0)
            continue;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            v[i] = a(i, k) - (i == k ? alpha : 0.0);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0)
            continue;
        for (std::size_t j = k; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < n; ++i)
                dot += v[i] * a(i, j);
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < n; ++i)
                a(i, j) -= f * v[i];
        }
    }

    Matrix l(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double sign = a(j, j) < 0.0 ? -1.0 : 1.0; // positive diagonal
        for (std::size_t i = j; i < n; ++i)
            l(i, j) = sign * a(j, i);
    }

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k <= std::min(i, j); ++k)
                s += l(i, k) * l(j, k);
            err = std::max(err, std::abs(s - r(i, j)));
        }

    out.factor = std::move(l);
    out.reconstruction_error = err;
    return out;
}

} // namespace fasotfs::linalg
