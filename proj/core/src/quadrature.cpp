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

#include "fasotfs/quadrature.hpp"

#include "fasotfs/linalg.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace fasotfs::quadrature {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

// Golub-Welsch: eigenvalues of the Jacobi matrix are the nodes. Weights come
// from the Christoffel function w = 1 / sum_k phi_k(x)^2 with phi_k the
// orthonormal polynomials; unlike the squared first eigenvector component
// this keeps full relative accuracy for the tiny edge weights.
std::pair<std::vector<double>, std::vector<double>>
golub_welsch(const std::vector<double> &diag, const std::vector<double> &offdiag, double mu0)
{
    const std::size_t n = diag.size();
    linalg::Matrix j(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = diag[i];
        if (i + 1 < n) {
            j(i, i + 1) = offdiag[i];
            j(i + 1, i) = offdiag[i];
        }
    }
    const linalg::EigenDecomposition ed = linalg::eigh(j);

    std::vector<double> nodes(n), weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = ed.values[i];
        nodes[i] = x;
        // b_{k+1} phi_{k+1} = (x - a_k) phi_k - b_k phi_{k-1}, phi_0 = 1/sqrt(mu0)
        double prev = 0.0;
        double cur = 1.0 / std::sqrt(mu0);
        double sum = cur * cur;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const double next = ((x - diag[k]) * cur - (k > 0 ? offdiag[k - 1] : 0.0) * prev) /
                                offdiag[k];
            prev = cur;
            cur = next;
            sum += cur * cur;
        }
        weights[i] = 1.0 / sum;
    }
    return {std::move(nodes), std::move(weights)};
}

// exact +/- symmetry for rules with an even weight function
void symmetrize(std::vector<double> &nodes, std::vector<double> &weights)
{
    const int n = static_cast<int>(nodes.size());
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        const double x = 0.5 * (nodes[j] - nodes[i]);
        nodes[i] = -x;
        nodes[j] = x;
        const double w = 0.5 * (weights[i] + weights[j]);
        weights[i] = w;
        weights[j] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
}

void check_order(int order)
{
    if (order < 1 || order > 128)
        throw std::invalid_argument("quadrature order must be in [1, 128]");
}

} // namespace

QuadratureRule gauss_hermite_rule(int order)
{
    check_order(order);
    std::vector<double> diag(order, 0.0);
    std::vector<double> off(order > 1 ? order - 1 : 0);
    for (int k = 1; k < order; ++k)
        off[k - 1] = std::sqrt(k / 2.0);
    auto [nodes, weights] = golub_welsch(diag, off, kSqrtPi);
    symmetrize(nodes, weights);
    return {Kind::hermite, order, std::move(nodes), std::move(weights)};
}

QuadratureRule gauss_laguerre_rule(int order)
{
    check_order(order);
    std::vector<double> diag(order);
    std::vector<double> off(order > 1 ? order - 1 : 0);
    for (int k = 0; k < order; ++k)
        diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < order; ++k)
        off[k - 1] = static_cast<double>(k);
    auto [nodes, weights] = golub_welsch(diag, off, 1.0);
    return {Kind::laguerre, order, std::move(nodes), std::move(weights)};
}

const PanelRule &legendre_panel_rule(int order)
{
    static std::mutex mtx;
    static std::map<int, PanelRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end())
        return it->second;

    std::vector<double> diag(order, 0.0);
    std::vector<double> off(order > 1 ? order - 1 : 0);
    for (int k = 1; k < order; ++k)
        off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    auto [nodes, weights] = golub_welsch(diag, off, 2.0);
    symmetrize(nodes, weights);

    PanelRule pr{std::move(nodes), std::move(weights)};
    return cache.emplace(order, std::move(pr)).first->second;
}

} // namespace fasotfs::quadrature
