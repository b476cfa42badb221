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

#ifndef FASOTFS_QUADRATURE_HPP
#define FASOTFS_QUADRATURE_HPP

#include <vector>

namespace fasotfs::quadrature {

enum class Kind { hermite, laguerre };

/// Nodes and weights of a Gaussian rule. Immutable after construction and
/// freely shareable between threads.
struct QuadratureRule {
    Kind kind;
    int order;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // positive; sum sqrt(pi) (hermite) or 1 (laguerre)
};

/// Gauss-Hermite rule (weight e^{-x^2}) of order 1..128 via Golub-Welsch.
QuadratureRule gauss_hermite_rule(int order);

/// Gauss-Laguerre rule (weight e^{-t}) of order 1..128 via Golub-Welsch.
QuadratureRule gauss_laguerre_rule(int order);

/// Gauss-Legendre nodes/weights on [-1, 1]; backbone of the adaptive
/// integrators and the Bessel integral evaluation.
struct PanelRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const PanelRule &legendre_panel_rule(int order);

} // namespace fasotfs::quadrature

#endif
