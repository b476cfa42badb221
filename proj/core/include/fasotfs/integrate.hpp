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

#ifndef FASOTFS_INTEGRATE_HPP
#define FASOTFS_INTEGRATE_HPP

#include "fasotfs/quadrature.hpp"

#include <cmath>
#include <cstddef>

namespace fasotfs::integrate {

struct Result {
    double value = 0.0;
    double error = 0.0; // accumulated local error estimates
    std::size_t evaluations = 0;
};

namespace detail {

template <class F>
double panel(const quadrature::PanelRule &rule, F &&f, double a, double b, std::size_t &evals)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    evals += rule.nodes.size();
    return s * half;
}

template <class F>
void adaptive_1d(F &&f, double a, double b, double tol, int depth, Result &out)
{
    const auto &coarse = quadrature::legendre_panel_rule(7);
    const auto &fine = quadrature::legendre_panel_rule(15);
    const double i1 = panel(coarse, f, a, b, out.evaluations);
    const double i2 = panel(fine, f, a, b, out.evaluations);
    const double err = std::abs(i2 - i1);
    if (err <= tol || depth >= 48 || (b - a) < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
        out.value += i2;
        out.error += err;
        return;
    }
    const double mid = 0.5 * (a + b);
    adaptive_1d(f, a, mid, 0.5 * tol, depth + 1, out);
    adaptive_1d(f, mid, b, 0.5 * tol, depth + 1, out);
}

template <class F>
double panel_2d(const quadrature::PanelRule &rule, F &&f, double ax, double bx, double ay,
                double by, std::size_t &evals)
{
    const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mx + hx * rule.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            row += rule.weights[j] * f(x, my + hy * rule.nodes[j]);
        s += rule.weights[i] * row;
    }
    evals += rule.nodes.size() * rule.nodes.size();
    return s * hx * hy;
}

template <class F>
void adaptive_2d(F &&f, double ax, double bx, double ay, double by, double tol, int depth,
                 Result &out)
{
    const auto &coarse = quadrature::legendre_panel_rule(5);
    const auto &fine = quadrature::legendre_panel_rule(9);
    const double i1 = panel_2d(coarse, f, ax, bx, ay, by, out.evaluations);
    const double i2 = panel_2d(fine, f, ax, bx, ay, by, out.evaluations);
    const double err = std::abs(i2 - i1);
    if (err <= tol || depth >= 24) {
        out.value += i2;
        out.error += err;
        return;
    }
    const double mx = 0.5 * (ax + bx);
    const double my = 0.5 * (ay + by);
    const double t = 0.25 * tol;
    adaptive_2d(f, ax, mx, ay, my, t, depth + 1, out);
    adaptive_2d(f, mx, bx, ay, my, t, depth + 1, out);
    adaptive_2d(f, ax, mx, my, by, t, depth + 1, out);
    adaptive_2d(f, mx, bx, my, by, t, depth + 1, out);
}

} // namespace detail

/// Adaptive 1-D integral of f over [a, b] to absolute tolerance tol.
template <class F>
Result adaptive(F &&f, double a, double b, double tol)
{
    Result out;
    if (a == b)
        return out;
    detail::adaptive_1d(f, a, b, tol, 0, out);
    return out;
}

/// Adaptive 2-D integral of f over [ax,bx] x [ay,by] to absolute tolerance.
template <class F>
Result adaptive_2d(F &&f, double ax, double bx, double ay, double by, double tol)
{
    Result out;
    detail::adaptive_2d(f, ax, bx, ay, by, tol, 0, out);
    return out;
}

} // namespace fasotfs::integrate

#endif
