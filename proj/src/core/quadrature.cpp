/*
 * Copyright 2026 The elastodg Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace elastodg {

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights)
{
    nodes.assign(count, 0.0);
    weights.assign(count, 0.0);
    for (int i = 0; i < (count + 1) / 2; ++i) {
        // Newton iteration on P_count from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= count; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= count; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = count * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[count - 1 - i] = x;
        weights[i] = w;
        weights[count - 1 - i] = w;
    }
    if (count % 2 == 1) nodes[count / 2] = 0.0;
}

namespace {

QuadRule make_segment(int degree)
{
    const int count = degree / 2 + 1;
    std::vector<double> x, w;
    gauss_legendre(count, x, w);
    QuadRule rule;
    rule.degree = degree;
    for (int i = 0; i < count; ++i) {
        rule.points.push_back({0.5 * (x[i] + 1.0), 0.0});
        rule.weights.push_back(0.5 * w[i]);
    }
    return rule;
}

// Collapsed (Duffy) product of Gauss-Legendre rules; the collapsed direction
// carries the extra linear Jacobian factor, hence one more point there.
QuadRule make_collapsed_triangle(int degree)
{
    const int ns = (degree + 1) / 2 + 1;
    const int nt = degree / 2 + 1;
    std::vector<double> xs, ws, xt, wt;
    gauss_legendre(ns, xs, ws);
    gauss_legendre(nt, xt, wt);
    QuadRule rule;
    rule.degree = degree;
    for (int i = 0; i < ns; ++i) {
        const double s = 0.5 * (xs[i] + 1.0);
        for (int j = 0; j < nt; ++j) {
            const double t = 0.5 * (xt[j] + 1.0);
            rule.points.push_back({s, t * (1.0 - s)});
            rule.weights.push_back(0.25 * ws[i] * wt[j] * (1.0 - s));
        }
    }
    return rule;
}

QuadRule make_triangle(int degree)
{
    QuadRule rule;
    rule.degree = degree;
    if (degree <= 1) {
        rule.points = {{1.0 / 3.0, 1.0 / 3.0}};
        rule.weights = {0.5};
        return rule;
    }
    if (degree == 2) {
        rule.points = {{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}};
        rule.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
        return rule;
    }
    return make_collapsed_triangle(degree);
}

template <class Make>
std::vector<QuadRule> table(int max_degree, Make make)
{
    std::vector<QuadRule> rules;
    for (int d = 0; d <= max_degree; ++d) rules.push_back(make(d));
    return rules;
}

} // namespace

const QuadRule& triangle_rule(int degree)
{
    static const std::vector<QuadRule> rules = table(kMaxTriangleDegree, make_triangle);
    if (degree < 0 || degree > kMaxTriangleDegree)
        throw std::invalid_argument("unsupported triangle quadrature degree " + std::to_string(degree));
    return rules[degree];
}

const QuadRule& collapsed_triangle_rule(int degree)
{
    static const std::vector<QuadRule> rules = table(kMaxTriangleDegree, make_collapsed_triangle);
    if (degree < 0 || degree > kMaxTriangleDegree)
        throw std::invalid_argument("unsupported triangle quadrature degree " + std::to_string(degree));
    return rules[degree];
}

const QuadRule& segment_rule(int degree)
{
    static const std::vector<QuadRule> rules = table(kMaxSegmentDegree, make_segment);
    if (degree < 0 || degree > kMaxSegmentDegree)
        throw std::invalid_argument("unsupported segment quadrature degree " + std::to_string(degree));
    return rules[degree];
}

} // namespace elastodg
