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
#include "integration.hpp"

#include "quadrature.hpp"

#include <algorithm>

namespace elastodg {

namespace {

constexpr double kInsideTol = 1e-12;

std::array<double, 3> barycentric_of(const ElementGeometry& geo, Vec2 x)
{
    const Vec2 d = x - geo.vertices[0];
    return {1.0 + dot(geo.grad_lambda[0], d), dot(geo.grad_lambda[1], d), dot(geo.grad_lambda[2], d)};
}

} // namespace

void element_quadrature(const ElementGeometry& geo, int degree, const std::optional<Vec2>& singular,
                        std::vector<ElementQuadPoint>& out)
{
    out.clear();
    std::array<double, 3> bs{};
    const bool inside = singular && [&] {
        bs = barycentric_of(geo, *singular);
        return *std::min_element(bs.begin(), bs.end()) >= -kInsideTol;
    }();

    if (!inside) {
        const QuadRule& rule = triangle_rule(degree);
        for (size_t q = 0; q < rule.size(); ++q) {
            const std::array<double, 3> b{1.0 - rule.points[q][0] - rule.points[q][1], rule.points[q][0], rule.points[q][1]};
            out.push_back({b, geo.point(b), 2.0 * geo.area * rule.weights[q]});
        }
        return;
    }

    // Sub-triangle opposite vertex i has corners (s, v_{i+1}, v_{i+2}) and area bs[i] * area.
    const QuadRule& rule = collapsed_triangle_rule(degree);
    for (int i = 0; i < 3; ++i) {
        if (bs[i] <= kInsideTol) continue;
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        for (size_t q = 0; q < rule.size(); ++q) {
            // Reference vertex (1, 0) carries the collapse and maps to the singular point.
            const double ws = rule.points[q][0];
            const double wk = rule.points[q][1];
            const double wj = 1.0 - ws - wk;
            std::array<double, 3> b{};
            for (int c = 0; c < 3; ++c) b[c] = ws * bs[c];
            b[j] += wj;
            b[k] += wk;
            out.push_back({b, geo.point(b), 2.0 * bs[i] * geo.area * rule.weights[q]});
        }
    }
}

void edge_quadrature(const std::vector<Vec2>& vertices, const EdgeInfo& edge, int degree,
                     const std::optional<Vec2>& singular, std::vector<EdgeQuadPoint>& out)
{
    out.clear();
    const QuadRule& rule = segment_rule(degree);
    double split = -1.0;
    if (singular) {
        const Vec2 a = vertices[edge.endpoints[0]];
        const Vec2 d = vertices[edge.endpoints[1]] - a;
        const double s = dot(*singular - a, d) / dot(d, d);
        const Vec2 off = *singular - (a + s * d);
        if (s > kInsideTol && s < 1.0 - kInsideTol && norm(off) <= kInsideTol * edge.length) split = s;
    }
    const auto push_piece = [&](double t0, double t1) {
        for (size_t q = 0; q < rule.size(); ++q)
            out.push_back({t0 + (t1 - t0) * rule.points[q][0], (t1 - t0) * edge.length * rule.weights[q]});
    };
    if (split < 0.0) {
        push_piece(0.0, 1.0);
    } else {
        push_piece(0.0, split);
        push_piece(split, 1.0);
    }
}

} // namespace elastodg
