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
#pragma once

#include <array>
#include <vector>

namespace elastodg {

/// Quadrature rule on a reference cell.
///
/// Triangle rules live on {x, y >= 0, x + y <= 1} (weights sum to 1/2);
/// segment rules live on [0, 1] (weights sum to 1, second coordinate unused).
struct QuadRule
{
    std::vector<std::array<double, 2>> points;
    std::vector<double> weights;
    int degree = 0;

    size_t size() const { return weights.size(); }
};

inline constexpr int kMaxTriangleDegree = 12;
inline constexpr int kMaxSegmentDegree = 21;

/// Rule exact for bivariate polynomials of total degree <= degree (0..12).
const QuadRule& triangle_rule(int degree);

/// Collapsed Gauss-Legendre product rule of the given exactness degree whose
/// collapse point is the reference vertex (1, 0). The Jacobian of the collapse
/// vanishes there, which regularizes integrands behaving like 1/r at that vertex.
const QuadRule& collapsed_triangle_rule(int degree);

/// Gauss-Legendre rule on [0, 1] exact through degree (0..21).
const QuadRule& segment_rule(int degree);

/// Gauss-Legendre nodes and weights on [-1, 1] with `count` points.
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace elastodg
