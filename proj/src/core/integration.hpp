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

#include "mesh.hpp"
#include "types.hpp"

#include <array>
#include <optional>
#include <vector>

namespace elastodg {

/// Quadrature point mapped onto a physical element. `weight` includes the area.
struct ElementQuadPoint
{
    std::array<double, 3> bary{};
    Vec2 x;
    double weight = 0.0;
};

/// Fills `out` with a rule of the given exactness degree on `geo`. If `singular`
/// lies in the closed element, the element is split into sub-triangles meeting at
/// that point and each is integrated with the collapsed rule pointing at it.
void element_quadrature(const ElementGeometry& geo, int degree, const std::optional<Vec2>& singular,
                        std::vector<ElementQuadPoint>& out);

/// Quadrature point on an edge: parameter along the edge and weight including the length.
struct EdgeQuadPoint
{
    double t = 0.0;
    double weight = 0.0;
};

/// Gauss rule on an edge, split at `singular` when that point lies inside the edge.
void edge_quadrature(const std::vector<Vec2>& vertices, const EdgeInfo& edge, int degree,
                     const std::optional<Vec2>& singular, std::vector<EdgeQuadPoint>& out);

} // namespace elastodg
