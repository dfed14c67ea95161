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

#include "types.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

namespace elastodg {

/// An edge of the triangulation with its jump orientation.
///
/// For interior edges `plus_element > *minus_element` and `normal` points out of
/// the plus element, so [v] = v|plus - v|minus. Boundary edges carry only a plus
/// element and the outward normal of the domain.
struct EdgeInfo
{
    std::array<int, 2> endpoints{};   // listed counter-clockwise w.r.t. plus_element
    double length = 0.0;
    Vec2 normal;
    int plus_element = -1;
    std::optional<int> minus_element;
    // Local vertex slots (0..2) of endpoints[0], endpoints[1] inside each element.
    std::array<int, 2> plus_local{};
    std::array<int, 2> minus_local{};

    bool is_boundary() const { return !minus_element.has_value(); }

    /// Physical point at edge coordinate t in [0, 1].
    Vec2 point(const std::vector<Vec2>& vertices, double t) const;

    /// Barycentric coordinates inside the plus (or minus) element of the point at t.
    std::array<double, 3> barycentric(bool plus_side, double t) const;
};

/// Element geometry derived from its three vertices.
struct ElementGeometry
{
    std::array<Vec2, 3> vertices;
    double area = 0.0;
    std::array<Vec2, 3> grad_lambda;   // gradients of the barycentric hat functions

    Vec2 point(const std::array<double, 3>& bary) const;
};

/// Uniform triangulation of (-0.5, 0.5)^2 by 2n^2 congruent right isosceles
/// triangles. Square cells are visited row by row; each is split along its
/// lower-left to upper-right diagonal, the triangle below the diagonal first.
struct Mesh
{
    int n = 0;
    double h = 0.0;
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<EdgeInfo> interior_edges;
    std::vector<EdgeInfo> boundary_edges;

    static Mesh build_uniform(int n);

    int num_elements() const { return static_cast<int>(triangles.size()); }
    ElementGeometry geometry(int element) const;

    /// Element containing p (lowest index on ties) and the barycentric coordinates of p.
    std::pair<int, std::array<double, 3>> locate(Vec2 p) const;

    /// Plain-text dump: "v x y" per vertex then "t i j k" per triangle.
    void write(std::ostream& os) const;
};

/// +1 on the plus element (and on every boundary edge), -1 on the minus element.
int jump_sign(const EdgeInfo& edge, int element);

} // namespace elastodg
