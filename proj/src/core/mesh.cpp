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
#include "mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace elastodg {

Vec2 EdgeInfo::point(const std::vector<Vec2>& vertices, double t) const
{
    return (1.0 - t) * vertices[endpoints[0]] + t * vertices[endpoints[1]];
}

std::array<double, 3> EdgeInfo::barycentric(bool plus_side, double t) const
{
    const auto& slots = plus_side ? plus_local : minus_local;
    std::array<double, 3> bary{0.0, 0.0, 0.0};
    bary[slots[0]] = 1.0 - t;
    bary[slots[1]] = t;
    return bary;
}

Vec2 ElementGeometry::point(const std::array<double, 3>& bary) const
{
    return bary[0] * vertices[0] + bary[1] * vertices[1] + bary[2] * vertices[2];
}

Mesh Mesh::build_uniform(int n)
{
    if (n < 1) throw std::invalid_argument("mesh subdivision count must be >= 1, got " + std::to_string(n));

    Mesh mesh;
    mesh.n = n;
    mesh.h = 1.0 / n;
    const int stride = n + 1;
    mesh.vertices.reserve(static_cast<size_t>(stride) * stride);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices.push_back({-0.5 + static_cast<double>(i) / n, -0.5 + static_cast<double>(j) / n});

    mesh.triangles.reserve(2 * static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = j * stride + i;
            const int v10 = v00 + 1;
            const int v01 = v00 + stride;
            const int v11 = v01 + 1;
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    }

    // First sighting of an edge fixes the plus side provisionally; the second
    // sighting (always from a higher element index) takes over as plus.
    std::unordered_map<std::uint64_t, size_t> seen;
    seen.reserve(3 * mesh.triangles.size());
    std::vector<EdgeInfo> edges;
    edges.reserve(3 * mesh.triangles.size() / 2 + 2 * n);

    for (int k = 0; k < mesh.num_elements(); ++k) {
        const auto& tri = mesh.triangles[k];
        for (int local = 0; local < 3; ++local) {
            const int la = (local + 1) % 3;
            const int lb = (local + 2) % 3;
            const int a = tri[la];
            const int b = tri[lb];
            const auto key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | static_cast<std::uint32_t>(std::max(a, b));
            const auto [it, inserted] = seen.try_emplace(key, edges.size());
            if (inserted) {
                EdgeInfo e;
                e.endpoints = {a, b};
                e.plus_element = k;
                e.plus_local = {la, lb};
                edges.push_back(e);
                continue;
            }
            EdgeInfo& e = edges[it->second];
            if (e.minus_element) throw std::logic_error("edge shared by more than two triangles");
            // The earlier element becomes minus; endpoints are reoriented to be
            // counter-clockwise in the new plus element.
            e.minus_element = e.plus_element;
            e.minus_local = {e.plus_local[1], e.plus_local[0]};
            e.plus_element = k;
            e.endpoints = {a, b};
            e.plus_local = {la, lb};
        }
    }

    for (auto& e : edges) {
        const Vec2 d = mesh.vertices[e.endpoints[1]] - mesh.vertices[e.endpoints[0]];
        e.length = norm(d);
        e.normal = {d.y / e.length, -d.x / e.length};
        (e.is_boundary() ? mesh.boundary_edges : mesh.interior_edges).push_back(e);
    }
    return mesh;
}

ElementGeometry Mesh::geometry(int element) const
{
    if (element < 0 || element >= num_elements()) throw std::out_of_range("element index out of range");
    const auto& tri = triangles[element];
    ElementGeometry g;
    g.vertices = {vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]};
    const Vec2 e1 = g.vertices[1] - g.vertices[0];
    const Vec2 e2 = g.vertices[2] - g.vertices[0];
    const double det = e1.x * e2.y - e1.y * e2.x;
    g.area = 0.5 * det;
    // grad(lambda_k) = rot(opposite edge) / det
    for (int k = 0; k < 3; ++k) {
        const Vec2 p = g.vertices[(k + 1) % 3];
        const Vec2 q = g.vertices[(k + 2) % 3];
        g.grad_lambda[k] = {(p.y - q.y) / det, (q.x - p.x) / det};
    }
    return g;
}

std::pair<int, std::array<double, 3>> Mesh::locate(Vec2 p) const
{
    constexpr double tol = 1e-12;
    const int ci = std::clamp(static_cast<int>(std::floor((p.x + 0.5) * n)), 0, n - 1);
    const int cj = std::clamp(static_cast<int>(std::floor((p.y + 0.5) * n)), 0, n - 1);
    int best = std::numeric_limits<int>::max();
    std::array<double, 3> best_bary{};
    for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
            const int i = ci + di;
            const int j = cj + dj;
            if (i < 0 || j < 0 || i >= n || j >= n) continue;
            for (int half = 0; half < 2; ++half) {
                const int k = 2 * (j * n + i) + half;
                if (k >= best) continue;
                const ElementGeometry g = geometry(k);
                std::array<double, 3> bary{};
                bool inside = true;
                for (int v = 0; v < 3; ++v) {
                    bary[v] = 1.0 / 3.0 + dot(g.grad_lambda[v], p - (1.0 / 3.0) * (g.vertices[0] + g.vertices[1] + g.vertices[2]));
                    inside = inside && bary[v] >= -tol;
                }
                if (inside) {
                    best = k;
                    best_bary = bary;
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) throw std::out_of_range("point outside the mesh");
    return {best, best_bary};
}

void Mesh::write(std::ostream& os) const
{
    os.precision(17);
    for (const auto& v : vertices) os << "v " << v.x << ' ' << v.y << '\n';
    for (const auto& t : triangles) os << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

int jump_sign(const EdgeInfo& edge, int element)
{
    if (element == edge.plus_element) return 1;
    if (edge.minus_element && element == *edge.minus_element) return -1;
    throw std::invalid_argument("element " + std::to_string(element) + " is not adjacent to the edge");
}

} // namespace elastodg
