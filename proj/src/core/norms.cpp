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
#include "norms.hpp"

#include "integration.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace elastodg {

NormReport compute_norms(const Mesh& mesh, const ProblemParams& p, const ElementSampler& field, int quad_degree)
{
    p.validate();
    const int seg_degree = std::min(quad_degree, kMaxSegmentDegree);
    std::vector<EdgeQuadPoint> edge_points;

    double semi2 = 0.0;
    double l2 = 0.0;
    const auto singular = field.singular_point();
    std::vector<ElementQuadPoint> points;
    for (int k = 0; k < mesh.num_elements(); ++k) {
        element_quadrature(mesh.geometry(k), quad_degree, singular, points);
        for (const auto& [bary, x, w] : points) {
            const PointSample s = field.sample(k, bary, x);
            const CMat2 eps = symmetric_part(s.grad);
            semi2 += w * (p.lambda * std::norm(trace(eps)) + 2.0 * p.mu * norm2(eps));
            l2 += w * norm2(s.u);
        }
    }

    NormReport r;
    double flux_avg = 0.0;
    for (const auto& e : mesh.interior_edges) {
        edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
        for (const auto& [t, w] : edge_points) {
            const EdgeTraces tr = edge_traces(field, mesh, e, t, p);
            r.j0 += w * (p.gamma0 / e.length) * norm2(tr.jump);
            r.j1 += w * p.gamma1 * e.length * norm2(tr.stress_jump);
            flux_avg += w * (e.length / p.gamma0) * norm2(tr.stress_average);
        }
    }
    double boundary = 0.0;
    for (const auto& e : mesh.boundary_edges) {
        edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
        for (const auto& [t, w] : edge_points) {
            boundary += w * norm2(field.sample(e.plus_element, e.barycentric(true, t), e.point(mesh.vertices, t)).u);
        }
    }

    r.seminorm_1h = std::sqrt(semi2);
    r.norm_1h = std::sqrt(semi2 + r.j0 + r.j1);
    r.triple_norm_1h = std::sqrt(semi2 + r.j0 + r.j1 + flux_avg);
    r.l2_domain = std::sqrt(l2);
    r.l2_boundary = std::sqrt(boundary);
    return r;
}

NormReport norms_of(const Field& field, const ProblemParams& p)
{
    return compute_norms(field.space().mesh(), p, DiscreteSampler(field), 2);
}

NormReport error_vs_exact(const Field& field, const ProblemParams& p, const AnalyticField& exact, int quad_degree)
{
    const AnalyticSampler u(exact);
    const DiscreteSampler uh(field);
    return compute_norms(field.space().mesh(), p, DifferenceSampler(u, uh), quad_degree);
}

NormReport error_vs_exact(const Field& field, const ProblemParams& p, int quad_degree)
{
    return error_vs_exact(field, p, ManufacturedSolution(p), quad_degree);
}

NormReport exact_norms(const Mesh& mesh, const ProblemParams& p, const AnalyticField& exact, int quad_degree)
{
    return compute_norms(mesh, p, AnalyticSampler(exact), quad_degree);
}

Complex interior_flux_pairing(const Field& field, const ProblemParams& p)
{
    const QuadRule& seg = segment_rule(2);
    Complex total = 0.0;
    for (const auto& e : field.space().mesh().interior_edges)
        for (size_t q = 0; q < seg.size(); ++q) {
            const EdgeTraces tr = jump_and_average_traces(field, e, seg.points[q][0], p);
            total += seg.weights[q] * e.length * inner(tr.stress_average, tr.jump);
        }
    return total;
}

} // namespace elastodg
