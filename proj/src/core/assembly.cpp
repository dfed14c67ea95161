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
#include "assembly.hpp"

#include "integration.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <stdexcept>

namespace elastodg {

namespace {

constexpr Complex I{0.0, 1.0};
constexpr int kLocal = Space::kLocalDofs;

// Gradients and stresses of the six local basis functions lambda_k e_c.
struct ElementBasis
{
    ElementGeometry geo;
    std::array<CMat2, kLocal> grad{};
    std::array<CMat2, kLocal> stress{};

    ElementBasis(const Mesh& mesh, int element, const ProblemParams& p) : geo(mesh.geometry(element))
    {
        for (int l = 0; l < kLocal; ++l) {
            const int k = l / 2;
            const int c = l % 2;
            grad[l][c][0] = geo.grad_lambda[k].x;
            grad[l][c][1] = geo.grad_lambda[k].y;
            stress[l] = p.stress(grad[l]);
        }
    }
};

std::array<double, 3> bary_from_reference(const std::array<double, 2>& ref)
{
    return {1.0 - ref[0] - ref[1], ref[0], ref[1]};
}

// Value of local basis function l at barycentric point `bary`.
CVec2 basis_value(int l, const std::array<double, 3>& bary)
{
    CVec2 v{};
    v[l % 2] = bary[l / 2];
    return v;
}

int rhs_segment_degree(int quad_degree)
{
    return std::min(quad_degree, kMaxSegmentDegree);
}

void check_params(const ProblemParams& p)
{
    p.validate();
}

void require_kind(const Space& space, SpaceKind kind, const char* what)
{
    if (space.kind() != kind) throw std::invalid_argument(what);
}

CsrMatrix make_pattern(const Space& space, FormParts parts)
{
    const Mesh& mesh = space.mesh();
    if (space.kind() == SpaceKind::Dg) {
        BlockPattern pattern(mesh.num_elements(), kLocal);
        if (parts.flux || parts.penalty)
            for (const auto& e : mesh.interior_edges) pattern.couple(e.plus_element, *e.minus_element);
        return pattern.build();
    }
    BlockPattern pattern(static_cast<int>(mesh.vertices.size()), 2);
    for (const auto& tri : mesh.triangles)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) pattern.couple(tri[a], tri[b]);
    return pattern.build();
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

CsrMatrix assemble_operator(const Space& space, const ProblemParams& p, FormParts parts)
{
    check_params(p);
    const Mesh& mesh = space.mesh();
    CsrMatrix m = make_pattern(space, parts);

    const QuadRule& tri = triangle_rule(kOperatorQuadDegree);
    const QuadRule& seg = segment_rule(kOperatorQuadDegree);
    const double mass_coeff = -p.omega * p.omega * p.rho;

    std::array<Complex, kLocal * kLocal> local{};
    for (int k = 0; k < mesh.num_elements(); ++k) {
        const ElementBasis basis(mesh, k, p);
        local.fill(0.0);
        for (int a = 0; a < kLocal; ++a) {
            for (int b = 0; b < kLocal; ++b) {
                Complex v = 0.0;
                if (parts.stiffness) v += basis.geo.area * inner(basis.stress[b], basis.grad[a]);
                if (parts.mass) {
                    for (size_t q = 0; q < tri.size(); ++q) {
                        const auto bary = bary_from_reference(tri.points[q]);
                        const double w = 2.0 * basis.geo.area * tri.weights[q];
                        v += mass_coeff * w * inner(basis_value(b, bary), basis_value(a, bary));
                    }
                }
                local[a * kLocal + b] = v;
            }
        }
        const auto dofs = space.element_dofs(k);
        m.add_block(dofs, dofs, local);
    }

    if (parts.flux || parts.penalty) {
        require_kind(space, SpaceKind::Dg, "flux and penalty terms need the DG space");
        constexpr int n2 = 2 * kLocal;
        std::array<Complex, n2 * n2> edge_local{};
        for (const auto& e : mesh.interior_edges) {
            const ElementBasis plus(mesh, e.plus_element, p);
            const ElementBasis minus(mesh, *e.minus_element, p);
            // Normal stress of each of the 12 edge dofs (plus side first) and its sign.
            std::array<CVec2, n2> sn{};
            std::array<double, n2> sign{};
            for (int l = 0; l < kLocal; ++l) {
                sn[l] = mul(plus.stress[l], e.normal);
                sn[kLocal + l] = mul(minus.stress[l], e.normal);
                sign[l] = 1.0;
                sign[kLocal + l] = -1.0;
            }
            edge_local.fill(0.0);
            for (size_t q = 0; q < seg.size(); ++q) {
                const double t = seg.points[q][0];
                const double w = seg.weights[q] * e.length;
                const auto bp = e.barycentric(true, t);
                const auto bm = e.barycentric(false, t);
                std::array<CVec2, n2> trace{};
                for (int l = 0; l < kLocal; ++l) {
                    trace[l] = basis_value(l, bp);
                    trace[kLocal + l] = basis_value(l, bm);
                }
                for (int a = 0; a < n2; ++a) {
                    const CVec2 jump_a = sign[a] * trace[a];
                    for (int b = 0; b < n2; ++b) {
                        const CVec2 jump_b = sign[b] * trace[b];
                        Complex v = 0.0;
                        if (parts.flux) {
                            v -= inner(0.5 * sn[b], jump_a);
                            v += ProblemParams::eta * inner(jump_b, 0.5 * sn[a]);
                        }
                        if (parts.penalty) {
                            v += I * (p.gamma0 / e.length) * inner(jump_b, jump_a);
                            v += I * (p.gamma1 * e.length) * inner(sign[b] * sn[b], sign[a] * sn[a]);
                        }
                        edge_local[a * n2 + b] += w * v;
                    }
                }
            }
            std::array<int, n2> dofs{};
            const auto dp = space.element_dofs(e.plus_element);
            const auto dm = space.element_dofs(*e.minus_element);
            std::copy(dp.begin(), dp.end(), dofs.begin());
            std::copy(dm.begin(), dm.end(), dofs.begin() + kLocal);
            m.add_block(dofs, dofs, edge_local);
        }
    }

    if (parts.boundary) {
        for (const auto& e : mesh.boundary_edges) {
            local.fill(0.0);
            for (size_t q = 0; q < seg.size(); ++q) {
                const double w = seg.weights[q] * e.length;
                const auto bp = e.barycentric(true, seg.points[q][0]);
                for (int a = 0; a < kLocal; ++a)
                    for (int b = 0; b < kLocal; ++b)
                        local[a * kLocal + b] += I * p.omega * w * inner(p.apply_A(basis_value(b, bp)), basis_value(a, bp));
            }
            const auto dofs = space.element_dofs(e.plus_element);
            m.add_block(dofs, dofs, local);
        }
    }
    return m;
}

std::vector<Complex> assemble_load(const Space& space, const ProblemParams& p, const ElementSampler& left,
                                   FormParts parts, int quad_degree)
{
    check_params(p);
    const Mesh& mesh = space.mesh();
    std::vector<Complex> load(space.num_dofs(), Complex(0.0));
    const int seg_degree = rhs_segment_degree(quad_degree);
    std::vector<EdgeQuadPoint> edge_points;
    const double mass_coeff = -p.omega * p.omega * p.rho;
    const auto singular = left.singular_point();
    std::vector<ElementQuadPoint> points;

    for (int k = 0; k < mesh.num_elements(); ++k) {
        const ElementBasis basis(mesh, k, p);
        const auto dofs = space.element_dofs(k);
        element_quadrature(basis.geo, quad_degree, singular, points);
        for (const auto& [bary, x, w] : points) {
            const PointSample s = left.sample(k, bary, x);
            const CMat2 sigma = p.stress(s.grad);
            for (int a = 0; a < kLocal; ++a) {
                Complex v = 0.0;
                if (parts.stiffness) v += inner(sigma, basis.grad[a]);
                if (parts.mass) v += mass_coeff * inner(s.u, basis_value(a, bary));
                load[dofs[a]] += w * v;
            }
        }
    }

    if (parts.flux || parts.penalty) {
        require_kind(space, SpaceKind::Dg, "flux and penalty terms need the DG space");
        for (const auto& e : mesh.interior_edges) {
            const ElementBasis plus(mesh, e.plus_element, p);
            const ElementBasis minus(mesh, *e.minus_element, p);
            const auto dp = space.element_dofs(e.plus_element);
            const auto dm = space.element_dofs(*e.minus_element);
            edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
            for (const auto& [t, w] : edge_points) {
                const EdgeTraces tr = edge_traces(left, mesh, e, t, p);
                const auto bp = e.barycentric(true, t);
                const auto bm = e.barycentric(false, t);
                for (int side = 0; side < 2; ++side) {
                    const double sgn = side == 0 ? 1.0 : -1.0;
                    const ElementBasis& eb = side == 0 ? plus : minus;
                    const auto& dofs = side == 0 ? dp : dm;
                    for (int a = 0; a < kLocal; ++a) {
                        const CVec2 jump_a = sgn * basis_value(a, side == 0 ? bp : bm);
                        const CVec2 sn_a = mul(eb.stress[a], e.normal);
                        Complex v = 0.0;
                        if (parts.flux) {
                            v -= inner(tr.stress_average, jump_a);
                            v += ProblemParams::eta * inner(tr.jump, 0.5 * sn_a);
                        }
                        if (parts.penalty) {
                            v += I * (p.gamma0 / e.length) * inner(tr.jump, jump_a);
                            v += I * (p.gamma1 * e.length) * inner(tr.stress_jump, sgn * sn_a);
                        }
                        load[dofs[a]] += w * v;
                    }
                }
            }
        }
    }

    if (parts.boundary) {
        for (const auto& e : mesh.boundary_edges) {
            const auto dofs = space.element_dofs(e.plus_element);
            edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
            for (const auto& [t, w] : edge_points) {
                const auto bp = e.barycentric(true, t);
                const PointSample s = left.sample(e.plus_element, bp, e.point(mesh.vertices, t));
                const CVec2 au = p.apply_A(s.u);
                for (int a = 0; a < kLocal; ++a) load[dofs[a]] += I * p.omega * w * inner(au, basis_value(a, bp));
            }
        }
    }
    return load;
}

std::vector<Complex> assemble_rhs(const Space& space, const ProblemParams& p, const AnalyticField& exact, int quad_degree)
{
    check_params(p);
    const Mesh& mesh = space.mesh();
    std::vector<Complex> rhs(space.num_dofs(), Complex(0.0));
    const int seg_degree = rhs_segment_degree(quad_degree);
    std::vector<EdgeQuadPoint> edge_points;
    const auto singular = exact.singular_point();
    std::vector<ElementQuadPoint> points;

    for (int k = 0; k < mesh.num_elements(); ++k) {
        const auto dofs = space.element_dofs(k);
        element_quadrature(mesh.geometry(k), quad_degree, singular, points);
        for (const auto& [bary, x, w] : points) {
            const CVec2 f = source_f(exact.sample(x), p);
            for (int a = 0; a < kLocal; ++a) rhs[dofs[a]] += w * f[a % 2] * bary[a / 2];
        }
    }
    for (const auto& e : mesh.boundary_edges) {
        const auto dofs = space.element_dofs(e.plus_element);
        edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
        for (const auto& [t, w] : edge_points) {
            const auto bp = e.barycentric(true, t);
            const CVec2 g = boundary_g(exact.sample(e.point(mesh.vertices, t)), e.normal, p);
            for (int a = 0; a < kLocal; ++a) rhs[dofs[a]] += w * g[a % 2] * bp[a / 2];
        }
    }
    return rhs;
}

System assemble_system(const Space& space, const ProblemParams& p, const AnalyticField& exact, int quad_rhs_degree)
{
    const auto start = std::chrono::steady_clock::now();
    const FormParts parts = space.kind() == SpaceKind::Dg ? FormParts::dg() : FormParts::fem();
    System sys{assemble_operator(space, p, parts), assemble_rhs(space, p, exact, quad_rhs_degree), space, p, {}};
    sys.stats.nnz = sys.matrix.nnz();
    sys.stats.assemble_ms = elapsed_ms(start);
    return sys;
}

System assemble_dg(const Space& space, const ProblemParams& p, int quad_rhs_degree)
{
    require_kind(space, SpaceKind::Dg, "assemble_dg needs a DG space");
    return assemble_system(space, p, ManufacturedSolution(p), quad_rhs_degree);
}

System assemble_fem(const Space& space, const ProblemParams& p, int quad_rhs_degree)
{
    require_kind(space, SpaceKind::Fem, "assemble_fem needs a conforming space");
    return assemble_system(space, p, ManufacturedSolution(p), quad_rhs_degree);
}

System assemble_elliptic_projection(const Space& space, const ProblemParams& p, const AnalyticField& target, int quad_degree)
{
    require_kind(space, SpaceKind::Dg, "the elliptic projection is defined on the DG space");
    const auto start = std::chrono::steady_clock::now();
    System sys{assemble_operator(space, p, FormParts::elliptic()),
               assemble_load(space, p, AnalyticSampler(target), FormParts::elliptic(), quad_degree), space, p, {}};
    sys.stats.nnz = sys.matrix.nnz();
    sys.stats.assemble_ms = elapsed_ms(start);
    return sys;
}

Complex apply_form(const Mesh& mesh, const ProblemParams& p, const ElementSampler& left, const ElementSampler& right,
                   FormParts parts, int quad_degree)
{
    check_params(p);
    const int seg_degree = rhs_segment_degree(quad_degree);
    std::vector<EdgeQuadPoint> edge_points;
    Complex total = 0.0;
    auto singular = left.singular_point();
    if (!singular) singular = right.singular_point();

    if (parts.stiffness || parts.mass) {
        std::vector<ElementQuadPoint> points;
        for (int k = 0; k < mesh.num_elements(); ++k) {
            element_quadrature(mesh.geometry(k), quad_degree, singular, points);
            for (const auto& [bary, x, w] : points) {
                const PointSample u = left.sample(k, bary, x);
                const PointSample v = right.sample(k, bary, x);
                if (parts.stiffness) {
                    const CMat2 eu = symmetric_part(u.grad);
                    const CMat2 ev = symmetric_part(v.grad);
                    total += w * (p.lambda * trace(eu) * std::conj(trace(ev)) + 2.0 * p.mu * inner(eu, ev));
                }
                if (parts.mass) total += w * (-p.omega * p.omega * p.rho) * inner(u.u, v.u);
            }
        }
    }
    if (parts.flux || parts.penalty) {
        for (const auto& e : mesh.interior_edges) {
            edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
            for (const auto& [t, w] : edge_points) {
                const EdgeTraces u = edge_traces(left, mesh, e, t, p);
                const EdgeTraces v = edge_traces(right, mesh, e, t, p);
                if (parts.flux)
                    total += w * (-inner(u.stress_average, v.jump) + ProblemParams::eta * inner(u.jump, v.stress_average));
                if (parts.penalty)
                    total += w * I * ((p.gamma0 / e.length) * inner(u.jump, v.jump) + p.gamma1 * e.length * inner(u.stress_jump, v.stress_jump));
            }
        }
    }
    if (parts.boundary) {
        for (const auto& e : mesh.boundary_edges) {
            edge_quadrature(mesh.vertices, e, seg_degree, singular, edge_points);
            for (const auto& [t, w] : edge_points) {
                const auto bp = e.barycentric(true, t);
                const Vec2 x = e.point(mesh.vertices, t);
                const CVec2 u = left.sample(e.plus_element, bp, x).u;
                const CVec2 v = right.sample(e.plus_element, bp, x).u;
                total += w * I * p.omega * inner(p.apply_A(u), v);
            }
        }
    }
    return total;
}

Complex apply_form(const ProblemParams& p, const Field& left, const Field& right, FormParts parts)
{
    if (left.space().mesh_ptr() != right.space().mesh_ptr()) throw std::invalid_argument("fields live on different meshes");
    return apply_form(left.space().mesh(), p, DiscreteSampler(left), DiscreteSampler(right), parts, kOperatorQuadDegree);
}

double consistency_residual(const Space& space, const ProblemParams& p, const AnalyticField& exact, int quad_degree)
{
    require_kind(space, SpaceKind::Dg, "consistency is measured on the DG space");
    const auto load = assemble_load(space, p, AnalyticSampler(exact), FormParts::dg(), quad_degree);
    const auto rhs = assemble_rhs(space, p, exact, quad_degree);
    double worst = 0.0;
    for (size_t i = 0; i < load.size(); ++i) worst = std::max(worst, std::abs(load[i] - rhs[i]));
    return worst;
}

double consistency_residual(const Mesh& mesh, const ProblemParams& p, int quad_degree)
{
    auto shared = std::make_shared<const Mesh>(mesh);
    return consistency_residual(Space::dg(shared), p, ManufacturedSolution(p), quad_degree);
}

} // namespace elastodg
