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
#include "spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace elastodg {

Space::Space(std::shared_ptr<const Mesh> mesh, SpaceKind kind) : mesh_(std::move(mesh)), kind_(kind)
{
    if (!mesh_) throw std::invalid_argument("space requires a mesh");
}

Field::Field(Space space) : space_(std::move(space)), coeffs_(space_.num_dofs(), Complex(0.0)) {}

Field::Field(Space space, std::vector<Complex> coefficients) : space_(std::move(space)), coeffs_(std::move(coefficients))
{
    if (static_cast<int>(coeffs_.size()) != space_.num_dofs())
        throw std::invalid_argument("coefficient vector length does not match the space");
}

std::array<CVec2, 3> Field::nodal_values(int element) const
{
    if (element < 0 || element >= space_.mesh().num_elements()) throw std::out_of_range("element index out of range");
    std::array<CVec2, 3> v{};
    for (int k = 0; k < 3; ++k)
        for (int c = 0; c < 2; ++c) v[k][c] = coeffs_[space_.global_dof(element, 2 * k + c)];
    return v;
}

CVec2 Field::eval(int element, const std::array<double, 3>& bary) const
{
    const auto v = nodal_values(element);
    return bary[0] * v[0] + bary[1] * v[1] + bary[2] * v[2];
}

CMat2 Field::gradient(int element) const
{
    const auto v = nodal_values(element);
    const ElementGeometry g = space_.mesh().geometry(element);
    CMat2 grad{};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 2; ++i) {
            grad[i][0] += v[k][i] * g.grad_lambda[k].x;
            grad[i][1] += v[k][i] * g.grad_lambda[k].y;
        }
    return grad;
}

Field& Field::operator*=(Complex s)
{
    for (auto& c : coeffs_) c *= s;
    return *this;
}

namespace {

void require_same_space(const Field& a, const Field& b)
{
    if (a.space().mesh_ptr() != b.space().mesh_ptr() || a.space().kind() != b.space().kind())
        throw std::invalid_argument("fields live on different spaces");
}

} // namespace

Field operator-(const Field& a, const Field& b)
{
    require_same_space(a, b);
    Field out = a;
    for (size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
}

Field operator+(const Field& a, const Field& b)
{
    require_same_space(a, b);
    Field out = a;
    for (size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

Field interpolate(const std::function<CVec2(Vec2)>& fn, const Space& space)
{
    const Mesh& mesh = space.mesh();
    std::vector<CVec2> at_vertex(mesh.vertices.size());
    for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        at_vertex[v] = fn(mesh.vertices[v]);
        for (const Complex& c : at_vertex[v])
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::domain_error("interpolated field is not finite at a mesh vertex");
    }
    Field field(space);
    auto& coeffs = field.coefficients();
    for (int k = 0; k < mesh.num_elements(); ++k)
        for (int l = 0; l < Space::kLocalDofs; ++l)
            coeffs[space.global_dof(k, l)] = at_vertex[mesh.triangles[k][l / 2]][l % 2];
    return field;
}

Field interpolate(const AnalyticField& fn, const Space& space)
{
    return interpolate([&fn](Vec2 x) { return fn.sample(x).u; }, space);
}

Field to_dg(const Field& field)
{
    if (field.space().kind() == SpaceKind::Dg) return field;
    const Space dg = Space::dg(field.space().mesh_ptr());
    Field out(dg);
    for (int k = 0; k < dg.mesh().num_elements(); ++k)
        for (int l = 0; l < Space::kLocalDofs; ++l)
            out.coefficients()[dg.global_dof(k, l)] = field.coefficients()[field.space().global_dof(k, l)];
    return out;
}

PointSample DiscreteSampler::sample(int element, const std::array<double, 3>& bary, Vec2) const
{
    return {field_.eval(element, bary), field_.gradient(element)};
}

PointSample AnalyticSampler::sample(int, const std::array<double, 3>&, Vec2 x) const
{
    const FieldSample s = fn_.sample(x);
    return {s.u, s.grad_u};
}

PointSample DifferenceSampler::sample(int element, const std::array<double, 3>& bary, Vec2 x) const
{
    const PointSample a = left_.sample(element, bary, x);
    const PointSample b = right_.sample(element, bary, x);
    return {a.u - b.u, a.grad - b.grad};
}

EdgeTraces edge_traces(const ElementSampler& field, const Mesh& mesh, const EdgeInfo& edge, double t, const ProblemParams& p)
{
    const Vec2 x = edge.point(mesh.vertices, t);
    const PointSample plus = field.sample(edge.plus_element, edge.barycentric(true, t), x);
    const CVec2 sn_plus = mul(p.stress(plus.grad), edge.normal);
    EdgeTraces tr;
    if (edge.is_boundary()) {
        tr.jump = tr.average = plus.u;
        tr.stress_jump = tr.stress_average = sn_plus;
        return tr;
    }
    const PointSample minus = field.sample(*edge.minus_element, edge.barycentric(false, t), x);
    const CVec2 sn_minus = mul(p.stress(minus.grad), edge.normal);
    tr.jump = plus.u - minus.u;
    tr.average = 0.5 * (plus.u + minus.u);
    tr.stress_jump = sn_plus - sn_minus;
    tr.stress_average = 0.5 * (sn_plus + sn_minus);
    return tr;
}

EdgeTraces jump_and_average_traces(const Field& field, const EdgeInfo& edge, double t, const ProblemParams& p)
{
    return edge_traces(DiscreteSampler(field), field.space().mesh(), edge, t, p);
}

} // namespace elastodg
