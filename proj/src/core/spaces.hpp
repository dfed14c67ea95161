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

#include "manufactured.hpp"
#include "mesh.hpp"
#include "params.hpp"
#include "types.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace elastodg {

enum class SpaceKind
{
    Dg,    // piecewise P1, no dof shared between elements
    Fem,   // continuous P1, two dofs per vertex
};

/// Vector P1 space on a mesh. Local dofs per element are ordered
/// (vertex 0 comp 0, vertex 0 comp 1, vertex 1 comp 0, ...).
class Space
{
public:
    static constexpr int kLocalDofs = 6;

    static Space dg(std::shared_ptr<const Mesh> mesh) { return Space(std::move(mesh), SpaceKind::Dg); }
    static Space fem(std::shared_ptr<const Mesh> mesh) { return Space(std::move(mesh), SpaceKind::Fem); }

    SpaceKind kind() const { return kind_; }
    const Mesh& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh>& mesh_ptr() const { return mesh_; }

    int num_dofs() const
    {
        return kind_ == SpaceKind::Dg ? kLocalDofs * mesh_->num_elements()
                                      : 2 * static_cast<int>(mesh_->vertices.size());
    }

    int global_dof(int element, int local) const
    {
        if (kind_ == SpaceKind::Dg) return kLocalDofs * element + local;
        return 2 * mesh_->triangles[element][local / 2] + local % 2;
    }

    std::array<int, kLocalDofs> element_dofs(int element) const
    {
        std::array<int, kLocalDofs> dofs{};
        for (int l = 0; l < kLocalDofs; ++l) dofs[l] = global_dof(element, l);
        return dofs;
    }

private:
    Space(std::shared_ptr<const Mesh> mesh, SpaceKind kind);

    std::shared_ptr<const Mesh> mesh_;
    SpaceKind kind_;
};

/// Coefficient vector over a Space.
class Field
{
public:
    explicit Field(Space space);
    Field(Space space, std::vector<Complex> coefficients);

    const Space& space() const { return space_; }
    std::span<const Complex> coefficients() const { return coeffs_; }
    std::vector<Complex>& coefficients() { return coeffs_; }

    /// Values at the three vertices of an element.
    std::array<CVec2, 3> nodal_values(int element) const;
    CVec2 eval(int element, const std::array<double, 3>& bary) const;
    /// Gradient (constant on each element).
    CMat2 gradient(int element) const;
    CMat2 stress(int element, const ProblemParams& p) const { return p.stress(gradient(element)); }

    Field& operator*=(Complex s);
    friend Field operator-(const Field& a, const Field& b);
    friend Field operator+(const Field& a, const Field& b);

private:
    Space space_;
    std::vector<Complex> coeffs_;
};

/// Vertex interpolation; DG fields duplicate the vertex values across elements.
Field interpolate(const std::function<CVec2(Vec2)>& fn, const Space& space);
Field interpolate(const AnalyticField& fn, const Space& space);

/// Re-expresses a conforming field in the DG space on the same mesh.
Field to_dg(const Field& field);

/// Value and gradient of some field at a point of an element.
struct PointSample
{
    CVec2 u{};
    CMat2 grad{};
};

/// Uniform view of discrete, analytic, and difference fields for integration routines.
/// `bary` and `x` describe the same point; discrete fields read `bary`, analytic ones `x`.
class ElementSampler
{
public:
    virtual ~ElementSampler() = default;
    virtual PointSample sample(int element, const std::array<double, 3>& bary, Vec2 x) const = 0;
    /// True when the gradient is constant on every element (P1 fields).
    virtual bool piecewise_linear() const { return false; }
    virtual std::optional<Vec2> singular_point() const { return std::nullopt; }
};

class DiscreteSampler final : public ElementSampler
{
public:
    explicit DiscreteSampler(const Field& field) : field_(field) {}
    PointSample sample(int element, const std::array<double, 3>& bary, Vec2 x) const override;
    bool piecewise_linear() const override { return true; }

private:
    const Field& field_;
};

class AnalyticSampler final : public ElementSampler
{
public:
    explicit AnalyticSampler(const AnalyticField& fn) : fn_(fn) {}
    PointSample sample(int element, const std::array<double, 3>& bary, Vec2 x) const override;
    std::optional<Vec2> singular_point() const override { return fn_.singular_point(); }

private:
    const AnalyticField& fn_;
};

/// left - right.
class DifferenceSampler final : public ElementSampler
{
public:
    DifferenceSampler(const ElementSampler& left, const ElementSampler& right) : left_(left), right_(right) {}
    PointSample sample(int element, const std::array<double, 3>& bary, Vec2 x) const override;
    bool piecewise_linear() const override { return left_.piecewise_linear() && right_.piecewise_linear(); }
    std::optional<Vec2> singular_point() const override
    {
        auto s = left_.singular_point();
        return s ? s : right_.singular_point();
    }

private:
    const ElementSampler& left_;
    const ElementSampler& right_;
};

/// Jump, average, and normal-stress jump/average on an edge, oriented by jump_sign.
/// Boundary edges report the one-sided trace for both jump and average.
struct EdgeTraces
{
    CVec2 jump{};
    CVec2 average{};
    CVec2 stress_jump{};
    CVec2 stress_average{};
};

EdgeTraces edge_traces(const ElementSampler& field, const Mesh& mesh, const EdgeInfo& edge, double t, const ProblemParams& p);
EdgeTraces jump_and_average_traces(const Field& field, const EdgeInfo& edge, double t, const ProblemParams& p);

} // namespace elastodg
