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

#include "params.hpp"
#include "types.hpp"

#include <cstdint>
#include <optional>

namespace elastodg {

/// Pointwise value of a displacement field and its derivatives.
struct FieldSample
{
    CVec2 u{};
    CMat2 grad_u{};   // grad_u[i][j] = d u_i / d x_j
    CMat2 strain{};
    CMat2 stress{};
    CVec2 div_stress{};
};

/// A smooth vector field known in closed form, used as an exact solution.
class AnalyticField
{
public:
    virtual ~AnalyticField() = default;
    virtual FieldSample sample(Vec2 x) const = 0;
    /// Point where the field's derivatives blow up, if any. Integration routines
    /// resolve it with rules collapsed onto that point.
    virtual std::optional<Vec2> singular_point() const { return std::nullopt; }
};

/// Radius below which the radial profile switches to its Taylor series.
inline constexpr double kSeriesRadius = 1e-4;

/// u = (1/(omega^2 r)) [e^{i omega r} - 1, e^{-i omega r} - 1]^T with r = |x|.
///
/// The profile is continuous at the origin with value (i/omega, -i/omega), but its
/// gradient has a direction-dependent limit there and the second derivatives grow
/// like 1/r. At r == 0 the gradient is reported as zero and the Hessian by its finite part.
class ManufacturedSolution final : public AnalyticField
{
public:
    explicit ManufacturedSolution(const ProblemParams& params);
    FieldSample sample(Vec2 x) const override;
    std::optional<Vec2> singular_point() const override { return Vec2{0.0, 0.0}; }
    const ProblemParams& params() const { return params_; }

private:
    ProblemParams params_;
};

/// u(x) = c + B x; stress is constant and div(stress) vanishes.
class AffineField final : public AnalyticField
{
public:
    AffineField(const CVec2& c, const CMat2& B, const ProblemParams& params);
    FieldSample sample(Vec2 x) const override;

private:
    CVec2 c_;
    CMat2 B_;
    CMat2 stress_;
};

CVec2 exact_u(Vec2 x, const ProblemParams& p);
FieldSample exact_fields(Vec2 x, const ProblemParams& p);

/// f = -omega^2 rho u - div sigma(u).
CVec2 source_f(const FieldSample& s, const ProblemParams& p);
CVec2 source_f(Vec2 x, const ProblemParams& p);

/// g = i omega A u + sigma(u) n.
CVec2 boundary_g(const FieldSample& s, Vec2 normal, const ProblemParams& p);
CVec2 boundary_g(Vec2 x, Vec2 normal, const ProblemParams& p);

/// Largest absolute deviations between analytic derivatives and central differences.
struct SelfCheckReport
{
    int samples = 0;
    double step = 0.0;
    double grad_u = 0.0;
    double stress = 0.0;
    double div_stress = 0.0;
    double source_f = 0.0;
    double boundary_g = 0.0;

    double max() const;
};

/// Compares every analytic derivative of the manufactured solution against
/// central finite differences at `samples` Halton points of the domain with r >= 0.05.
/// `step <= 0` picks min(1e-6, 5e-6 / omega).
SelfCheckReport self_check(const ProblemParams& p, int samples, std::uint32_t seed = 0, double step = 0.0);

} // namespace elastodg
