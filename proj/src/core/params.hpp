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

namespace elastodg {

/// Material, boundary, and penalty parameters of the elastic Helmholtz problem.
struct ProblemParams
{
    double omega = 1.0;
    double rho = 1.0;
    double lambda = 1.0;
    double mu = 1.0;
    /// Boundary impedance matrix; must be symmetric positive definite.
    std::array<std::array<double, 2>, 2> A{{{1.0, 0.0}, {0.0, 1.0}}};
    double gamma0 = 10.0;
    double gamma1 = 0.1;
    /// Symmetrization parameter of the flux terms; only the symmetric variant is supported.
    static constexpr double eta = -1.0;

    /// Throws std::invalid_argument on omega, rho, lambda, mu, gamma0 <= 0, gamma1 < 0, or a non-SPD A.
    void validate() const;

    double xi() const { return 1.0 + 1.0 / gamma0; }

    /// xi/omega + 1/(omega^2 h) + 1/(omega^3 h^2 gamma1); +inf when gamma1 == 0.
    double c_sta(double h) const;

    CVec2 apply_A(const CVec2& v) const
    {
        return {A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1]};
    }

    /// sigma = 2 mu eps(u) + lambda div(u) I for a displacement gradient.
    CMat2 stress(const CMat2& grad) const
    {
        const CMat2 eps = symmetric_part(grad);
        const Complex div = trace(eps);
        return {{{2.0 * mu * eps[0][0] + lambda * div, 2.0 * mu * eps[0][1]},
                 {2.0 * mu * eps[1][0], 2.0 * mu * eps[1][1] + lambda * div}}};
    }
};

} // namespace elastodg
