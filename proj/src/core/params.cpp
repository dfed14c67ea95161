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
#include "params.hpp"

#include <limits>
#include <stdexcept>

namespace elastodg {

void ProblemParams::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    require(std::isfinite(omega) && omega > 0.0, "omega must be positive");
    require(rho > 0.0, "rho must be positive");
    require(lambda > 0.0, "lambda must be positive");
    require(mu > 0.0, "mu must be positive");
    require(gamma0 > 0.0, "gamma0 must be positive");
    require(gamma1 >= 0.0, "gamma1 must be nonnegative");
    require(A[0][1] == A[1][0], "impedance matrix A must be symmetric");
    const double tr = A[0][0] + A[1][1];
    const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    require(tr > 0.0 && det > 0.0, "impedance matrix A must be positive definite");
}

double ProblemParams::c_sta(double h) const
{
    const double w = omega;
    const double last = gamma1 > 0.0 ? 1.0 / (w * w * w * h * h * gamma1) : std::numeric_limits<double>::infinity();
    return xi() / w + 1.0 / (w * w * h) + last;
}

} // namespace elastodg
