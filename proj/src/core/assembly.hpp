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
#include "params.hpp"
#include "sparse.hpp"
#include "spaces.hpp"

#include <vector>

namespace elastodg {

/// Selects the pieces of the sesquilinear form
///   A_h(u, v) = b_h(u, v) + i (J0(u, v) + J1(u, v)) - omega^2 rho (u, v) + i omega <A u, v>_Gamma
/// where b_h holds the elementwise elastic energy and the interior flux terms.
struct FormParts
{
    bool stiffness = true;   // sum_K lambda (div u, div v) + 2 mu (eps(u), eps(v))
    bool flux = true;        // -<{sigma(u) n}, [v]> + eta <[u], {sigma(v) n}> on interior edges
    bool penalty = true;     // i J0 + i J1 on interior edges
    bool mass = true;        // -omega^2 rho (u, v)
    bool boundary = true;    // i omega <A u, v> on the boundary

    static FormParts dg() { return {}; }
    static FormParts fem() { return {true, false, false, true, true}; }
    /// a_h + i omega <A., .>, the operator of the elliptic projection.
    static FormParts elliptic() { return {true, true, true, false, true}; }
};

inline constexpr int kOperatorQuadDegree = 2;
inline constexpr int kDefaultRhsQuadDegree = 10;

struct AssemblyStats
{
    int nnz = 0;
    double assemble_ms = 0.0;
};

/// Assembled linear system; matrix[row = test dof][col = trial dof].
struct System
{
    CsrMatrix matrix;
    std::vector<Complex> rhs;
    Space space;
    ProblemParams params;
    AssemblyStats stats;
};

/// Matrix of the selected form over the basis of `space`.
CsrMatrix assemble_operator(const Space& space, const ProblemParams& p, FormParts parts);

/// Vector l_a = A_h(left, phi_a) over the basis functions of `space`.
std::vector<Complex> assemble_load(const Space& space, const ProblemParams& p, const ElementSampler& left,
                                   FormParts parts, int quad_degree);

/// Vector (f, phi_a) + <g, phi_a>_Gamma with f and g derived from `exact`.
std::vector<Complex> assemble_rhs(const Space& space, const ProblemParams& p, const AnalyticField& exact, int quad_degree);

/// IP-DG system for the manufactured solution.
System assemble_dg(const Space& space, const ProblemParams& p, int quad_rhs_degree = kDefaultRhsQuadDegree);
/// Conforming P1 system for the manufactured solution.
System assemble_fem(const Space& space, const ProblemParams& p, int quad_rhs_degree = kDefaultRhsQuadDegree);
/// Either of the two above, chosen by the space kind.
System assemble_system(const Space& space, const ProblemParams& p, const AnalyticField& exact,
                       int quad_rhs_degree = kDefaultRhsQuadDegree);

/// Elliptic projection of `target` onto the DG space.
System assemble_elliptic_projection(const Space& space, const ProblemParams& p, const AnalyticField& target,
                                    int quad_degree = kDefaultRhsQuadDegree);

/// Matrix-free A_h(left, right), evaluated pointwise from field values and gradients.
Complex apply_form(const Mesh& mesh, const ProblemParams& p, const ElementSampler& left, const ElementSampler& right,
                   FormParts parts = FormParts::dg(), int quad_degree = kOperatorQuadDegree);
Complex apply_form(const ProblemParams& p, const Field& left, const Field& right, FormParts parts = FormParts::dg());

/// max_a |A_h(u, phi_a) - (f, phi_a) - <g, phi_a>| over the DG basis for an exact solution u.
double consistency_residual(const Space& space, const ProblemParams& p, const AnalyticField& exact, int quad_degree);
double consistency_residual(const Mesh& mesh, const ProblemParams& p, int quad_degree);

} // namespace elastodg
