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
#include "spaces.hpp"

namespace elastodg {

/// Broken norms of a field. j0 and j1 are the squared penalty energies J0(v, v), J1(v, v).
struct NormReport
{
    double seminorm_1h = 0.0;      // |v|_{1,h}
    double norm_1h = 0.0;          // ||v||_{1,h}
    double triple_norm_1h = 0.0;   // |||v|||_{1,h}
    double l2_domain = 0.0;
    double l2_boundary = 0.0;
    double j0 = 0.0;
    double j1 = 0.0;
};

inline constexpr int kDefaultErrorQuadDegree = 10;

/// Norms of any sampled field, integrated with the given quadrature degree.
NormReport compute_norms(const Mesh& mesh, const ProblemParams& p, const ElementSampler& field, int quad_degree);

/// Norms of a discrete field (P1 integrands are integrated exactly).
NormReport norms_of(const Field& field, const ProblemParams& p);

/// Norms of u - u_h for an exact solution u.
NormReport error_vs_exact(const Field& field, const ProblemParams& p, const AnalyticField& exact,
                          int quad_degree = kDefaultErrorQuadDegree);
NormReport error_vs_exact(const Field& field, const ProblemParams& p, int quad_degree = kDefaultErrorQuadDegree);

/// Norms of the exact solution itself on the given mesh (J0 = J1 = 0 up to rounding).
NormReport exact_norms(const Mesh& mesh, const ProblemParams& p, const AnalyticField& exact,
                       int quad_degree = kDefaultErrorQuadDegree);

/// sum over interior edges of <{sigma(v) n_e}, [v]>_e.
Complex interior_flux_pairing(const Field& field, const ProblemParams& p);

} // namespace elastodg
