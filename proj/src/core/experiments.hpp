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

#include "norms.hpp"
#include "params.hpp"
#include "solver.hpp"
#include "spaces.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace elastodg {

enum class Study
{
    Stability,
    Convergence,
    Pollution,
    Compare,
    Single,
};

enum class MethodSelection
{
    Dg,
    Fem,
    Both,
};

Study parse_study(const std::string& name);
std::string study_name(Study study);
MethodSelection parse_method(const std::string& name);

/// Mesh refinement rule tied to the frequency: omega h = c, or omega^3 h^2 = c.
struct PollutionRule
{
    enum class Kind
    {
        OmegaH,
        Omega3H2,
    };
    Kind kind = Kind::OmegaH;
    double c = 1.0;

    /// Smallest n whose h = 1/n satisfies the rule with "<=" (n rounded up).
    int mesh_size(double omega) const;
    std::string label() const;
    /// Accepts "wh=<c>" / "omega*h=<c>" and "w3h2=<c>" / "omega^3*h^2=<c>".
    static PollutionRule parse(const std::string& text);
};

struct ExperimentConfig
{
    Study study = Study::Single;
    std::vector<double> omegas;
    std::vector<int> ns;
    std::vector<PollutionRule> rules;
    ProblemParams params;
    int quad_degree = 10;
    SolveOptions solve;
    MethodSelection methods = MethodSelection::Both;
    std::uint64_t seed = 0;
    int compare_points = 1000;
    /// Worker cap; 0 reads ELASTODG_THREADS and falls back to the hardware count.
    int threads = 0;

    void validate() const;
};

struct ExperimentRecord
{
    std::string study;
    std::string method;   // "dg" or "fem"
    double omega = 0.0;
    int n = 0;
    double h = 0.0;
    int dofs = 0;
    double rel_err_h1semi = 0.0;
    double rel_err_l2 = 0.0;
    double norm_1h = 0.0;
    double j0 = 0.0;
    double j1 = 0.0;
    double c_sta = 0.0;
    double residual = 0.0;
    double assemble_ms = 0.0;
    double solve_ms = 0.0;
};

inline constexpr const char* kCsvHeader =
    "study,method,omega,n,h,dofs,rel_err_h1semi,rel_err_l2,norm_1h,j0,j1,c_sta,residual,assemble_ms,solve_ms";

/// Least-squares slopes of log(relative error) against log(h) for one method and frequency.
struct ConvergenceFit
{
    std::string method;
    double omega = 0.0;
    double slope_h1semi = 0.0;
    double slope_l2 = 0.0;
};

/// |Re u| along the diagonal y = x for the exact field and each computed solution.
struct CrossSectionRow
{
    double omega = 0.0;
    int n = 0;
    double x = 0.0;
    double y = 0.0;
    double exact = 0.0;
    std::optional<double> dg;
    std::optional<double> fem;
};

/// Field values at element centroids.
struct CentroidSample
{
    std::string method;
    double x = 0.0;
    double y = 0.0;
    CVec2 u{};
};

struct SingleRun
{
    ExperimentRecord record;
    NormReport error;        // of u - u_h
    NormReport solution;     // of u_h
    int iterations = 0;
    std::string solver;
};

struct StudyResult
{
    std::vector<ExperimentRecord> records;
    std::vector<ConvergenceFit> fits;
    std::vector<CrossSectionRow> cross_section;
    std::vector<CentroidSample> centroids;
    std::vector<SingleRun> singles;
};

/// One full solve with error evaluation against the manufactured solution.
/// `field_out`, if given, receives the computed field.
SingleRun run_case(const std::string& study, SpaceKind kind, const ProblemParams& p, int n, int quad_degree,
                   const SolveOptions& options, std::optional<Field>* field_out = nullptr);

StudyResult run_stability(const ExperimentConfig& config);
StudyResult run_convergence(const ExperimentConfig& config);
StudyResult run_pollution(const ExperimentConfig& config);
StudyResult run_compare(const ExperimentConfig& config);
StudyResult run_single(const ExperimentConfig& config);
StudyResult run_study(const ExperimentConfig& config);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Worker count: `requested` if positive, else ELASTODG_THREADS, else the hardware count.
int resolve_threads(int requested);

void sort_records(std::vector<ExperimentRecord>& records);
void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& records);
void write_cross_section_csv(std::ostream& os, const std::vector<CrossSectionRow>& rows);
void write_centroids_csv(std::ostream& os, const std::vector<CentroidSample>& samples);
/// Line plot of the study's headline quantity.
void write_svg(std::ostream& os, Study study, const StudyResult& result);

} // namespace elastodg
