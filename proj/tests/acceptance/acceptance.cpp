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
// Acceptance driver: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
// Usage: acceptance [criterion numbers...]; no arguments runs all twelve.

#include "assembly.hpp"
#include "experiments.hpp"
#include "manufactured.hpp"
#include "norms.hpp"
#include "quadrature.hpp"
#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>

using namespace elastodg;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string format(const char* fmt, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

double relative_gap(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Field random_field(const Space& space, std::mt19937_64& rng)
{
    std::normal_distribution<double> dist;
    std::vector<Complex> c(space.num_dofs());
    for (auto& z : c) z = {dist(rng), dist(rng)};
    return Field(space, std::move(c));
}

ProblemParams with_omega(double omega)
{
    ProblemParams p;
    p.omega = omega;
    return p;
}

// <A v, v>_Gamma evaluated edge by edge.
Complex boundary_pairing(const Field& v, const ProblemParams& p)
{
    const QuadRule& seg = segment_rule(2);
    Complex total = 0.0;
    for (const auto& e : v.space().mesh().boundary_edges)
        for (size_t q = 0; q < seg.size(); ++q) {
            const CVec2 val = v.eval(e.plus_element, e.barycentric(true, seg.points[q][0]));
            total += seg.weights[q] * e.length * inner(p.apply_A(val), val);
        }
    return total;
}

ExperimentConfig config_for(Study study)
{
    ExperimentConfig c;
    c.study = study;
    c.threads = 1;
    return c;
}

const ExperimentRecord& find_record(const std::vector<ExperimentRecord>& records, const std::string& study,
                                    const std::string& method, double omega)
{
    for (const auto& r : records)
        if (r.study == study && r.method == method && r.omega == omega) return r;
    throw std::runtime_error("missing record " + study + " " + method);
}

Outcome imaginary_part_identity()
{
    std::mt19937_64 rng(101);
    const Space s = Space::dg(std::make_shared<const Mesh>(Mesh::build_uniform(8)));
    double worst = 0.0;
    for (double w : {1.0, 10.0, 100.0}) {
        const ProblemParams p = with_omega(w);
        const CsrMatrix m = assemble_operator(s, p, FormParts::dg());
        for (int t = 0; t < 100; ++t) {
            const Field v = random_field(s, rng);
            const NormReport r = norms_of(v, p);
            const double lhs = m.form(v.coefficients(), v.coefficients()).imag();
            worst = std::max(worst, relative_gap(lhs, r.j0 + r.j1 + w * boundary_pairing(v, p).real()));
        }
    }
    return {worst <= 1e-12, format("max relative deviation %.3e (limit 1e-12)", worst)};
}

Outcome real_part_identity()
{
    // Re A_h(v, v) is indefinite and can be a small remainder of large terms, so the
    // deviation is measured against the largest term of the identity.
    std::mt19937_64 rng(102);
    const Space s = Space::dg(std::make_shared<const Mesh>(Mesh::build_uniform(8)));
    double worst = 0.0;
    double worst_vs_value = 0.0;
    for (double w : {1.0, 10.0, 100.0}) {
        const ProblemParams p = with_omega(w);
        const CsrMatrix m = assemble_operator(s, p, FormParts::dg());
        for (int t = 0; t < 100; ++t) {
            const Field v = random_field(s, rng);
            const NormReport r = norms_of(v, p);
            const double lhs = m.form(v.coefficients(), v.coefficients()).real();
            const double energy = r.seminorm_1h * r.seminorm_1h;
            const double mass = w * w * p.rho * r.l2_domain * r.l2_domain;
            const double flux = 2.0 * interior_flux_pairing(v, p).real();
            const double rhs = energy - mass - flux;
            const double scale = std::max({std::abs(lhs), energy, mass, std::abs(flux)});
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
            worst_vs_value = std::max(worst_vs_value, relative_gap(lhs, rhs));
        }
    }
    return {worst <= 1e-12, format("max deviation / largest term %.3e (limit 1e-12); vs value %.3e", worst,
                                   worst_vs_value)};
}

Outcome hermitian_split()
{
    std::mt19937_64 rng(103);
    std::normal_distribution<double> dist;
    const Space s = Space::dg(std::make_shared<const Mesh>(Mesh::build_uniform(8)));
    const CsrMatrix m = assemble_operator(s, with_omega(10.0), FormParts::dg());
    const CsrMatrix adj = m.adjoint();
    double worst = INFINITY;
    for (int t = 0; t < 100; ++t) {
        std::vector<Complex> z(m.rows);
        for (auto& c : z) c = {dist(rng), dist(rng)};
        const double zz = std::pow(l2_norm(z), 2);
        const Complex h2 = (m.form(z, z) - adj.form(z, z)) / Complex(0.0, 2.0);
        worst = std::min(worst, h2.real() / zz);
    }
    return {worst >= -1e-12, format("min Re(z*H2z)/|z|^2 = %.3e (limit -1e-12)", worst)};
}

Outcome galerkin_orthogonality()
{
    std::mt19937_64 rng(104);
    const auto mesh = std::make_shared<const Mesh>(Mesh::build_uniform(16));
    const Space s = Space::dg(mesh);
    const ProblemParams p = with_omega(5.0);
    const ManufacturedSolution u(p);
    const System sys = assemble_elliptic_projection(s, p, u, kDefaultRhsQuadDegree);
    const Field proj(s, solve(sys.matrix, sys.rhs).solution);
    const AnalyticSampler exact(u);
    const DiscreteSampler discrete(proj);
    const DifferenceSampler diff(exact, discrete);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Field v = random_field(s, rng);
        const DiscreteSampler vs(v);
        const double scale = std::abs(apply_form(*mesh, p, exact, vs, FormParts::elliptic(), kDefaultRhsQuadDegree));
        const double residual = std::abs(apply_form(*mesh, p, diff, vs, FormParts::elliptic(), kDefaultRhsQuadDegree));
        worst = std::max(worst, residual / scale);
    }
    return {worst <= 1e-9, format("max residual/scale %.3e (limit 1e-9)", worst)};
}

Outcome norm_ordering()
{
    std::mt19937_64 rng(105);
    const Space s = Space::dg(std::make_shared<const Mesh>(Mesh::build_uniform(8)));
    const ProblemParams p;
    double worst = -INFINITY;
    for (int t = 0; t < 100; ++t) {
        const NormReport r = norms_of(random_field(s, rng), p);
        worst = std::max(worst, (r.norm_1h - r.triple_norm_1h) / r.triple_norm_1h);
    }
    return {worst <= 1e-14, format("max (|v|_1h - |||v|||_1h)/|||v|||_1h = %.3e", worst)};
}

Outcome consistency()
{
    const Mesh mesh = Mesh::build_uniform(8);
    const ProblemParams p = with_omega(5.0);
    const double r4 = consistency_residual(mesh, p, 4);
    const double r10 = consistency_residual(mesh, p, 10);
    return {r4 / r10 >= 10.0, format("residual %.3e (q=4) -> %.3e (q=10), drop %.1fx (need 10x)", r4, r10, r4 / r10)};
}

Outcome convergence()
{
    ExperimentConfig c = config_for(Study::Convergence);
    c.omegas = {5.0};
    c.ns = {8, 16, 32, 64};
    c.methods = MethodSelection::Dg;
    const StudyResult r = run_study(c);
    const ConvergenceFit& f = r.fits.at(0);
    const bool pass = std::abs(f.slope_h1semi - 1.0) <= 0.15 && std::abs(f.slope_l2 - 2.0) <= 0.25;
    return {pass, format("H1-seminorm slope %.3f (1.0 +- 0.15), L2 slope %.3f (2.0 +- 0.25)", f.slope_h1semi, f.slope_l2)};
}

Outcome solvability()
{
    ExperimentConfig c = config_for(Study::Stability);
    c.omegas = {1.0, 5.0, 10.0, 25.0, 50.0, 100.0, 150.0, 200.0};
    c.ns = {20, 100};
    c.methods = MethodSelection::Dg;
    const StudyResult r = run_study(c);
    double worst = 0.0;
    bool finite = true;
    for (const auto& rec : r.records) {
        worst = std::max(worst, rec.residual);
        for (double v : {rec.rel_err_h1semi, rec.rel_err_l2, rec.norm_1h, rec.j0, rec.j1, rec.c_sta})
            finite = finite && std::isfinite(v);
    }
    const bool pass = r.records.size() == 16 && worst <= 1e-10 && finite;
    return {pass, format("%zu solves, max residual %.3e (limit 1e-10), norms %s", r.records.size(), worst,
                         finite ? "finite" : "NOT finite")};
}

Outcome pollution_presence()
{
    ExperimentConfig c = config_for(Study::Pollution);
    c.omegas = {10.0, 20.0, 40.0};
    c.rules = {PollutionRule{PollutionRule::Kind::OmegaH, 0.5}};
    c.methods = MethodSelection::Dg;
    const StudyResult r = run_study(c);
    std::vector<double> e;
    for (double w : c.omegas) e.push_back(find_record(r.records, "pollution:wh=0.5", "dg", w).rel_err_h1semi);
    int inversions = 0;
    bool small = true;
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] < e[i - 1]) {
            ++inversions;
            small = small && e[i] >= 0.95 * e[i - 1];
        }
    return {inversions <= 1 && small && e.back() > e.front(),
            format("relative seminorm errors %.4f, %.4f, %.4f at omega 10, 20, 40", e[0], e[1], e[2])};
}

Outcome pollution_elimination()
{
    ExperimentConfig c = config_for(Study::Pollution);
    c.omegas = {10.0, 40.0};
    c.rules = {PollutionRule{PollutionRule::Kind::Omega3H2, 1.0}};
    c.methods = MethodSelection::Dg;
    const StudyResult r = run_study(c);
    const double e10 = find_record(r.records, "pollution:w3h2=1", "dg", 10.0).rel_err_h1semi;
    const double e40 = find_record(r.records, "pollution:w3h2=1", "dg", 40.0).rel_err_h1semi;
    return {e40 <= 1.5 * e10, format("relative seminorm error %.4f (omega 10, n 32) vs %.4f (omega 40, n 253), ratio %.3f "
                                     "(limit 1.5)", e10, e40, e40 / e10)};
}

Outcome dg_beats_fem()
{
    ExperimentConfig c = config_for(Study::Compare);
    c.omegas = {100.0};
    c.ns = {120};
    const StudyResult r = run_study(c);
    const double dg = find_record(r.records, "compare", "dg", 100.0).rel_err_l2;
    const double fem = find_record(r.records, "compare", "fem", 100.0).rel_err_l2;
    return {dg < fem, format("relative L2 error DG %.4f vs FEM %.4f", dg, fem)};
}

Outcome self_check_criterion()
{
    const SelfCheckReport r = self_check(with_omega(5.0), 100, 12);
    return {r.max() < 1e-5, format("max deviation %.3e over %d samples (limit 1e-5)", r.max(), r.samples)};
}

struct Criterion
{
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {1, "imaginary-part-identity", imaginary_part_identity},
        {2, "real-part-identity", real_part_identity},
        {3, "hermitian-split", hermitian_split},
        {4, "elliptic-projection-orthogonality", galerkin_orthogonality},
        {5, "norm-ordering", norm_ordering},
        {6, "consistency-quadrature-refinement", consistency},
        {7, "convergence-rates", convergence},
        {8, "unconditional-solvability", solvability},
        {9, "pollution-presence", pollution_presence},
        {10, "pollution-elimination", pollution_elimination},
        {11, "dg-beats-fem-high-frequency", dg_beats_fem},
        {12, "manufactured-self-check", self_check_criterion},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
