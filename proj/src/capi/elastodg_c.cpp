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
#include "elastodg/elastodg.h"

#include "assembly.hpp"
#include "experiments.hpp"
#include "manufactured.hpp"
#include "mesh.hpp"
#include "norms.hpp"
#include "solver.hpp"
#include "spaces.hpp"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

using namespace elastodg;

struct edg_mesh
{
    std::shared_ptr<const Mesh> mesh;
};

struct edg_system
{
    System system;
};

struct edg_field
{
    Field field;
};

struct edg_study_result
{
    Study study;
    StudyResult result;
};

namespace {

thread_local std::string last_error;

edg_status fail(edg_status status, const std::string& message)
{
    last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
edg_status guarded(Body&& body)
{
    try {
        body();
        last_error.clear();
        return EDG_OK;
    } catch (const SingularMatrixError& e) {
        return fail(EDG_ERR_SINGULAR, e.what());
    } catch (const NotConvergedError& e) {
        return fail(EDG_ERR_NOT_CONVERGED, e.what());
    } catch (const std::out_of_range& e) {
        return fail(EDG_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EDG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(EDG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(EDG_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EDG_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(EDG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EDG_ERR_INTERNAL, "unknown error");
    }
}

void require(bool condition, const char* message)
{
    if (!condition) throw std::invalid_argument(message);
}

ProblemParams to_params(const edg_params* in)
{
    require(in != nullptr, "params is NULL");
    ProblemParams p;
    p.omega = in->omega;
    p.rho = in->rho;
    p.lambda = in->lambda;
    p.mu = in->mu;
    p.A = {{{in->A[0], in->A[1]}, {in->A[2], in->A[3]}}};
    p.gamma0 = in->gamma0;
    p.gamma1 = in->gamma1;
    p.validate();
    return p;
}

SolveOptions to_options(const edg_solve_options* in)
{
    SolveOptions o;
    if (!in) return o;
    o.tol = in->tol;
    switch (in->method) {
    case EDG_SOLVER_AUTOMATIC: o.method = SolverMethod::Automatic; break;
    case EDG_SOLVER_DIRECT: o.method = SolverMethod::Direct; break;
    case EDG_SOLVER_ITERATIVE: o.method = SolverMethod::Iterative; break;
    default: throw std::invalid_argument("unknown solver method");
    }
    o.restart = in->restart;
    o.max_iterations = in->max_iterations;
    require(o.restart > 0 && o.max_iterations > 0, "restart and max_iterations must be positive");
    return o;
}

void to_report(const NormReport& r, edg_norm_report* out)
{
    out->seminorm_1h = r.seminorm_1h;
    out->norm_1h = r.norm_1h;
    out->triple_norm_1h = r.triple_norm_1h;
    out->l2_domain = r.l2_domain;
    out->l2_boundary = r.l2_boundary;
    out->j0 = r.j0;
    out->j1 = r.j1;
}

void copy_string(char* dst, size_t size, const std::string& src)
{
    const size_t n = std::min(size - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

std::ofstream open_output(const char* path)
{
    require(path != nullptr && *path != '\0', "output path is empty");
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure(std::string("cannot open '") + path + "' for writing");
    return os;
}

void finish_output(std::ofstream& os, const char* path)
{
    os.close();
    if (!os) throw std::ios_base::failure(std::string("failed writing '") + path + "'");
}

} // namespace

extern "C" {

const char* edg_version(void)
{
    return "1.0.0";
}

const char* edg_last_error(void)
{
    return last_error.c_str();
}

const char* edg_status_string(edg_status status)
{
    switch (status) {
    case EDG_OK: return "ok";
    case EDG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EDG_ERR_OUT_OF_RANGE: return "out of range";
    case EDG_ERR_SINGULAR: return "singular matrix";
    case EDG_ERR_NOT_CONVERGED: return "not converged";
    case EDG_ERR_IO: return "i/o error";
    case EDG_ERR_OUT_OF_MEMORY: return "out of memory";
    case EDG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void edg_params_default(edg_params* params)
{
    if (!params) return;
    const ProblemParams p;
    params->omega = p.omega;
    params->rho = p.rho;
    params->lambda = p.lambda;
    params->mu = p.mu;
    params->A[0] = p.A[0][0];
    params->A[1] = p.A[0][1];
    params->A[2] = p.A[1][0];
    params->A[3] = p.A[1][1];
    params->gamma0 = p.gamma0;
    params->gamma1 = p.gamma1;
}

edg_status edg_params_validate(const edg_params* params)
{
    return guarded([&] { to_params(params); });
}

edg_status edg_params_xi(const edg_params* params, double* xi)
{
    return guarded([&] {
        require(xi != nullptr, "output is NULL");
        *xi = to_params(params).xi();
    });
}

edg_status edg_params_c_sta(const edg_params* params, double h, double* c_sta)
{
    return guarded([&] {
        require(c_sta != nullptr, "output is NULL");
        require(h > 0.0, "h must be positive");
        *c_sta = to_params(params).c_sta(h);
    });
}

edg_status edg_exact_u(const edg_params* params, double x, double y, double u[4])
{
    return guarded([&] {
        require(u != nullptr, "output is NULL");
        const CVec2 v = exact_u({x, y}, to_params(params));
        u[0] = v[0].real();
        u[1] = v[0].imag();
        u[2] = v[1].real();
        u[3] = v[1].imag();
    });
}

edg_status edg_self_check(const edg_params* params, int samples, uint64_t seed, double* max_deviation)
{
    return guarded([&] {
        require(max_deviation != nullptr, "output is NULL");
        require(samples >= 1, "samples must be >= 1");
        *max_deviation = self_check(to_params(params), samples, static_cast<std::uint32_t>(seed)).max();
    });
}

edg_status edg_mesh_create(int n, edg_mesh** mesh)
{
    return guarded([&] {
        require(mesh != nullptr, "output is NULL");
        *mesh = nullptr;
        *mesh = new edg_mesh{std::make_shared<const Mesh>(Mesh::build_uniform(n))};
    });
}

void edg_mesh_destroy(edg_mesh* mesh)
{
    delete mesh;
}

edg_status edg_mesh_info_get(const edg_mesh* mesh, edg_mesh_info* info)
{
    return guarded([&] {
        require(mesh != nullptr && info != nullptr, "NULL argument");
        const Mesh& m = *mesh->mesh;
        info->n = m.n;
        info->h = m.h;
        info->num_vertices = static_cast<int64_t>(m.vertices.size());
        info->num_triangles = static_cast<int64_t>(m.triangles.size());
        info->num_interior_edges = static_cast<int64_t>(m.interior_edges.size());
        info->num_boundary_edges = static_cast<int64_t>(m.boundary_edges.size());
    });
}

edg_status edg_mesh_write(const edg_mesh* mesh, const char* path)
{
    return guarded([&] {
        require(mesh != nullptr, "mesh is NULL");
        auto os = open_output(path);
        mesh->mesh->write(os);
        finish_output(os, path);
    });
}

edg_status edg_consistency_residual(const edg_mesh* mesh, const edg_params* params, int quad_degree, double* residual)
{
    return guarded([&] {
        require(mesh != nullptr && residual != nullptr, "NULL argument");
        *residual = consistency_residual(*mesh->mesh, to_params(params), quad_degree);
    });
}

edg_status edg_exact_norms(const edg_mesh* mesh, const edg_params* params, int quad_degree, edg_norm_report* report)
{
    return guarded([&] {
        require(mesh != nullptr && report != nullptr, "NULL argument");
        const ProblemParams p = to_params(params);
        to_report(exact_norms(*mesh->mesh, p, ManufacturedSolution(p), quad_degree), report);
    });
}

edg_status edg_system_assemble(const edg_mesh* mesh, edg_space_kind kind, const edg_params* params, int quad_degree,
                               edg_system** system)
{
    return guarded([&] {
        require(mesh != nullptr && system != nullptr, "NULL argument");
        *system = nullptr;
        require(kind == EDG_SPACE_DG || kind == EDG_SPACE_FEM, "unknown space kind");
        const ProblemParams p = to_params(params);
        const Space space = kind == EDG_SPACE_DG ? Space::dg(mesh->mesh) : Space::fem(mesh->mesh);
        *system = new edg_system{assemble_system(space, p, ManufacturedSolution(p), quad_degree)};
    });
}

void edg_system_destroy(edg_system* system)
{
    delete system;
}

edg_status edg_system_info_get(const edg_system* system, edg_system_info* info)
{
    return guarded([&] {
        require(system != nullptr && info != nullptr, "NULL argument");
        info->dofs = system->system.space.num_dofs();
        info->nnz = static_cast<int64_t>(system->system.matrix.nnz());
        info->assemble_ms = system->system.stats.assemble_ms;
    });
}

edg_status edg_system_write_matrix_market(const edg_system* system, const char* path)
{
    return guarded([&] {
        require(system != nullptr, "system is NULL");
        auto os = open_output(path);
        system->system.matrix.write_matrix_market(os);
        finish_output(os, path);
    });
}

void edg_solve_options_default(edg_solve_options* options)
{
    if (!options) return;
    const SolveOptions o;
    options->tol = o.tol;
    options->method = EDG_SOLVER_AUTOMATIC;
    options->restart = o.restart;
    options->max_iterations = o.max_iterations;
}

edg_status edg_solve(const edg_system* system, const edg_solve_options* options, edg_field** solution,
                     edg_solve_report* report)
{
    return guarded([&] {
        require(system != nullptr && solution != nullptr, "NULL argument");
        *solution = nullptr;
        const System& sys = system->system;
        SolveReport r = solve(sys.matrix, sys.rhs, to_options(options));
        if (report) {
            report->relative_residual = r.relative_residual;
            report->iterations = r.iterations;
            report->solve_ms = r.solve_ms;
            copy_string(report->method, sizeof report->method, r.method);
        }
        *solution = new edg_field{Field(sys.space, std::move(r.solution))};
    });
}

void edg_field_destroy(edg_field* field)
{
    delete field;
}

edg_status edg_field_size(const edg_field* field, int64_t* dofs)
{
    return guarded([&] {
        require(field != nullptr && dofs != nullptr, "NULL argument");
        *dofs = static_cast<int64_t>(field->field.coefficients().size());
    });
}

edg_status edg_field_coefficients(const edg_field* field, double* values, size_t count)
{
    return guarded([&] {
        require(field != nullptr && values != nullptr, "NULL argument");
        const auto c = field->field.coefficients();
        if (count < 2 * c.size()) throw std::out_of_range("coefficient buffer too small");
        for (size_t i = 0; i < c.size(); ++i) {
            values[2 * i] = c[i].real();
            values[2 * i + 1] = c[i].imag();
        }
    });
}

edg_status edg_field_eval(const edg_field* field, int64_t element, const double bary[3], double u[4])
{
    return guarded([&] {
        require(field != nullptr && bary != nullptr && u != nullptr, "NULL argument");
        if (element < 0 || element >= field->field.space().mesh().num_elements())
            throw std::out_of_range("element index out of range");
        const CVec2 v = field->field.eval(static_cast<int>(element), {bary[0], bary[1], bary[2]});
        u[0] = v[0].real();
        u[1] = v[0].imag();
        u[2] = v[1].real();
        u[3] = v[1].imag();
    });
}

edg_status edg_field_norms(const edg_field* field, const edg_params* params, edg_norm_report* report)
{
    return guarded([&] {
        require(field != nullptr && report != nullptr, "NULL argument");
        to_report(norms_of(field->field, to_params(params)), report);
    });
}

edg_status edg_field_error(const edg_field* field, const edg_params* params, int quad_degree, edg_norm_report* report)
{
    return guarded([&] {
        require(field != nullptr && report != nullptr, "NULL argument");
        to_report(error_vs_exact(field->field, to_params(params), quad_degree), report);
    });
}

void edg_study_config_default(edg_study_config* config)
{
    if (!config) return;
    std::memset(config, 0, sizeof *config);
    config->study = EDG_STUDY_SINGLE;
    edg_params_default(&config->params);
    config->quad_degree = kDefaultRhsQuadDegree;
    edg_solve_options_default(&config->solve);
    config->methods = EDG_METHODS_BOTH;
    config->compare_points = 1000;
}

edg_status edg_pollution_mesh_size(const char* rule, double omega, int* n)
{
    return guarded([&] {
        require(rule != nullptr && n != nullptr, "NULL argument");
        *n = PollutionRule::parse(rule).mesh_size(omega);
    });
}

edg_status edg_run_study(const edg_study_config* config, edg_study_result** result)
{
    return guarded([&] {
        require(config != nullptr && result != nullptr, "NULL argument");
        *result = nullptr;
        require(config->num_omegas == 0 || config->omegas != nullptr, "omegas is NULL");
        require(config->num_ns == 0 || config->ns != nullptr, "ns is NULL");
        require(config->num_rules == 0 || config->rules != nullptr, "rules is NULL");
        ExperimentConfig c;
        switch (config->study) {
        case EDG_STUDY_STABILITY: c.study = Study::Stability; break;
        case EDG_STUDY_CONVERGENCE: c.study = Study::Convergence; break;
        case EDG_STUDY_POLLUTION: c.study = Study::Pollution; break;
        case EDG_STUDY_COMPARE: c.study = Study::Compare; break;
        case EDG_STUDY_SINGLE: c.study = Study::Single; break;
        default: throw std::invalid_argument("unknown study");
        }
        switch (config->methods) {
        case EDG_METHODS_DG: c.methods = MethodSelection::Dg; break;
        case EDG_METHODS_FEM: c.methods = MethodSelection::Fem; break;
        case EDG_METHODS_BOTH: c.methods = MethodSelection::Both; break;
        default: throw std::invalid_argument("unknown method selection");
        }
        c.omegas.assign(config->omegas, config->omegas + config->num_omegas);
        c.ns.assign(config->ns, config->ns + config->num_ns);
        for (size_t i = 0; i < config->num_rules; ++i) {
            require(config->rules[i] != nullptr, "rule is NULL");
            c.rules.push_back(PollutionRule::parse(config->rules[i]));
        }
        c.params = to_params(&config->params);
        c.quad_degree = config->quad_degree;
        c.solve = to_options(&config->solve);
        c.seed = config->seed;
        c.compare_points = config->compare_points;
        c.threads = config->threads;
        auto out = std::make_unique<edg_study_result>();
        out->study = c.study;
        out->result = run_study(c);
        *result = out.release();
    });
}

void edg_study_result_destroy(edg_study_result* result)
{
    delete result;
}

size_t edg_study_result_num_records(const edg_study_result* result)
{
    return result ? result->result.records.size() : 0;
}

edg_status edg_study_result_record(const edg_study_result* result, size_t index, edg_record* record)
{
    return guarded([&] {
        require(result != nullptr && record != nullptr, "NULL argument");
        if (index >= result->result.records.size()) throw std::out_of_range("record index out of range");
        const ExperimentRecord& r = result->result.records[index];
        copy_string(record->study, sizeof record->study, r.study);
        copy_string(record->method, sizeof record->method, r.method);
        record->omega = r.omega;
        record->n = r.n;
        record->h = r.h;
        record->dofs = r.dofs;
        record->rel_err_h1semi = r.rel_err_h1semi;
        record->rel_err_l2 = r.rel_err_l2;
        record->norm_1h = r.norm_1h;
        record->j0 = r.j0;
        record->j1 = r.j1;
        record->c_sta = r.c_sta;
        record->residual = r.residual;
        record->assemble_ms = r.assemble_ms;
        record->solve_ms = r.solve_ms;
    });
}

size_t edg_study_result_num_fits(const edg_study_result* result)
{
    return result ? result->result.fits.size() : 0;
}

edg_status edg_study_result_fit(const edg_study_result* result, size_t index, edg_fit* fit)
{
    return guarded([&] {
        require(result != nullptr && fit != nullptr, "NULL argument");
        if (index >= result->result.fits.size()) throw std::out_of_range("fit index out of range");
        const ConvergenceFit& f = result->result.fits[index];
        copy_string(fit->method, sizeof fit->method, f.method);
        fit->omega = f.omega;
        fit->slope_h1semi = f.slope_h1semi;
        fit->slope_l2 = f.slope_l2;
    });
}

edg_status edg_study_result_write_csv(const edg_study_result* result, const char* path)
{
    return guarded([&] {
        require(result != nullptr, "result is NULL");
        auto os = open_output(path);
        write_records_csv(os, result->result.records);
        finish_output(os, path);
    });
}

edg_status edg_study_result_write_samples(const edg_study_result* result, const char* path)
{
    return guarded([&] {
        require(result != nullptr, "result is NULL");
        const StudyResult& r = result->result;
        require(!r.cross_section.empty() || !r.centroids.empty(), "this study produced no samples");
        auto os = open_output(path);
        if (!r.cross_section.empty())
            write_cross_section_csv(os, r.cross_section);
        else
            write_centroids_csv(os, r.centroids);
        finish_output(os, path);
    });
}

edg_status edg_study_result_write_svg(const edg_study_result* result, const char* path)
{
    return guarded([&] {
        require(result != nullptr, "result is NULL");
        auto os = open_output(path);
        write_svg(os, result->study, result->result);
        finish_output(os, path);
    });
}

} // extern "C"
