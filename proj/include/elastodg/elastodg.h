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
#ifndef ELASTODG_ELASTODG_H
#define ELASTODG_ELASTODG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ELASTODG_BUILDING_LIBRARY)
#    define EDG_API __declspec(dllexport)
#  else
#    define EDG_API __declspec(dllimport)
#  endif
#else
#  define EDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. On failure edg_last_error() describes the problem for the calling thread. */
typedef enum edg_status {
    EDG_OK = 0,
    EDG_ERR_INVALID_ARGUMENT = 1,
    EDG_ERR_OUT_OF_RANGE = 2,
    EDG_ERR_SINGULAR = 3,
    EDG_ERR_NOT_CONVERGED = 4,
    EDG_ERR_IO = 5,
    EDG_ERR_OUT_OF_MEMORY = 6,
    EDG_ERR_INTERNAL = 7
} edg_status;

typedef struct edg_mesh edg_mesh;
typedef struct edg_system edg_system;
typedef struct edg_field edg_field;
typedef struct edg_study_result edg_study_result;

typedef enum edg_space_kind { EDG_SPACE_DG = 0, EDG_SPACE_FEM = 1 } edg_space_kind;

typedef enum edg_solver_method {
    EDG_SOLVER_AUTOMATIC = 0,
    EDG_SOLVER_DIRECT = 1,
    EDG_SOLVER_ITERATIVE = 2
} edg_solver_method;

typedef enum edg_study {
    EDG_STUDY_STABILITY = 0,
    EDG_STUDY_CONVERGENCE = 1,
    EDG_STUDY_POLLUTION = 2,
    EDG_STUDY_COMPARE = 3,
    EDG_STUDY_SINGLE = 4
} edg_study;

typedef enum edg_methods { EDG_METHODS_DG = 0, EDG_METHODS_FEM = 1, EDG_METHODS_BOTH = 2 } edg_methods;

/* Material, boundary and penalty data. A is row-major, real symmetric positive definite. */
typedef struct edg_params {
    double omega;
    double rho;
    double lambda;
    double mu;
    double A[4];
    double gamma0;
    double gamma1;
} edg_params;

typedef struct edg_mesh_info {
    int n;
    double h;
    int64_t num_vertices;
    int64_t num_triangles;
    int64_t num_interior_edges;
    int64_t num_boundary_edges;
} edg_mesh_info;

typedef struct edg_system_info {
    int64_t dofs;
    int64_t nnz;
    double assemble_ms;
} edg_system_info;

typedef struct edg_solve_options {
    double tol;
    edg_solver_method method;
    int restart;
    int max_iterations;
} edg_solve_options;

typedef struct edg_solve_report {
    double relative_residual;
    int iterations;
    double solve_ms;
    char method[32];
} edg_solve_report;

typedef struct edg_norm_report {
    double seminorm_1h;
    double norm_1h;
    double triple_norm_1h;
    double l2_domain;
    double l2_boundary;
    double j0;
    double j1;
} edg_norm_report;

typedef struct edg_record {
    char study[48];
    char method[8];
    double omega;
    int n;
    double h;
    int64_t dofs;
    double rel_err_h1semi;
    double rel_err_l2;
    double norm_1h;
    double j0;
    double j1;
    double c_sta;
    double residual;
    double assemble_ms;
    double solve_ms;
} edg_record;

typedef struct edg_fit {
    char method[8];
    double omega;
    double slope_h1semi;
    double slope_l2;
} edg_fit;

typedef struct edg_study_config {
    edg_study study;
    const double* omegas;
    size_t num_omegas;
    const int* ns;
    size_t num_ns;
    /* Refinement rules such as "wh=0.5" or "w3h2=1" (pollution study only). */
    const char* const* rules;
    size_t num_rules;
    edg_params params;
    int quad_degree;
    edg_solve_options solve;
    edg_methods methods;
    uint64_t seed;
    int compare_points;
    /* 0 reads ELASTODG_THREADS, then the hardware count. */
    int threads;
} edg_study_config;

EDG_API const char* edg_version(void);
/* Message of the last failed call on this thread; never NULL. */
EDG_API const char* edg_last_error(void);
EDG_API const char* edg_status_string(edg_status status);

EDG_API void edg_params_default(edg_params* params);
EDG_API edg_status edg_params_validate(const edg_params* params);
EDG_API edg_status edg_params_xi(const edg_params* params, double* xi);
EDG_API edg_status edg_params_c_sta(const edg_params* params, double h, double* c_sta);

/* Manufactured solution: u = (re u1, im u1, re u2, im u2). */
EDG_API edg_status edg_exact_u(const edg_params* params, double x, double y, double u[4]);
EDG_API edg_status edg_self_check(const edg_params* params, int samples, uint64_t seed, double* max_deviation);

EDG_API edg_status edg_mesh_create(int n, edg_mesh** mesh);
EDG_API void edg_mesh_destroy(edg_mesh* mesh);
EDG_API edg_status edg_mesh_info_get(const edg_mesh* mesh, edg_mesh_info* info);
EDG_API edg_status edg_mesh_write(const edg_mesh* mesh, const char* path);
EDG_API edg_status edg_consistency_residual(const edg_mesh* mesh, const edg_params* params, int quad_degree,
                                            double* residual);
EDG_API edg_status edg_exact_norms(const edg_mesh* mesh, const edg_params* params, int quad_degree,
                                   edg_norm_report* report);

EDG_API edg_status edg_system_assemble(const edg_mesh* mesh, edg_space_kind kind, const edg_params* params,
                                       int quad_degree, edg_system** system);
EDG_API void edg_system_destroy(edg_system* system);
EDG_API edg_status edg_system_info_get(const edg_system* system, edg_system_info* info);
EDG_API edg_status edg_system_write_matrix_market(const edg_system* system, const char* path);

EDG_API void edg_solve_options_default(edg_solve_options* options);
/* Solves the system; `options` may be NULL for defaults and `report` may be NULL. */
EDG_API edg_status edg_solve(const edg_system* system, const edg_solve_options* options, edg_field** solution,
                             edg_solve_report* report);

EDG_API void edg_field_destroy(edg_field* field);
EDG_API edg_status edg_field_size(const edg_field* field, int64_t* dofs);
/* Copies interleaved (re, im) coefficients; `count` is the number of doubles available. */
EDG_API edg_status edg_field_coefficients(const edg_field* field, double* values, size_t count);
EDG_API edg_status edg_field_eval(const edg_field* field, int64_t element, const double bary[3], double u[4]);
EDG_API edg_status edg_field_norms(const edg_field* field, const edg_params* params, edg_norm_report* report);
EDG_API edg_status edg_field_error(const edg_field* field, const edg_params* params, int quad_degree,
                                   edg_norm_report* report);

EDG_API void edg_study_config_default(edg_study_config* config);
EDG_API edg_status edg_pollution_mesh_size(const char* rule, double omega, int* n);
EDG_API edg_status edg_run_study(const edg_study_config* config, edg_study_result** result);
EDG_API void edg_study_result_destroy(edg_study_result* result);
EDG_API size_t edg_study_result_num_records(const edg_study_result* result);
EDG_API edg_status edg_study_result_record(const edg_study_result* result, size_t index, edg_record* record);
EDG_API size_t edg_study_result_num_fits(const edg_study_result* result);
EDG_API edg_status edg_study_result_fit(const edg_study_result* result, size_t index, edg_fit* fit);
/* Record table with the fixed CSV header. */
EDG_API edg_status edg_study_result_write_csv(const edg_study_result* result, const char* path);
/* Cross-section samples (compare study) or centroid values (single study); EDG_ERR_INVALID_ARGUMENT if absent. */
EDG_API edg_status edg_study_result_write_samples(const edg_study_result* result, const char* path);
EDG_API edg_status edg_study_result_write_svg(const edg_study_result* result, const char* path);

#ifdef __cplusplus
}
#endif

#endif
