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

#include "sparse.hpp"
#include "types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace elastodg {

enum class SolverMethod
{
    Automatic,   // direct, switching to iterative if the factorization runs out of memory
    Direct,      // sparse LU with partial pivoting (METIS ordering)
    Iterative,   // restarted GMRES + ILU(0), falling back to direct on stagnation
};

struct SolveOptions
{
    double tol = 1e-10;
    SolverMethod method = SolverMethod::Automatic;
    int restart = 100;
    int max_iterations = 6000;
};

struct SolveReport
{
    std::vector<Complex> solution;
    /// |Ax - b| / |b| from a fresh mat-vec.
    double relative_residual = 0.0;
    int iterations = 0;
    double solve_ms = 0.0;
    std::string method;
};

class SingularMatrixError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

class NotConvergedError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Solves A x = b to relative residual <= tol (tol in [1e-14, 1e-6]).
SolveReport solve(const CsrMatrix& A, std::span<const Complex> b, const SolveOptions& options = {});

/// Relative residual |Ax - b| / |b| (|Ax| when b == 0).
double relative_residual(const CsrMatrix& A, std::span<const Complex> x, std::span<const Complex> b);

/// Incomplete LU with zero fill on the pattern of A; throws SingularMatrixError on a zero pivot.
class Ilu0
{
public:
    explicit Ilu0(const CsrMatrix& A);
    void apply(std::span<const Complex> r, std::span<Complex> z) const;

private:
    CsrMatrix lu_;
    std::vector<int> diag_;
};

struct GmresResult
{
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;
};

/// Right-preconditioned restarted GMRES; x holds the initial guess on entry.
GmresResult gmres(const CsrMatrix& A, std::span<const Complex> b, std::span<Complex> x, const Ilu0* preconditioner,
                  double tol, int restart, int max_iterations);

} // namespace elastodg
