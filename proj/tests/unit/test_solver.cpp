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
#include "assembly.hpp"
#include "solver.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace elastodg;
using elastodg::testing::make_mesh;
using elastodg::testing::random_vector;

namespace {

CsrMatrix dense_to_csr(const std::vector<std::vector<Complex>>& a)
{
    CsrMatrix m;
    m.rows = static_cast<int>(a.size());
    m.cols = static_cast<int>(a[0].size());
    m.row_ptr.push_back(0);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c)
            if (a[r][c] != Complex(0.0)) {
                m.col_idx.push_back(c);
                m.values.push_back(a[r][c]);
            }
        m.row_ptr.push_back(m.nnz());
    }
    return m;
}

System small_dg_system()
{
    ProblemParams p;
    p.omega = 5.0;
    return assemble_dg(Space::dg(make_mesh(16)), p);
}

} // namespace

TEST(Solver, DiagonalSystem)
{
    const CsrMatrix m = dense_to_csr({{2.0, 0.0}, {0.0, Complex(0.0, 1.0)}});
    const std::vector<Complex> b{2.0, 1.0};
    for (SolverMethod method : {SolverMethod::Direct, SolverMethod::Iterative, SolverMethod::Automatic}) {
        SolveOptions o;
        o.method = method;
        const SolveReport r = solve(m, b, o);
        EXPECT_NEAR(std::abs(r.solution[0] - Complex(1.0)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(r.solution[1] - Complex(0.0, -1.0)), 0.0, 1e-14);
        EXPECT_LE(r.relative_residual, 1e-14);
    }
}

TEST(Solver, DirectOnDgSystem)
{
    const System sys = small_dg_system();
    SolveOptions o;
    o.method = SolverMethod::Direct;
    const SolveReport r = solve(sys.matrix, sys.rhs, o);
    EXPECT_LE(r.relative_residual, 1e-10);
    EXPECT_LE(relative_residual(sys.matrix, r.solution, sys.rhs), 1e-10);
    EXPECT_EQ(r.method, "direct-lu");
}

TEST(Solver, IterativeMatchesDirect)
{
    const System sys = small_dg_system();
    SolveOptions direct;
    direct.method = SolverMethod::Direct;
    SolveOptions iterative;
    iterative.method = SolverMethod::Iterative;
    const SolveReport a = solve(sys.matrix, sys.rhs, direct);
    const SolveReport b = solve(sys.matrix, sys.rhs, iterative);
    EXPECT_LE(b.relative_residual, 1e-10);
    std::vector<Complex> diff(a.solution.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = a.solution[i] - b.solution[i];
    EXPECT_LT(l2_norm(diff), 1e-7 * l2_norm(a.solution));
}

TEST(Solver, Deterministic)
{
    const System sys = small_dg_system();
    const SolveReport a = solve(sys.matrix, sys.rhs);
    const SolveReport b = solve(sys.matrix, sys.rhs);
    EXPECT_EQ(a.solution, b.solution);
}

TEST(Solver, ToleranceValidation)
{
    const CsrMatrix m = dense_to_csr({{1.0}});
    const std::vector<Complex> b{1.0};
    SolveOptions o;
    o.tol = 1e-3;
    EXPECT_THROW(solve(m, b, o), std::invalid_argument);
    o.tol = 1e-16;
    EXPECT_THROW(solve(m, b, o), std::invalid_argument);
    o.tol = 1e-6;
    EXPECT_NO_THROW(solve(m, b, o));
}

TEST(Solver, ShapeValidation)
{
    const CsrMatrix m = dense_to_csr({{1.0, 2.0}, {3.0, 4.0}});
    const std::vector<Complex> b{1.0};
    EXPECT_THROW(solve(m, b), std::invalid_argument);
}

TEST(Solver, SingularMatrix)
{
    const CsrMatrix m = dense_to_csr({{1.0, 1.0}, {1.0, 1.0}});
    const std::vector<Complex> b{1.0, 0.0};
    SolveOptions o;
    o.method = SolverMethod::Direct;
    EXPECT_THROW(solve(m, b, o), SingularMatrixError);
}

TEST(Solver, ZeroRightHandSide)
{
    const System sys = small_dg_system();
    const std::vector<Complex> zero(sys.rhs.size());
    const SolveReport r = solve(sys.matrix, zero);
    EXPECT_EQ(l2_norm(r.solution), 0.0);
}

TEST(Solver, Ilu0IsExactOnTridiagonal)
{
    // No fill occurs for a tridiagonal matrix, so ILU(0) is the full LU.
    const int n = 20;
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
    for (int i = 0; i < n; ++i) {
        a[i][i] = Complex(4.0, 1.0);
        if (i > 0) a[i][i - 1] = -1.0;
        if (i + 1 < n) a[i][i + 1] = Complex(-1.0, 0.5);
    }
    const CsrMatrix m = dense_to_csr(a);
    std::mt19937_64 rng(1);
    const auto b = random_vector(n, rng);
    const Ilu0 ilu(m);
    std::vector<Complex> z(n);
    ilu.apply(b, z);
    EXPECT_LT(relative_residual(m, z, b), 1e-14);

    std::vector<Complex> x(n);
    const GmresResult g = gmres(m, b, x, &ilu, 1e-12, 10, 50);
    EXPECT_TRUE(g.converged);
    EXPECT_LE(g.iterations, 2);
}

TEST(Solver, GmresWithoutPreconditioner)
{
    const int n = 30;
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
    for (int i = 0; i < n; ++i) {
        a[i][i] = Complex(3.0, 0.2 * i);
        if (i > 1) a[i][i - 2] = 0.5;
        if (i + 3 < n) a[i][i + 3] = Complex(0.0, -0.7);
    }
    const CsrMatrix m = dense_to_csr(a);
    std::mt19937_64 rng(2);
    const auto b = random_vector(n, rng);
    std::vector<Complex> x(n);
    const GmresResult g = gmres(m, b, x, nullptr, 1e-12, 8, 500);
    EXPECT_TRUE(g.converged);
    EXPECT_LT(relative_residual(m, x, b), 1e-11);
}
