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
#include "solver.hpp"

#include <suitesparse/umfpack.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

namespace elastodg {

double relative_residual(const CsrMatrix& A, std::span<const Complex> x, std::span<const Complex> b)
{
    std::vector<Complex> r = A.multiply(x);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    const double nb = l2_norm(b);
    return nb > 0.0 ? l2_norm(r) / nb : l2_norm(r);
}

namespace {

// The CSR arrays of A are the CSC arrays of A^T, so every solve uses the
// array-transpose system UMFPACK_Aat. The 64-bit index variant is used because
// the symbolic memory estimate overflows 32-bit units on the largest meshes.
class UmfpackLu
{
public:
    explicit UmfpackLu(const CsrMatrix& A)
        : A_(A), row_ptr_(A.row_ptr.begin(), A.row_ptr.end()), col_idx_(A.col_idx.begin(), A.col_idx.end())
    {
        umfpack_zl_defaults(control_);
        control_[UMFPACK_ORDERING] = UMFPACK_ORDERING_METIS;
        // Start from a modest workspace and let the factorization grow it; the
        // default (a fraction of the pessimistic estimate) cannot be allocated here.
        control_[UMFPACK_ALLOC_INIT] = -std::max(1e6, 6.0 * A.nnz());
        const double* ax = values();
        SuiteSparse_long status = umfpack_zl_symbolic(A.rows, A.cols, row_ptr_.data(), col_idx_.data(), ax, nullptr,
                                                      &symbolic_, control_, info_);
        if (status == UMFPACK_ERROR_invalid_system || status == UMFPACK_ERROR_internal_error) {
            control_[UMFPACK_ORDERING] = UMFPACK_ORDERING_AMD;
            status = umfpack_zl_symbolic(A.rows, A.cols, row_ptr_.data(), col_idx_.data(), ax, nullptr, &symbolic_, control_, info_);
        }
        check(status, "symbolic factorization");
        status = umfpack_zl_numeric(row_ptr_.data(), col_idx_.data(), ax, nullptr, symbolic_, &numeric_, control_, info_);
        if (status == UMFPACK_WARNING_singular_matrix) throw SingularMatrixError("matrix is singular to working precision");
        check(status, "numeric factorization");
    }

    UmfpackLu(const UmfpackLu&) = delete;
    UmfpackLu& operator=(const UmfpackLu&) = delete;

    ~UmfpackLu()
    {
        if (numeric_) umfpack_zl_free_numeric(&numeric_);
        if (symbolic_) umfpack_zl_free_symbolic(&symbolic_);
    }

    void solve(std::span<const Complex> b, std::span<Complex> x)
    {
        const SuiteSparse_long status =
            umfpack_zl_solve(UMFPACK_Aat, row_ptr_.data(), col_idx_.data(), values(), nullptr,
                             reinterpret_cast<double*>(x.data()), nullptr, reinterpret_cast<const double*>(b.data()),
                             nullptr, numeric_, control_, info_);
        if (status == UMFPACK_WARNING_singular_matrix) throw SingularMatrixError("matrix is singular to working precision");
        check(status, "solve");
    }

private:
    const double* values() const { return reinterpret_cast<const double*>(A_.values.data()); }

    static void check(SuiteSparse_long status, const char* stage)
    {
        if (status == UMFPACK_OK) return;
        if (status == UMFPACK_ERROR_out_of_memory) throw std::bad_alloc();
        throw std::runtime_error(std::string("sparse LU ") + stage + " failed with status " + std::to_string(status));
    }

    const CsrMatrix& A_;
    std::vector<SuiteSparse_long> row_ptr_;
    std::vector<SuiteSparse_long> col_idx_;
    double control_[UMFPACK_CONTROL]{};
    double info_[UMFPACK_INFO]{};
    void* symbolic_ = nullptr;
    void* numeric_ = nullptr;
};

double since_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void solve_direct(const CsrMatrix& A, std::span<const Complex> b, SolveReport& report, double tol)
{
    UmfpackLu lu(A);
    report.solution.assign(b.size(), Complex(0.0));
    lu.solve(b, report.solution);
    report.relative_residual = relative_residual(A, report.solution, b);
    // Iterative refinement with the existing factors for ill-conditioned cases.
    std::vector<Complex> r(b.size()), dx(b.size());
    for (int step = 0; step < 3 && report.relative_residual > tol; ++step) {
        A.multiply(report.solution, r);
        for (size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
        lu.solve(r, dx);
        for (size_t i = 0; i < dx.size(); ++i) report.solution[i] += dx[i];
        report.relative_residual = relative_residual(A, report.solution, b);
    }
    if (!std::isfinite(report.relative_residual)) throw SingularMatrixError("direct solve produced non-finite values");
}

} // namespace

Ilu0::Ilu0(const CsrMatrix& A) : lu_(A), diag_(A.rows, -1)
{
    const int n = lu_.rows;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int k = lu_.row_ptr[i]; k < lu_.row_ptr[i + 1]; ++k) {
            pos[lu_.col_idx[k]] = k;
            if (lu_.col_idx[k] == i) diag_[i] = k;
        }
        if (diag_[i] < 0) throw SingularMatrixError("ILU(0): missing diagonal entry");
        for (int k = lu_.row_ptr[i]; k < diag_[i]; ++k) {
            const int col = lu_.col_idx[k];
            const Complex pivot = lu_.values[diag_[col]];
            if (pivot == Complex(0.0)) throw SingularMatrixError("ILU(0): zero pivot");
            lu_.values[k] /= pivot;
            const Complex lik = lu_.values[k];
            for (int j = diag_[col] + 1; j < lu_.row_ptr[col + 1]; ++j) {
                const int p = pos[lu_.col_idx[j]];
                if (p >= 0) lu_.values[p] -= lik * lu_.values[j];
            }
        }
        for (int k = lu_.row_ptr[i]; k < lu_.row_ptr[i + 1]; ++k) pos[lu_.col_idx[k]] = -1;
        if (lu_.values[diag_[i]] == Complex(0.0)) throw SingularMatrixError("ILU(0): zero pivot");
    }
}

void Ilu0::apply(std::span<const Complex> r, std::span<Complex> z) const
{
    const int n = lu_.rows;
    for (int i = 0; i < n; ++i) {
        Complex s = r[i];
        for (int k = lu_.row_ptr[i]; k < diag_[i]; ++k) s -= lu_.values[k] * z[lu_.col_idx[k]];
        z[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        Complex s = z[i];
        for (int k = diag_[i] + 1; k < lu_.row_ptr[i + 1]; ++k) s -= lu_.values[k] * z[lu_.col_idx[k]];
        z[i] = s / lu_.values[diag_[i]];
    }
}

GmresResult gmres(const CsrMatrix& A, std::span<const Complex> b, std::span<Complex> x, const Ilu0* preconditioner,
                  double tol, int restart, int max_iterations)
{
    const size_t n = b.size();
    const double nb = l2_norm(b);
    GmresResult result;
    if (nb == 0.0) {
        std::fill(x.begin(), x.end(), Complex(0.0));
        result.converged = true;
        return result;
    }
    const int m = std::max(1, restart);
    std::vector<std::vector<Complex>> V(m + 1, std::vector<Complex>(n));
    std::vector<std::vector<Complex>> H(m + 1, std::vector<Complex>(m, Complex(0.0)));
    std::vector<double> cs(m);
    std::vector<Complex> sn(m), g(m + 1), z(n), w(n);
    auto precondition = [&](std::span<const Complex> in, std::span<Complex> out) {
        if (preconditioner)
            preconditioner->apply(in, out);
        else
            std::copy(in.begin(), in.end(), out.begin());
    };

    while (result.iterations < max_iterations) {
        A.multiply(x, w);
        for (size_t i = 0; i < n; ++i) V[0][i] = b[i] - w[i];
        double beta = l2_norm(V[0]);
        result.residual = beta / nb;
        if (result.residual <= tol) {
            result.converged = true;
            return result;
        }
        for (auto& v : V[0]) v /= beta;
        std::fill(g.begin(), g.end(), Complex(0.0));
        g[0] = beta;

        int j = 0;
        for (; j < m && result.iterations < max_iterations; ++j) {
            ++result.iterations;
            precondition(V[j], z);
            A.multiply(z, w);
            for (int i = 0; i <= j; ++i) {
                Complex h = 0.0;
                for (size_t q = 0; q < n; ++q) h += std::conj(V[i][q]) * w[q];
                H[i][j] = h;
                for (size_t q = 0; q < n; ++q) w[q] -= h * V[i][q];
            }
            const double hn = l2_norm(w);
            H[j + 1][j] = hn;
            if (hn > 0.0)
                for (size_t q = 0; q < n; ++q) V[j + 1][q] = w[q] / hn;
            for (int i = 0; i < j; ++i) {
                const Complex a = H[i][j];
                const Complex c = H[i + 1][j];
                H[i][j] = cs[i] * a + sn[i] * c;
                H[i + 1][j] = -std::conj(sn[i]) * a + cs[i] * c;
            }
            const Complex h1 = H[j][j];
            const Complex h2 = H[j + 1][j];
            const double t = std::sqrt(std::norm(h1) + std::norm(h2));
            if (std::abs(h1) == 0.0) {
                cs[j] = 0.0;
                sn[j] = 1.0;
            } else {
                cs[j] = std::abs(h1) / t;
                sn[j] = (h1 / std::abs(h1)) * std::conj(h2) / t;
            }
            H[j][j] = cs[j] * h1 + sn[j] * h2;
            H[j + 1][j] = 0.0;
            g[j + 1] = -std::conj(sn[j]) * g[j];
            g[j] = cs[j] * g[j];
            result.residual = std::abs(g[j + 1]) / nb;
            if (result.residual <= tol || hn == 0.0) {
                ++j;
                break;
            }
        }
        // Back substitution and update x += M^{-1} V y.
        std::vector<Complex> y(j);
        for (int i = j - 1; i >= 0; --i) {
            Complex s = g[i];
            for (int k = i + 1; k < j; ++k) s -= H[i][k] * y[k];
            y[i] = s / H[i][i];
        }
        std::fill(w.begin(), w.end(), Complex(0.0));
        for (int i = 0; i < j; ++i)
            for (size_t q = 0; q < n; ++q) w[q] += y[i] * V[i][q];
        precondition(w, z);
        for (size_t q = 0; q < n; ++q) x[q] += z[q];
        if (result.residual <= tol) {
            // confirm against the true residual before declaring success
            result.residual = relative_residual(A, x, b);
            if (result.residual <= tol) {
                result.converged = true;
                return result;
            }
        }
    }
    return result;
}

SolveReport solve(const CsrMatrix& A, std::span<const Complex> b, const SolveOptions& options)
{
    if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: dimension mismatch");
    if (!(options.tol >= 1e-14 && options.tol <= 1e-6)) throw std::invalid_argument("solve: tolerance must lie in [1e-14, 1e-6]");

    const auto start = std::chrono::steady_clock::now();
    SolveReport report;
    auto run_iterative = [&](bool allow_direct_fallback) {
        report.method = "gmres-ilu0";
        report.solution.assign(b.size(), Complex(0.0));
        GmresResult res;
        try {
            const Ilu0 ilu(A);
            res = gmres(A, b, report.solution, &ilu, options.tol, options.restart, options.max_iterations);
        } catch (const SingularMatrixError&) {
            res.converged = false;
        }
        report.iterations = res.iterations;
        report.relative_residual = relative_residual(A, report.solution, b);
        if (res.converged && report.relative_residual <= options.tol) return;
        if (!allow_direct_fallback)
            throw NotConvergedError("GMRES stagnated at relative residual " + std::to_string(res.residual));
        report.method = "gmres-ilu0+direct";
        try {
            solve_direct(A, b, report, options.tol);
        } catch (const std::bad_alloc&) {
            throw NotConvergedError("GMRES stagnated at relative residual " + std::to_string(res.residual) +
                                    " and the direct fallback ran out of memory");
        }
    };

    switch (options.method) {
    case SolverMethod::Iterative:
        run_iterative(true);
        break;
    case SolverMethod::Direct:
        report.method = "direct-lu";
        solve_direct(A, b, report, options.tol);
        break;
    case SolverMethod::Automatic:
        try {
            report.method = "direct-lu";
            solve_direct(A, b, report, options.tol);
        } catch (const std::bad_alloc&) {
            run_iterative(false);
        }
        break;
    }

    report.relative_residual = relative_residual(A, report.solution, b);
    report.solve_ms = since_ms(start);
    if (!(report.relative_residual <= options.tol))
        throw NotConvergedError("relative residual " + std::to_string(report.relative_residual) + " exceeds tolerance");
    return report;
}

} // namespace elastodg
