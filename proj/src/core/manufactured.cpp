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
#include "manufactured.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace elastodg {

namespace {

constexpr Complex I{0.0, 1.0};

// q(r) = (e^{i s omega r} - 1) / (omega^2 r) with its first two derivatives.
struct Radial
{
    Complex q, dq, d2q;
    // dq / r; in the series branch only its finite part (the -1/(2r) term is left to the caller).
    Complex dq_over_r;
};

Radial radial_profile(double r, double omega, double s)
{
    const double w2 = omega * omega;
    Radial out;
    if (r < kSeriesRadius) {
        // q = sum_{m>=1} a_m r^{m-1}, a_m = (i s omega)^m / (m! omega^2)
        std::array<double, 16> rp{};
        rp[0] = 1.0;
        for (size_t k = 1; k < rp.size(); ++k) rp[k] = rp[k - 1] * r;
        Complex a = I * s * omega / w2;
        for (int m = 1; m <= 14; ++m) {
            out.q += a * rp[m - 1];
            if (m >= 2) out.dq += static_cast<double>(m - 1) * a * rp[m - 2];
            if (m >= 3) {
                out.d2q += static_cast<double>((m - 1) * (m - 2)) * a * rp[m - 3];
                out.dq_over_r += static_cast<double>(m - 1) * a * rp[m - 3];
            }
            a *= I * s * omega / static_cast<double>(m + 1);
        }
        return out;
    }
    const double theta = s * omega * r;
    const double half = std::sin(0.5 * theta);
    const Complex em1{-2.0 * half * half, std::sin(theta)};
    const Complex e = 1.0 + em1;
    out.q = em1 / (w2 * r);
    out.dq = I * s * omega * e / (w2 * r) - em1 / (w2 * r * r);
    out.d2q = -e / r - 2.0 * I * s * omega * e / (w2 * r * r) + 2.0 * em1 / (w2 * r * r * r);
    out.dq_over_r = out.dq / r;
    return out;
}

} // namespace

ManufacturedSolution::ManufacturedSolution(const ProblemParams& params) : params_(params)
{
    params_.validate();
}

FieldSample ManufacturedSolution::sample(Vec2 x) const
{
    const ProblemParams& p = params_;
    const double r = norm(x);
    const std::array<Radial, 2> rad{radial_profile(r, p.omega, 1.0), radial_profile(r, p.omega, -1.0)};
    const std::array<double, 2> dir = r > 0.0 ? std::array<double, 2>{x.x / r, x.y / r} : std::array<double, 2>{0.0, 0.0};

    FieldSample s;
    // hess[i][j][k] = d^2 u_i / dx_j dx_k
    std::array<CMat2, 2> hess{};
    for (int i = 0; i < 2; ++i) {
        s.u[i] = rad[i].q;
        for (int j = 0; j < 2; ++j) {
            s.grad_u[i][j] = rad[i].dq * dir[j];
            for (int k = 0; k < 2; ++k) {
                const double djk = j == k ? 1.0 : 0.0;
                if (r > 0.0) {
                    Complex dq_r = r < kSeriesRadius ? (-0.5 / r + rad[i].dq_over_r) : rad[i].dq_over_r;
                    hess[i][j][k] = rad[i].d2q * dir[j] * dir[k] + dq_r * (djk - dir[j] * dir[k]);
                } else {
                    hess[i][j][k] = rad[i].d2q * djk;
                }
            }
        }
    }
    s.strain = symmetric_part(s.grad_u);
    s.stress = p.stress(s.grad_u);
    for (int i = 0; i < 2; ++i) {
        const Complex laplacian = hess[i][0][0] + hess[i][1][1];
        const Complex grad_div = hess[0][i][0] + hess[1][i][1];
        s.div_stress[i] = p.mu * laplacian + (p.lambda + p.mu) * grad_div;
    }
    return s;
}

AffineField::AffineField(const CVec2& c, const CMat2& B, const ProblemParams& params)
    : c_(c), B_(B), stress_(params.stress(B))
{
}

FieldSample AffineField::sample(Vec2 x) const
{
    FieldSample s;
    s.u = c_ + mul(B_, x);
    s.grad_u = B_;
    s.strain = symmetric_part(B_);
    s.stress = stress_;
    return s;
}

CVec2 exact_u(Vec2 x, const ProblemParams& p)
{
    return exact_fields(x, p).u;
}

FieldSample exact_fields(Vec2 x, const ProblemParams& p)
{
    return ManufacturedSolution(p).sample(x);
}

CVec2 source_f(const FieldSample& s, const ProblemParams& p)
{
    const double m = -p.omega * p.omega * p.rho;
    return {m * s.u[0] - s.div_stress[0], m * s.u[1] - s.div_stress[1]};
}

CVec2 source_f(Vec2 x, const ProblemParams& p)
{
    return source_f(exact_fields(x, p), p);
}

CVec2 boundary_g(const FieldSample& s, Vec2 normal, const ProblemParams& p)
{
    return I * p.omega * p.apply_A(s.u) + mul(s.stress, normal);
}

CVec2 boundary_g(Vec2 x, Vec2 normal, const ProblemParams& p)
{
    return boundary_g(exact_fields(x, p), normal, p);
}

double SelfCheckReport::max() const
{
    return std::max({grad_u, stress, div_stress, source_f, boundary_g});
}

namespace {

double halton(std::uint32_t index, std::uint32_t base)
{
    double f = 1.0;
    double r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
    }
    return r;
}

double max_abs(const CVec2& a) { return std::max(std::abs(a[0]), std::abs(a[1])); }
double max_abs(const CMat2& a) { return std::max(max_abs(CVec2{a[0][0], a[0][1]}), max_abs(CVec2{a[1][0], a[1][1]})); }

} // namespace

SelfCheckReport self_check(const ProblemParams& p, int samples, std::uint32_t seed, double step)
{
    if (samples < 1) throw std::invalid_argument("self_check needs at least one sample");
    const ManufacturedSolution exact(p);
    SelfCheckReport rep;
    rep.samples = samples;
    rep.step = step > 0.0 ? step : std::min(1e-6, 5e-6 / p.omega);
    const double hstep = rep.step;

    std::uint32_t index = 1 + seed * 7919u;
    for (int taken = 0; taken < samples; ++index) {
        const Vec2 x{halton(index, 2) - 0.5, halton(index, 3) - 0.5};
        if (norm(x) < 0.05 || std::abs(x.x) > 0.5 - hstep || std::abs(x.y) > 0.5 - hstep) continue;
        ++taken;

        const FieldSample s = exact.sample(x);
        CMat2 fd_grad{};
        CVec2 fd_div_stress{};
        for (int j = 0; j < 2; ++j) {
            const Vec2 e = j == 0 ? Vec2{hstep, 0.0} : Vec2{0.0, hstep};
            const FieldSample sp = exact.sample(x + e);
            const FieldSample sm = exact.sample(x - e);
            for (int i = 0; i < 2; ++i) {
                fd_grad[i][j] = (sp.u[i] - sm.u[i]) / (2.0 * hstep);
                fd_div_stress[i] += (sp.stress[i][j] - sm.stress[i][j]) / (2.0 * hstep);
            }
        }
        const CMat2 fd_stress = p.stress(fd_grad);
        const double m = -p.omega * p.omega * p.rho;
        const CVec2 fd_f{m * s.u[0] - fd_div_stress[0], m * s.u[1] - fd_div_stress[1]};

        rep.grad_u = std::max(rep.grad_u, max_abs(s.grad_u - fd_grad));
        rep.stress = std::max(rep.stress, max_abs(s.stress - fd_stress));
        rep.div_stress = std::max(rep.div_stress, max_abs(s.div_stress - fd_div_stress));
        rep.source_f = std::max(rep.source_f, max_abs(source_f(s, p) - fd_f));

        // Project onto the boundary side nearest to x for the boundary datum.
        Vec2 xb = x;
        Vec2 nb{};
        if (std::abs(x.x) >= std::abs(x.y)) {
            xb.x = x.x >= 0 ? 0.5 : -0.5;
            nb = {x.x >= 0 ? 1.0 : -1.0, 0.0};
        } else {
            xb.y = x.y >= 0 ? 0.5 : -0.5;
            nb = {0.0, x.y >= 0 ? 1.0 : -1.0};
        }
        CMat2 fd_grad_b{};
        for (int j = 0; j < 2; ++j) {
            const Vec2 e = j == 0 ? Vec2{hstep, 0.0} : Vec2{0.0, hstep};
            const CVec2 up = exact.sample(xb + e).u;
            const CVec2 um = exact.sample(xb - e).u;
            for (int i = 0; i < 2; ++i) fd_grad_b[i][j] = (up[i] - um[i]) / (2.0 * hstep);
        }
        const FieldSample sb = exact.sample(xb);
        const CVec2 fd_g = I * p.omega * p.apply_A(sb.u) + mul(p.stress(fd_grad_b), nb);
        rep.boundary_g = std::max(rep.boundary_g, max_abs(boundary_g(sb, nb, p) - fd_g));
    }
    return rep;
}

} // namespace elastodg
