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

#include <gtest/gtest.h>

#include <cmath>

using namespace elastodg;

namespace {

ProblemParams with_omega(double omega)
{
    ProblemParams p;
    p.omega = omega;
    return p;
}

void expect_close(Complex got, Complex want, double tol)
{
    EXPECT_NEAR(got.real(), want.real(), tol);
    EXPECT_NEAR(got.imag(), want.imag(), tol);
}

// Central differences of a sampled quantity along coordinate j.
template <class F>
auto central(F f, Vec2 x, int j, double step)
{
    Vec2 a = x, b = x;
    (j == 0 ? a.x : a.y) += step;
    (j == 0 ? b.x : b.y) -= step;
    return std::make_pair(f(a), f(b));
}

} // namespace

TEST(Manufactured, ValueAtOrigin)
{
    const auto p = with_omega(5.0);
    const CVec2 u = exact_u({0.0, 0.0}, p);
    expect_close(u[0], Complex(0.0, 0.2), 1e-15);
    expect_close(u[1], Complex(0.0, -0.2), 1e-15);
}

TEST(Manufactured, ClosedFormValue)
{
    // Symbolic oracle: 2 (e^{0.5 i} - 1).
    const CVec2 u = exact_u({0.3, 0.4}, with_omega(1.0));
    expect_close(u[0], Complex(-0.24483487621925457, 0.958851077208406), 1e-14);
    expect_close(u[0], 2.0 * (std::exp(Complex(0.0, 0.5)) - 1.0), 1e-14);
    expect_close(u[1], std::conj(u[0]), 1e-15);
}

TEST(Manufactured, SecondComponentIsConjugate)
{
    for (double w : {0.5, 5.0, 80.0})
        for (Vec2 x : {Vec2{0.1, -0.3}, Vec2{0.5, 0.5}, Vec2{-1e-6, 2e-6}}) {
            const CVec2 u = exact_u(x, with_omega(w));
            expect_close(u[1], std::conj(u[0]), 1e-15);
        }
}

TEST(Manufactured, GradientAgainstFiniteDifferences)
{
    const auto p = with_omega(5.0);
    const double step = 1e-6;
    for (Vec2 x : {Vec2{0.1, 0.0}, Vec2{0.3, -0.2}, Vec2{-0.45, 0.41}, Vec2{0.0, -0.25}}) {
        const FieldSample s = exact_fields(x, p);
        for (int j = 0; j < 2; ++j) {
            const auto [a, b] = central([&](Vec2 y) { return exact_u(y, p); }, x, j, step);
            for (int i = 0; i < 2; ++i) expect_close(s.grad_u[i][j], (a[i] - b[i]) / (2.0 * step), 1e-6);
        }
    }
}

TEST(Manufactured, StressDivergenceAgainstFiniteDifferences)
{
    const auto p = with_omega(5.0);
    const double step = 1e-6;
    for (Vec2 x : {Vec2{0.1, 0.05}, Vec2{0.3, -0.2}, Vec2{-0.45, 0.41}}) {
        const FieldSample s = exact_fields(x, p);
        CVec2 div{};
        for (int j = 0; j < 2; ++j) {
            const auto [a, b] = central([&](Vec2 y) { return exact_fields(y, p).stress; }, x, j, step);
            for (int i = 0; i < 2; ++i) div[i] += (a[i][j] - b[i][j]) / (2.0 * step);
        }
        for (int i = 0; i < 2; ++i) expect_close(s.div_stress[i], div[i], 1e-5);
    }
}

TEST(Manufactured, StrainAndStressDefinitions)
{
    const auto p = with_omega(7.0);
    const FieldSample s = exact_fields({0.2, -0.35}, p);
    EXPECT_EQ(s.strain[0][1], 0.5 * (s.grad_u[0][1] + s.grad_u[1][0]));
    EXPECT_EQ(s.strain[0][0], s.grad_u[0][0]);
    EXPECT_EQ(trace(s.strain), s.grad_u[0][0] + s.grad_u[1][1]);
    const CMat2 sigma = p.stress(s.grad_u);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expect_close(s.stress[i][j], sigma[i][j], 1e-14);
}

TEST(Manufactured, SourceMatchesSymbolicOracle)
{
    const auto p = with_omega(5.0);
    const CVec2 f = source_f(Vec2{0.25, 0.0}, p);
    expect_close(f[0], Complex(0.10269875081333098, 0.4900316254174848), 1e-11);
    expect_close(f[1], Complex(5.2839760296697635, -1.4203690658854409), 1e-11);
    const CVec2 f2 = source_f(Vec2{0.1, -0.2}, p);
    expect_close(f2[0], Complex(7.175131716096109, 1.010543431870574), 1e-11);
    expect_close(f2[1], Complex(3.819142991433799, -0.5536651978093113), 1e-11);
}

TEST(Manufactured, SourceIsPdeResidual)
{
    const auto p = with_omega(3.0);
    const FieldSample s = exact_fields({-0.3, 0.15}, p);
    const CVec2 f = source_f(s, p);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(-p.omega * p.omega * p.rho * s.u[i] - s.div_stress[i] - f[i], Complex(0.0));
}

TEST(Manufactured, SourceFiniteNearOrigin)
{
    const auto p = with_omega(5.0);
    for (Vec2 x : {Vec2{1e-12, 0.0}, Vec2{0.0, 0.0}, Vec2{-3e-9, 4e-9}}) {
        const CVec2 f = source_f(x, p);
        for (const auto& c : f) EXPECT_TRUE(std::isfinite(c.real()) && std::isfinite(c.imag()));
    }
}

TEST(Manufactured, BoundaryDataMatchesSymbolicOracle)
{
    const auto p = with_omega(5.0);
    const CVec2 g = boundary_g(Vec2{0.5, 0.0}, Vec2{1.0, 0.0}, p);
    expect_close(g[0], Complex(-0.09300649510380221, -1.9690964140449931), 1e-12);
    expect_close(g[1], Complex(0.2881829784875094, -0.30424445694336694), 1e-12);
    const CVec2 g2 = boundary_g(Vec2{0.2, 0.5}, Vec2{0.0, 1.0}, p);
    expect_close(g2[0], Complex(-0.029951924991399325, -0.9257104523989992), 1e-12);
    expect_close(g2[1], Complex(0.47998329632865405, 0.24624898852074975), 1e-12);
}

TEST(Manufactured, BoundaryDataRearrangement)
{
    const auto p = with_omega(1.0);
    for (Vec2 x : {Vec2{0.5, 0.1}, Vec2{-0.2, -0.5}}) {
        const Vec2 n = std::abs(x.x) == 0.5 ? Vec2{x.x > 0 ? 1.0 : -1.0, 0.0} : Vec2{0.0, x.y > 0 ? 1.0 : -1.0};
        const FieldSample s = exact_fields(x, p);
        const CVec2 g = boundary_g(s, n, p);
        const CVec2 sn = mul(s.stress, n);
        for (int i = 0; i < 2; ++i) expect_close(g[i] - sn[i], Complex(0.0, 1.0) * s.u[i], 1e-15);
        // With A = I the impedance term of the second component is i omega conj(u_1).
        expect_close(Complex(0.0, p.omega) * s.u[1], Complex(0.0, p.omega) * std::conj(s.u[0]), 1e-15);
    }
}

TEST(Manufactured, SeriesAndClosedFormAgreeAtGuardRadius)
{
    for (double w : {1.0, 20.0, 200.0}) {
        const auto p = with_omega(w);
        const Vec2 dir{0.6, 0.8};
        const FieldSample in = exact_fields((kSeriesRadius * (1.0 - 1e-12)) * dir, p);
        const FieldSample out = exact_fields((kSeriesRadius * (1.0 + 1e-12)) * dir, p);
        EXPECT_LT(std::sqrt(norm2(in.u - out.u) / norm2(out.u)), 1e-10) << w;
        EXPECT_LT(std::sqrt(norm2(in.grad_u - out.grad_u) / norm2(out.grad_u)), 1e-10) << w;
        EXPECT_LT(std::sqrt(norm2(in.stress - out.stress) / norm2(out.stress)), 1e-10) << w;
        EXPECT_LT(std::sqrt(norm2(in.div_stress - out.div_stress) / norm2(out.div_stress)), 1e-10) << w;
    }
}

TEST(Manufactured, SelfCheckSmallFrequency)
{
    const SelfCheckReport r = self_check(with_omega(5.0), 100);
    EXPECT_EQ(r.samples, 100);
    EXPECT_LT(r.max(), 1e-5);
}

TEST(Manufactured, SelfCheckLargeFrequency)
{
    const SelfCheckReport r = self_check(with_omega(50.0), 100);
    EXPECT_NEAR(r.step, 1e-7, 1e-20);
    EXPECT_LT(r.max(), 1e-3);
}

TEST(Manufactured, SelfCheckDeterministic)
{
    const auto p = with_omega(5.0);
    const SelfCheckReport a = self_check(p, 1, 42);
    const SelfCheckReport b = self_check(p, 1, 42);
    EXPECT_EQ(a.grad_u, b.grad_u);
    EXPECT_EQ(a.div_stress, b.div_stress);
    EXPECT_EQ(a.source_f, b.source_f);
    EXPECT_EQ(a.boundary_g, b.boundary_g);
    EXPECT_THROW(self_check(p, 0), std::invalid_argument);
}

TEST(Manufactured, AffineFieldHasConstantStress)
{
    ProblemParams p;
    const CMat2 B{{{Complex(1.0, 2.0), 0.5}, {-0.25, Complex(0.0, 3.0)}}};
    const AffineField field({Complex(1.0), Complex(0.0, -1.0)}, B, p);
    const FieldSample a = field.sample({0.1, 0.2});
    const FieldSample b = field.sample({-0.4, 0.3});
    EXPECT_EQ(a.stress, b.stress);
    EXPECT_EQ(a.div_stress[0], Complex(0.0));
    EXPECT_EQ(a.div_stress[1], Complex(0.0));
    expect_close(a.u[0], 1.0 + B[0][0] * 0.1 + B[0][1] * 0.2, 1e-15);
    EXPECT_FALSE(field.singular_point().has_value());
    EXPECT_TRUE(ManufacturedSolution(p).singular_point().has_value());
}

TEST(Manufactured, ParamsValidation)
{
    ProblemParams p;
    EXPECT_NO_THROW(p.validate());
    p.omega = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = ProblemParams{};
    p.gamma0 = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = ProblemParams{};
    p.gamma1 = -1.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = ProblemParams{};
    p.A = {{{1.0, 0.3}, {0.2, 1.0}}};
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.A = {{{1.0, 2.0}, {2.0, 1.0}}};
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Manufactured, StabilityConstant)
{
    ProblemParams p;
    p.omega = 5.0;
    EXPECT_NEAR(p.xi(), 1.1, 1e-15);
    // 1.1/5 + 1/(25 * 0.125) + 1/(125 * 0.015625 * 0.1)
    EXPECT_NEAR(p.c_sta(0.125), 0.22 + 0.32 + 5.12, 1e-13);
    p.gamma1 = 0.0;
    EXPECT_TRUE(std::isinf(p.c_sta(0.125)));
}
