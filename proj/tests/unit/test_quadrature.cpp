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
#include "integration.hpp"
#include "mesh.hpp"
#include "quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numeric>

using namespace elastodg;

namespace {

double factorial(int k)
{
    return std::tgamma(k + 1.0);
}

double apply_rule(const QuadRule& rule, const std::function<double(double, double)>& f)
{
    double s = 0.0;
    for (size_t q = 0; q < rule.size(); ++q) s += rule.weights[q] * f(rule.points[q][0], rule.points[q][1]);
    return s;
}

// Centroid rule on a uniform 4^levels subdivision of the reference triangle.
double brute_force_triangle(const std::function<double(double, double)>& f, int levels)
{
    const int m = 1 << levels;
    const double h = 1.0 / m;
    double s = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; i + j < m; ++j) {
            s += f((i + 1.0 / 3.0) * h, (j + 1.0 / 3.0) * h);
            if (i + j + 1 < m) s += f((i + 2.0 / 3.0) * h, (j + 2.0 / 3.0) * h);
        }
    return s * 0.5 * h * h;
}

} // namespace

TEST(Quadrature, TriangleWeightsSumToHalf)
{
    for (int d = 0; d <= kMaxTriangleDegree; ++d) {
        const QuadRule& r = triangle_rule(d);
        EXPECT_EQ(r.degree, d);
        EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 0.5, 1e-14);
        for (double w : r.weights) EXPECT_GT(w, 0.0);
        for (const auto& p : r.points) {
            EXPECT_GE(p[0], 0.0);
            EXPECT_GE(p[1], 0.0);
            EXPECT_LE(p[0] + p[1], 1.0 + 1e-15);
        }
    }
}

TEST(Quadrature, TriangleMonomialExactness)
{
    for (int d = 0; d <= kMaxTriangleDegree; ++d) {
        for (const QuadRule* r : {&triangle_rule(d), &collapsed_triangle_rule(d)}) {
            for (int a = 0; a <= d; ++a)
                for (int b = 0; a + b <= d; ++b) {
                    const double exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                    const double got = apply_rule(*r, [&](double x, double y) { return std::pow(x, a) * std::pow(y, b); });
                    EXPECT_NEAR(got, exact, 1e-13 * exact) << "degree " << d << " monomial " << a << "," << b;
                }
        }
    }
}

TEST(Quadrature, TriangleExamples)
{
    EXPECT_NEAR(apply_rule(triangle_rule(1), [](double, double) { return 1.0; }), 0.5, 1e-15);
    EXPECT_NEAR(apply_rule(triangle_rule(2), [](double x, double y) { return x + y; }), 1.0 / 3.0, 1e-15);

    const auto x2y = [](double x, double y) { return x * x * y; };
    const double oracle = brute_force_triangle(x2y, 9);
    EXPECT_NEAR(oracle, 1.0 / 60.0, 2e-7);
    EXPECT_NEAR(apply_rule(triangle_rule(3), x2y), 1.0 / 60.0, 1e-16);
}

TEST(Quadrature, UnsupportedDegrees)
{
    EXPECT_THROW(triangle_rule(-1), std::invalid_argument);
    EXPECT_THROW(triangle_rule(kMaxTriangleDegree + 1), std::invalid_argument);
    EXPECT_THROW(segment_rule(-1), std::invalid_argument);
    EXPECT_THROW(segment_rule(kMaxSegmentDegree + 1), std::invalid_argument);
}

TEST(Quadrature, SegmentRules)
{
    for (int d = 0; d <= kMaxSegmentDegree; ++d) {
        const QuadRule& r = segment_rule(d);
        EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 1.0, 1e-14);
        for (int a = 0; a <= d; ++a) {
            const double got = apply_rule(r, [&](double x, double) { return std::pow(x, a); });
            EXPECT_NEAR(got, 1.0 / (a + 1), 1e-13 / (a + 1)) << d << " " << a;
        }
    }
    EXPECT_NEAR(apply_rule(segment_rule(1), [](double, double) { return 1.0; }), 1.0, 1e-15);
    EXPECT_NEAR(apply_rule(segment_rule(3), [](double x, double) { return x * x * x; }), 0.25, 1e-15);
}

TEST(Quadrature, SegmentOscillatoryIntegrand)
{
    const auto f = [](double x, double) { return std::cos(5.0 * x); };
    const double exact = std::sin(5.0) / 5.0;
    // Error of the six-point Gauss-Legendre rule for this integrand, from an
    // independent numpy evaluation; no rule exact through degree 11 with six
    // points can do better.
    EXPECT_NEAR(std::abs(apply_rule(segment_rule(11), f) - exact), 3.291315908704462e-08, 1e-12);
    EXPECT_LT(std::abs(apply_rule(segment_rule(15), f) - exact), 1e-10);
}

TEST(Quadrature, PushForwardPreservesArea)
{
    const Mesh m = Mesh::build_uniform(3);
    std::vector<ElementQuadPoint> pts;
    for (int d : {0, 2, 5, 10}) {
        for (int k = 0; k < m.num_elements(); ++k) {
            const auto g = m.geometry(k);
            element_quadrature(g, d, std::nullopt, pts);
            double area = 0.0;
            for (const auto& p : pts) area += p.weight;
            EXPECT_NEAR(area, g.area, 1e-15);
        }
    }
    // An arbitrary skewed triangle.
    ElementGeometry g;
    g.vertices = {Vec2{0.1, 0.2}, Vec2{1.3, -0.4}, Vec2{0.7, 0.9}};
    g.area = 0.5 * std::abs((1.2) * (0.7) - (0.6) * (-0.6));
    const double det = 2.0 * g.area;
    g.grad_lambda[1] = Vec2{(0.9 - 0.2) / det, -(0.7 - 0.1) / det};
    g.grad_lambda[2] = Vec2{-(-0.4 - 0.2) / det, (1.3 - 0.1) / det};
    g.grad_lambda[0] = Vec2{-g.grad_lambda[1].x - g.grad_lambda[2].x, -g.grad_lambda[1].y - g.grad_lambda[2].y};
    element_quadrature(g, 7, std::nullopt, pts);
    double area = 0.0;
    for (const auto& p : pts) area += p.weight;
    EXPECT_NEAR(area, g.area, 1e-15);
}

TEST(Quadrature, SingularPointSplitsKeepExactness)
{
    const Mesh m = Mesh::build_uniform(3);
    // (0, 0) lies in the interior of the diagonal of the central cell for odd n.
    std::vector<ElementQuadPoint> pts;
    for (int k = 0; k < m.num_elements(); ++k) {
        const auto g = m.geometry(k);
        element_quadrature(g, 6, Vec2{0.0, 0.0}, pts);
        double area = 0.0, moment = 0.0, plain = 0.0;
        for (const auto& p : pts) {
            area += p.weight;
            moment += p.weight * p.x.x * p.x.x * p.x.y;
        }
        std::vector<ElementQuadPoint> ref;
        element_quadrature(g, 6, std::nullopt, ref);
        for (const auto& p : ref) plain += p.weight * p.x.x * p.x.x * p.x.y;
        EXPECT_NEAR(area, g.area, 1e-15);
        EXPECT_NEAR(moment, plain, 1e-16);
        for (const auto& p : pts) {
            const Vec2 x = g.point(p.bary);
            EXPECT_NEAR(norm(x - p.x), 0.0, 1e-15);
        }
    }
}

TEST(Quadrature, CollapsedRuleResolvesInverseDistance)
{
    // Integral of 1/|x| over the reference triangle with the singularity at (1, 0):
    // with the collapse placed there the integrand becomes smooth.
    const auto f = [](double x, double y) { return 1.0 / std::hypot(x - 1.0, y); };
    // Polar coordinates about (1, 0): integral of sec(phi) over [0, pi/4].
    const double exact = std::asinh(1.0);
    EXPECT_NEAR(apply_rule(collapsed_triangle_rule(6), f), exact, 1e-5);
    EXPECT_NEAR(apply_rule(collapsed_triangle_rule(12), f), exact, 1e-9);
}

TEST(Quadrature, EdgeRuleSplitsAtSingularPoint)
{
    const Mesh m = Mesh::build_uniform(3);
    std::vector<EdgeQuadPoint> pts;
    int split = 0;
    for (const auto& e : m.interior_edges) {
        edge_quadrature(m.vertices, e, 4, Vec2{0.0, 0.0}, pts);
        double length = 0.0;
        for (const auto& p : pts) length += p.weight;
        EXPECT_NEAR(length, e.length, 1e-15);
        if (pts.size() == 2 * segment_rule(4).size()) ++split;
    }
    EXPECT_EQ(split, 1);
}
