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

#include <array>
#include <cmath>
#include <complex>

namespace elastodg {

using Complex = std::complex<double>;

/// Real point or vector in the plane.
struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : y; }
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Complex 2-vector (one value of a vector field).
using CVec2 = std::array<Complex, 2>;

/// Complex 2x2 matrix stored row-major, m[i][j].
using CMat2 = std::array<std::array<Complex, 2>, 2>;

inline CVec2 operator+(const CVec2& a, const CVec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline CVec2 operator-(const CVec2& a, const CVec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline CVec2 operator*(Complex s, const CVec2& a) { return {s * a[0], s * a[1]}; }

inline CMat2 operator+(const CMat2& a, const CMat2& b)
{
    return {{{a[0][0] + b[0][0], a[0][1] + b[0][1]}, {a[1][0] + b[1][0], a[1][1] + b[1][1]}}};
}
inline CMat2 operator-(const CMat2& a, const CMat2& b)
{
    return {{{a[0][0] - b[0][0], a[0][1] - b[0][1]}, {a[1][0] - b[1][0], a[1][1] - b[1][1]}}};
}

inline CVec2 mul(const CMat2& m, Vec2 v)
{
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}

/// Sum_i a_i conj(b_i).
inline Complex inner(const CVec2& a, const CVec2& b)
{
    return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]);
}

/// Frobenius pairing a : conj(b).
inline Complex inner(const CMat2& a, const CMat2& b)
{
    Complex s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += a[i][j] * std::conj(b[i][j]);
    return s;
}

inline double norm2(const CVec2& a) { return std::norm(a[0]) + std::norm(a[1]); }
inline double norm2(const CMat2& a) { return std::real(inner(a, a)); }

inline Complex trace(const CMat2& m) { return m[0][0] + m[1][1]; }

inline CMat2 symmetric_part(const CMat2& g)
{
    const Complex off = 0.5 * (g[0][1] + g[1][0]);
    return {{{g[0][0], off}, {off, g[1][1]}}};
}

} // namespace elastodg
