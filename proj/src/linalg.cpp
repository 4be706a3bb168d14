// ----------------------------------------------------------------------------
// Copyright 2026 the maclaurin authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// ----------------------------------------------------------------------------
#include "maclaurin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maclaurin {

Mat3 Mat3::identity() { return diag(1.0, 1.0, 1.0); }

Mat3 Mat3::zero() { return Mat3{}; }

Mat3 Mat3::diag(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
    return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
    return r;
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3 inverse(const Mat3& a) {
    Mat3 r;
    const double d = det(a);
    r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return r;
}

double frobenius(const Mat3& a) {
    double s = 0.0;
    for (double v : a.m) s += v * v;
    return std::sqrt(s);
}

double max_abs(const Mat3& a) {
    double s = 0.0;
    for (double v : a.m) s = std::max(s, std::fabs(v));
    return s;
}

Mat3 hat(const Vec3& v) {
    Mat3 r;
    r(0, 1) = -v[2];
    r(0, 2) = v[1];
    r(1, 0) = v[2];
    r(1, 2) = -v[0];
    r(2, 0) = -v[1];
    r(2, 1) = v[0];
    return r;
}

Mat3 rotation(const Vec3& axis, double angle) {
    const double n = norm(axis);
    const Vec3 u = (1.0 / n) * axis;
    const Mat3 k = hat(u);
    const double c = std::cos(angle), s = std::sin(angle);
    return Mat3::identity() + s * k + (1.0 - c) * (k * k);
}

Mat3 expm(const Mat3& x) {
    // scale so the Taylor series converges fast, then square back
    int squarings = 0;
    double scale = max_abs(x);
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    Mat3 xs = std::ldexp(1.0, -squarings) * x;
    Mat3 term = Mat3::identity();
    Mat3 sum = term;
    for (int k = 1; k <= 16; ++k) {
        term = (1.0 / k) * (term * xs);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

SymEig jacobi_eigensystem(const std::vector<double>& a_in, int n) {
    std::vector<double> a = a_in;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    double anorm2 = 0.0;
    for (double x : a) anorm2 += x * x;
    const double thresh = 1e-14 * std::sqrt(anorm2);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        const double off = off_norm();
        if (off <= thresh) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // snap entries already at rounding level relative to the
                // diagonal so the sweep terminates
                if (sweep > 3 &&
                    std::fabs(apq) <= 1e-18 * (std::fabs(app) + std::fabs(aqq))) {
                    a[p * n + q] = a[q * n + p] = 0.0;
                    continue;
                }
                if (apq == 0.0) continue;
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e12) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = a[i * n + p];
                        const double aiq = a[i * n + q];
                        a[i * n + p] = a[p * n + i] = aip - s * (aiq + tau * aip);
                        a[i * n + q] = a[q * n + i] = aiq + s * (aip - tau * aiq);
                    }
                    const double vip = v[static_cast<size_t>(i) * n + p];
                    const double viq = v[static_cast<size_t>(i) * n + q];
                    v[static_cast<size_t>(i) * n + p] = vip - s * (viq + tau * vip);
                    v[static_cast<size_t>(i) * n + q] = viq + s * (vip - tau * viq);
                }
            }
        }
    }

    SymEig out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a[i * n + i];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return out.values[i] < out.values[j]; });
    SymEig sorted;
    sorted.values.resize(n);
    sorted.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        sorted.values[k] = out.values[order[k]];
        for (int i = 0; i < n; ++i)
            sorted.vectors[static_cast<size_t>(k) * n + i] =
                v[static_cast<size_t>(i) * n + order[k]];
    }
    return sorted;
}

} // namespace maclaurin
