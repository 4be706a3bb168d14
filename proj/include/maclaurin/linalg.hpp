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
#pragma once

#include <array>
#include <vector>

namespace maclaurin {

using Vec3 = std::array<double, 3>;

struct Mat3 {
    // row-major
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    static Mat3 identity();
    static Mat3 zero();
    static Mat3 diag(double a, double b, double c);
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(double s, const Mat3& a);
Vec3 operator*(const Mat3& a, const Vec3& v);

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);

Mat3 transpose(const Mat3& a);
double trace(const Mat3& a);
double det(const Mat3& a);
Mat3 inverse(const Mat3& a);
double frobenius(const Mat3& a);
double max_abs(const Mat3& a);

// hat(v) w = v x w (right-handed convention; all sign choices downstream
// of the group actions hang off this one definition)
Mat3 hat(const Vec3& v);

// rotation by angle about a unit axis (Rodrigues)
Mat3 rotation(const Vec3& axis, double angle);

// exp(X) by scaling-and-squaring Taylor; exact enough for ||X|| up to O(1)
Mat3 expm(const Mat3& x);

// Eigenvalues and eigenvectors of a symmetric n x n matrix by cyclic Jacobi
// rotations. a is row-major and is not modified. Eigenvalues ascend;
// vectors[k*n ... k*n+n-1] is the eigenvector of values[k]. Off-diagonal
// threshold is scaled by the Frobenius norm of the input so convergence is
// reachable at any magnitude; rounding leaves eigenvalue errors near
// eps * ||a||.
struct SymEig {
    std::vector<double> values;
    std::vector<double> vectors;
};
SymEig jacobi_eigensystem(const std::vector<double>& a, int n);

} // namespace maclaurin
