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
#include "maclaurin/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "maclaurin/family.hpp"
#include "maclaurin/quadrature.hpp"

namespace maclaurin {

void require_unit_determinant(const ConfigMatrix& F) {
    if (std::fabs(det(F) - 1.0) > 1e-12)
        throw std::invalid_argument(
            "configuration matrix must have unit determinant");
}

Invariants invariants(const ConfigMatrix& F) {
    require_unit_determinant(F);
    const Mat3 b = F * transpose(F);
    const double t1 = trace(b);
    const double t2 = trace(b * b);
    return Invariants{t1, 0.5 * (t1 * t1 - t2)};
}

double potential(const ConfigMatrix& F, const Units& u, double tol) {
    if (!(tol > 0.0) || tol > 1e-4)
        throw std::invalid_argument(
            "potential: relative tolerance must lie in (0, 1e-4]");
    const Invariants inv = invariants(F);
    auto integrand = [&inv](double s) {
        return 1.0 / std::sqrt(((s + inv.I1) * s + inv.I2) * s + 1.0);
    };
    return -u.R() * integrate_zero_to_inf(integrand, tol).value;
}

double spheroid_potential(double e, const Units& u) {
    if (!(e >= 0.0) || !(e < 1.0))
        throw std::domain_error(
            "spheroid_potential: eccentricity must lie in [0, 1)");
    double asinc; // asin(e)/e with the removable singularity filled in
    if (e < 1e-4) {
        const double e2 = e * e;
        asinc = 1.0 + e2 * (1.0 / 6.0 +
                            e2 * (3.0 / 40.0 +
                                  e2 * (5.0 / 112.0 + e2 * (35.0 / 1152.0))));
    } else {
        asinc = std::asin(e) / e;
    }
    return -2.0 * u.R() * std::pow(1.0 - e * e, 1.0 / 6.0) * asinc;
}

double augmented_potential(const ConfigMatrix& F, const AlgebraElement& xi,
                           const Units& u, double tol) {
    const Mat3 gen = fundamental_field(xi, F);
    const double kinetic = 0.5 * u.T() * trace(transpose(gen) * gen);
    return potential(F, u, tol) - kinetic;
}

double equilibrium_residual(double e, const Units& u, double h,
                            double xi_scale) {
    if (!(e > 0.0) || !(e < 1.0))
        throw std::domain_error(
            "equilibrium_residual: eccentricity must lie in (0, 1)");
    if (!(h > 0.0))
        throw std::domain_error("equilibrium_residual: step must be positive");

    const FamilyPoint p = family_point(e, u);
    const AlgebraElement xi{xi_scale * p.xi_perp.xi_L,
                            xi_scale * p.xi_perp.xi_R};
    const double quad_tol = 1e-12;

    // traceless directions spanning the tangent space of the
    // unit-determinant manifold
    Mat3 basis[8];
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) {
                basis[n] = Mat3::zero();
                basis[n](i, j) = 1.0;
                ++n;
            }
    basis[6] = Mat3::diag(1.0, -1.0, 0.0);
    basis[7] = Mat3::diag(1.0, 1.0, -2.0);

    auto along = [&](const Mat3& x, double t) {
        return augmented_potential(p.F * expm(t * x), xi, u, quad_tol);
    };

    double sum_sq = 0.0;
    for (const Mat3& x : basis) {
        auto central = [&](double step) {
            return (along(x, step) - along(x, -step)) / (2.0 * step);
        };
        const double coarse = central(h);
        const double fine = central(0.5 * h);
        const double grad = (4.0 * fine - coarse) / 3.0;
        sum_sq += grad * grad;
    }
    return std::sqrt(sum_sq) / std::fabs(spheroid_potential(e, u));
}

} // namespace maclaurin
