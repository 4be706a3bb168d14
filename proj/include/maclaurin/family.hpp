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

#include <optional>

#include "maclaurin/symmetry.hpp"
#include "maclaurin/units.hpp"

// The oblate-spheroid equilibrium family parametrized by eccentricity e of
// the meridional section: configuration, angular speed, velocity split,
// momentum scalar, and the coefficient set of the stability normal form.

namespace maclaurin {

struct FamilyPoint {
    double e;
    ConfigMatrix F;     // diag(a, a, c), a = (1-e^2)^(-1/6), c = (1-e^2)^(1/3)
    double omega;       // angular speed, positive branch
    AlgebraElement xi_perp; // (omega/2) * (e3, -e3)
    double mu_hat;      // 2 (1-e^2)^(-1/3) T omega
};

struct CoefficientSet {
    double e;
    double A1, A2;      // rotational-block coefficients; A1 > A2 > 0
    double S1, S2;      // shape-block coefficients; S2 changes sign once
    Vec3 R1_diag;       // locked-inertia block: (2T(3-2e^2), 2T, 2T)
    double eta1_sq;     // internal-spin locus on the rotational block
    // Locus on the shape block, S2/(8T); no locus exists where S2 < 0, so
    // the value is absent there rather than negative.
    std::optional<double> eta2_sq;
};

// Squared angular speed of the equilibrium at eccentricity e:
// pi rho0 G [2 sqrt(1-e^2)(3-2e^2) asin(e)/e^3 - 6(1-e^2)/e^2].
// Below e = 0.1 the bracket is evaluated by its Taylor series; the closed
// form loses ~e^{-2} digits to cancellation there.
double omega_squared(double e, const Units& u);

FamilyPoint family_point(double e, const Units& u);

// Inverse of e -> mu_hat(e), well defined because mu_hat is strictly
// increasing; |mu_hat(result) - mu_target| <= 1e-10 * mu_target.
// Throws std::out_of_range if no bracket exists in [1e-8, 1 - 1e-12].
double invert_mu(double mu_target, const Units& u);

CoefficientSet coefficients(double e, const Units& u);

// Unique zero of S2 on (0,1), bracketed in [0.9, 0.99]; near 0.952887.
double critical_eccentricity(const Units& u);

} // namespace maclaurin
