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

#include "maclaurin/symmetry.hpp"
#include "maclaurin/units.hpp"

// Self-gravitation potential of a homogeneous unit-volume ellipsoid as a
// function of the configuration matrix, its orthogonal invariants, the
// closed spheroid form, the effective (augmented) potential at a given
// velocity, and the equilibrium residual of the rotating-spheroid family.

namespace maclaurin {

struct Invariants {
    double I1; // tr(F F^T)
    double I2; // (tr^2(F F^T) - tr((F F^T)^2)) / 2
};

// Throws std::invalid_argument when |det F - 1| > 1e-12. Inputs are never
// renormalized; an off-manifold matrix is the caller's bug.
void require_unit_determinant(const ConfigMatrix& F);

// Both invariants are >= 3 for unit-determinant F (arithmetic-geometric mean
// on the eigenvalues of F F^T, which multiply to 1).
Invariants invariants(const ConfigMatrix& F);

// -R * integral over [0, inf) of ds / sqrt(s^3 + I1 s^2 + I2 s + 1),
// evaluated to relative accuracy tol; the cubic has no roots on [0, inf)
// for valid F. tol must lie in (0, 1e-4].
double potential(const ConfigMatrix& F, const Units& u, double tol = 1e-10);

// Closed form for the oblate spheroid of eccentricity e in [0, 1):
// -2R (1-e^2)^(1/6) asin(e)/e, with the e -> 0 limit -2R. Below e = 1e-4
// asin(e)/e switches to its Taylor series to dodge 0/0 cancellation.
double spheroid_potential(double e, const Units& u);

// V(F) - (1/2) <<xi_M(F), xi_M(F)>> in the trace metric T tr(A^T B), where
// xi_M is the generator of xi at F. Critical points along the
// unit-determinant manifold are exactly the relative equilibria.
double augmented_potential(const ConfigMatrix& F, const AlgebraElement& xi,
                           const Units& u, double tol = 1e-10);

// Norm of the finite-difference gradient of the augmented potential at the
// family point of eccentricity e, taken along curves F exp(t X) for a basis
// of the 8 traceless directions X, normalized by |V(F(e))|. Central
// differences of step h with one Richardson level; the internal quadrature
// runs at 1e-12 so difference noise stays well below 1e-6.
// xi_scale multiplies the equilibrium velocity; values other than 1 give a
// non-equilibrium control case with a residual far above the noise floor.
double equilibrium_residual(double e, const Units& u, double h = 1e-5,
                            double xi_scale = 1.0);

} // namespace maclaurin
