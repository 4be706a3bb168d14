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

#include "maclaurin/linalg.hpp"
#include "maclaurin/units.hpp"

// Symmetry group Z2 x| (SO(3) x SO(3)): pairs of rotations extended by a
// transposition flag that swaps the two factors. Acts on unit-determinant
// configuration matrices by rotation on both sides and by matrix transpose.

namespace maclaurin {

// Unit-determinant 3x3 configuration; validated where contracts demand it.
using ConfigMatrix = Mat3;

// (gamma; g, h): gamma is the transposition flag, g the spatial rotation,
// h the body rotation. g, h are special orthogonal to 1e-12.
struct GroupElement {
    bool gamma = false;
    Mat3 g = Mat3::identity();
    Mat3 h = Mat3::identity();
};

// (xi_L, xi_R) in so(3)+so(3), identified with two 3-vectors via the hat map.
struct AlgebraElement {
    Vec3 xi_L{0.0, 0.0, 0.0};
    Vec3 xi_R{0.0, 0.0, 0.0};
};

// Angular momentum j and circulation c.
struct MomentumPair {
    Vec3 j{0.0, 0.0, 0.0};
    Vec3 c{0.0, 0.0, 0.0};
};

bool is_special_orthogonal(const Mat3& m, double tol = 1e-12);

// Semidirect composition: the transposition flag of the left factor swaps the
// rotation pair of the right factor before the componentwise product.
GroupElement compose(const GroupElement& a, const GroupElement& b);

GroupElement inverse(const GroupElement& el);

// Left action on configurations: F -> g * (F or F^T) * h^T, with the
// transpose applied first when gamma is set. The transposition-first order is
// the one compatible with compose (act(a, act(b, F)) == act(compose(a,b), F)).
ConfigMatrix act_config(const GroupElement& el, const ConfigMatrix& F);

// Adjoint action on algebra elements: swap (xi_L, xi_R) first when gamma is
// set, then rotate the components by (g, h). The coadjoint action on momentum
// pairs uses the identical formula.
AlgebraElement adjoint(const GroupElement& el, const AlgebraElement& xi);
MomentumPair coadjoint(const GroupElement& el, const MomentumPair& mu);

// Fundamental vector field at F: hat(xi_L) * F - F * hat(xi_R). Tangent to
// the unit-determinant manifold: tr(F^{-1} * result) = 0.
Mat3 fundamental_field(const AlgebraElement& xi, const ConfigMatrix& F);

// Momentum pair of the velocity xi at configuration F under the trace metric
// T*tr(A^T B): j_i and c_i pair the generator of (e_i, 0) resp. (0, e_i)
// against xi's generator. The circulation sign is calibrated so that the
// oblate-spheroid equilibria yield (j, c) = mu_hat * (e3, -e3).
MomentumPair momentum_pair(const ConfigMatrix& F, const AlgebraElement& xi,
                           const Units& u);

// True iff el fixes F and moves xi only within the configuration-stabilizer
// algebra at F (the generator of Ad_el(xi) - xi vanishes at F).
bool stabilizer_test(const GroupElement& el, const ConfigMatrix& F,
                     const AlgebraElement& xi, double tol = 1e-9);

} // namespace maclaurin
