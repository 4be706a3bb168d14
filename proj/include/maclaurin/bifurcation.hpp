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
#ifndef MACLAURIN_BIFURCATION_HPP
#define MACLAURIN_BIFURCATION_HPP

#include <array>
#include <string>
#include <vector>

#include "maclaurin/family.hpp"
#include "maclaurin/normal_form.hpp"
#include "maclaurin/symmetry.hpp"
#include "maclaurin/units.hpp"

namespace maclaurin {

/// Riemann's classification of steady ellipsoids by axis-length
/// inequalities, extended with the degenerate shapes and the axis-aligned
/// (S-type) configuration.
enum class RiemannClass {
    SphereCase,
    SpheroidCase,
    SEllipsoidCase,
    TypeI,
    TypeII,
    TypeIII,
    Unclassified
};

std::string to_string(RiemannClass c);

/// One bifurcation locus crossing at a fixed eccentricity.
///
/// Each locus is sign-symmetric in the internal spin, so a single event
/// carries the signed pair {-eta, +eta}. All stored per-solution data
/// (kernel, velocity) correspond to eta_locus[0]; the transposition
/// involution maps them to the partner solution at eta_locus[1].
struct BifurcationEvent {
    double e0 = 0.0;
    BranchType branch = BranchType::TypeI;
    std::array<double, 2> eta_locus{0.0, 0.0};
    std::vector<NormalVector> kernel;
    StabilizerLabel stabilizer = StabilizerLabel::TRIVIAL;
    /// generator of the bifurcating motion, xi_perp + eta_locus[0]*(e3, e3)
    AlgebraElement velocity;
};

/// All bifurcation events crossing the family at eccentricity e0: the
/// rotational locus always, the shape locus while S2 > 0, and the adjoint
/// point when e0 is within 1e-9 of the critical eccentricity (where the
/// shape locus has collapsed onto zero spin and is reported only as the
/// adjoint event). Throws std::domain_error outside (0,1).
std::vector<BifurcationEvent> events_at(double e0, const Units& u);

/// Eccentricity at which the total angular velocity matches twice the
/// shape-locus spin, so one component of the bifurcating velocity pair
/// vanishes: the rigidly rotating / internally circulating pair of
/// triaxial solutions. Root of omega^2 - 4 eta2^2 on (0, e_crit).
double jacobi_dedekind_point(const Units& u);

/// Classify an ellipsoid with semiaxes (a1, a2, a3) whose velocity
/// generators lie in the principal plane spanned by axes i and j
/// (1-based). Passing i == j means both generators are aligned with that
/// single axis, which is the S-type configuration. Throws
/// std::domain_error on nonpositive axes, std::invalid_argument on bad
/// plane indices.
RiemannClass riemann_class(double a1, double a2, double a3, int plane_i,
                           int plane_j);

/// True while the spheroid is (formally) stable, i.e. S2(e) > 0.
bool stability_flag(double e, const Units& u);

} // namespace maclaurin

#endif // MACLAURIN_BIFURCATION_HPP
