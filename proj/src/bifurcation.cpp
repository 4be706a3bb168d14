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
#include "maclaurin/bifurcation.hpp"

#include <cmath>
#include <stdexcept>

#include "maclaurin/rootfind.hpp"

namespace maclaurin {

namespace {

AlgebraElement branch_velocity(double e0, double eta, const Units& u) {
    const double half_omega = 0.5 * std::sqrt(omega_squared(e0, u));
    AlgebraElement xi;
    xi.xi_L = {0.0, 0.0, half_omega + eta};
    xi.xi_R = {0.0, 0.0, -half_omega + eta};
    return xi;
}

BifurcationEvent make_event(double e0, BranchType branch, double eta,
                            const Units& u) {
    BifurcationEvent ev;
    ev.e0 = e0;
    ev.branch = branch;
    ev.eta_locus = {-eta, eta};
    ev.kernel = kernel_basis(e0, branch, u);
    ev.stabilizer = stabilizer_of_normal_vector(ev.kernel.front(), branch);
    ev.velocity = branch_velocity(e0, ev.eta_locus[0], u);
    return ev;
}

} // namespace

std::string to_string(RiemannClass c) {
    switch (c) {
        case RiemannClass::SphereCase: return "Sphere-case";
        case RiemannClass::SpheroidCase: return "Spheroid-case";
        case RiemannClass::SEllipsoidCase: return "S-ellipsoid-case";
        case RiemannClass::TypeI: return "TypeI";
        case RiemannClass::TypeII: return "TypeII";
        case RiemannClass::TypeIII: return "TypeIII";
        case RiemannClass::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::vector<BifurcationEvent> events_at(double e0, const Units& u) {
    if (!(e0 > 0.0 && e0 < 1.0))
        throw std::domain_error("events_at: eccentricity must lie in (0,1)");
    const CoefficientSet cs = coefficients(e0, u);
    const bool at_adjoint =
        std::fabs(e0 - critical_eccentricity(u)) <= 1e-9;

    std::vector<BifurcationEvent> events;
    events.push_back(
        make_event(e0, BranchType::TypeI, std::sqrt(cs.eta1_sq), u));
    if (cs.S2 > 0.0 && !at_adjoint)
        events.push_back(
            make_event(e0, BranchType::TypeS, std::sqrt(*cs.eta2_sq), u));
    if (at_adjoint)
        events.push_back(make_event(e0, BranchType::AdjointS, 0.0, u));
    return events;
}

double jacobi_dedekind_point(const Units& u) {
    auto gap = [&u](double e) {
        return omega_squared(e, u) -
               4.0 * coefficients(e, u).eta2_sq.value();
    };
    // negative near the sphere (the spin locus starts at a finite height
    // while omega^2 vanishes), positive just below the critical point
    return brent(gap, 0.1, 0.95, 1e-12);
}

RiemannClass riemann_class(double a1, double a2, double a3, int plane_i,
                           int plane_j) {
    if (!(a1 > 0.0) || !(a2 > 0.0) || !(a3 > 0.0))
        throw std::domain_error("riemann_class: semiaxes must be positive");
    if (plane_i < 1 || plane_i > 3 || plane_j < 1 || plane_j > 3)
        throw std::invalid_argument(
            "riemann_class: plane indices must be in {1,2,3}");

    const double a[3] = {a1, a2, a3};
    const double scale = std::max({a1, a2, a3});
    auto same = [scale](double x, double y) {
        return std::fabs(x - y) <= 1e-12 * scale;
    };
    if (same(a1, a2) && same(a2, a3)) return RiemannClass::SphereCase;
    if (same(a1, a2) || same(a2, a3) || same(a1, a3))
        return RiemannClass::SpheroidCase;
    if (plane_i == plane_j) return RiemannClass::SEllipsoidCase;

    const int k = 5 - plane_i - plane_j; // 0-based index of the off-plane axis
    const double ak = a[k];
    const double ai = a[plane_i - 1];
    const double aj = a[plane_j - 1];
    if (ak >= 0.5 * (ai + aj)) return RiemannClass::TypeI;
    if (ak <= 0.5 * std::fabs(ai - aj)) {
        // under the half-gap ak cannot be the largest axis, so it is
        // either the smallest or the middle one
        if (ak < ai && ak < aj) return RiemannClass::TypeIII;
        return RiemannClass::TypeII;
    }
    return RiemannClass::Unclassified;
}

bool stability_flag(double e, const Units& u) {
    return coefficients(e, u).S2 > 0.0;
}

} // namespace maclaurin
