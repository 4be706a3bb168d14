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
#include "maclaurin/symmetry.hpp"

#include <cmath>

namespace maclaurin {

bool is_special_orthogonal(const Mat3& m, double tol) {
    const Mat3 mtm = transpose(m) * m;
    if (max_abs(mtm - Mat3::identity()) > tol) return false;
    return std::fabs(det(m) - 1.0) <= tol;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    GroupElement out;
    out.gamma = a.gamma != b.gamma;
    if (a.gamma) {
        out.g = a.g * b.h;
        out.h = a.h * b.g;
    } else {
        out.g = a.g * b.g;
        out.h = a.h * b.h;
    }
    return out;
}

GroupElement inverse(const GroupElement& el) {
    // (gamma; g, h)^{-1} = (gamma; ...) with the pair inverted and swapped
    // when gamma is set, so that compose(el, inverse(el)) is the identity.
    GroupElement out;
    out.gamma = el.gamma;
    if (el.gamma) {
        out.g = transpose(el.h);
        out.h = transpose(el.g);
    } else {
        out.g = transpose(el.g);
        out.h = transpose(el.h);
    }
    return out;
}

ConfigMatrix act_config(const GroupElement& el, const ConfigMatrix& F) {
    const Mat3 core = el.gamma ? transpose(F) : F;
    return el.g * core * transpose(el.h);
}

AlgebraElement adjoint(const GroupElement& el, const AlgebraElement& xi) {
    const Vec3& a = el.gamma ? xi.xi_R : xi.xi_L;
    const Vec3& b = el.gamma ? xi.xi_L : xi.xi_R;
    return AlgebraElement{el.g * a, el.h * b};
}

MomentumPair coadjoint(const GroupElement& el, const MomentumPair& mu) {
    const AlgebraElement image =
        adjoint(el, AlgebraElement{mu.j, mu.c});
    return MomentumPair{image.xi_L, image.xi_R};
}

Mat3 fundamental_field(const AlgebraElement& xi, const ConfigMatrix& F) {
    return hat(xi.xi_L) * F - F * hat(xi.xi_R);
}

MomentumPair momentum_pair(const ConfigMatrix& F, const AlgebraElement& xi,
                           const Units& u) {
    // circulation sign calibrated once against the oblate equilibria; with
    // the hat convention hat(v)w = v x w the sign is +1
    constexpr double circulation_sign = 1.0;
    const Mat3 gen = fundamental_field(xi, F);
    MomentumPair out;
    for (int i = 0; i < 3; ++i) {
        Vec3 ei{0.0, 0.0, 0.0};
        ei[i] = 1.0;
        const Mat3 left = fundamental_field(AlgebraElement{ei, {0, 0, 0}}, F);
        const Mat3 right = fundamental_field(AlgebraElement{{0, 0, 0}, ei}, F);
        out.j[i] = u.T() * trace(transpose(gen) * left);
        out.c[i] = circulation_sign * u.T() * trace(transpose(gen) * right);
    }
    return out;
}

bool stabilizer_test(const GroupElement& el, const ConfigMatrix& F,
                     const AlgebraElement& xi, double tol) {
    if (max_abs(act_config(el, F) - F) > tol) return false;
    const AlgebraElement moved = adjoint(el, xi);
    const AlgebraElement delta{moved.xi_L - xi.xi_L, moved.xi_R - xi.xi_R};
    return max_abs(fundamental_field(delta, F)) <= tol;
}

} // namespace maclaurin
