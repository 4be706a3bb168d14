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
#include "maclaurin/family.hpp"

#include <cmath>
#include <stdexcept>

#include "maclaurin/rootfind.hpp"

namespace maclaurin {

namespace {

void require_open_unit(double e, const char* who) {
    if (!(e > 0.0) || !(e < 1.0))
        throw std::domain_error(std::string(who) +
                                ": eccentricity must lie in (0, 1)");
}

// Taylor coefficients of the angular-speed bracket in powers of e^2,
// starting at e^2; exact rationals, truncation below 1e-16 relative for
// e < 0.1.
constexpr double omega_series[] = {
    8.0 / 15.0,       8.0 / 105.0,        0.0,
    -64.0 / 3465.0,   -1024.0 / 45045.0,  -1024.0 / 45045.0,
    -16384.0 / 765765.0, -8192.0 / 415701.0};

} // namespace

double omega_squared(double e, const Units& u) {
    require_open_unit(e, "omega_squared");
    double bracket;
    if (e < 0.1) {
        const double e2 = e * e;
        bracket = 0.0;
        for (int k = 7; k >= 0; --k) bracket = omega_series[k] + e2 * bracket;
        bracket *= e2;
    } else {
        const double q = std::sqrt(1.0 - e * e);
        bracket = 2.0 * q * (3.0 - 2.0 * e * e) * std::asin(e) / (e * e * e) -
                  6.0 * (1.0 - e * e) / (e * e);
    }
    return u.pi_G_rho0() * bracket;
}

FamilyPoint family_point(double e, const Units& u) {
    require_open_unit(e, "family_point");
    const double q2 = 1.0 - e * e;
    const double a = std::pow(q2, -1.0 / 6.0);
    const double c = std::pow(q2, 1.0 / 3.0);
    FamilyPoint p;
    p.e = e;
    p.F = Mat3::diag(a, a, c);
    p.omega = std::sqrt(omega_squared(e, u));
    const double half = 0.5 * p.omega;
    p.xi_perp = AlgebraElement{{0.0, 0.0, half}, {0.0, 0.0, -half}};
    p.mu_hat = 2.0 * std::pow(q2, -1.0 / 3.0) * u.T() * p.omega;
    return p;
}

double invert_mu(double mu_target, const Units& u) {
    if (!(mu_target > 0.0))
        throw std::out_of_range("invert_mu: momentum target must be positive");
    const double lo = 1e-8, hi = 1.0 - 1e-12;
    auto f = [&](double e) { return family_point(e, u).mu_hat - mu_target; };
    if (f(lo) > 0.0 || f(hi) < 0.0)
        throw std::out_of_range(
            "invert_mu: momentum target outside the family's range");
    const double e = brent(f, lo, hi, 1e-14);
    return e;
}

CoefficientSet coefficients(double e, const Units& u) {
    require_open_unit(e, "coefficients");
    const double T = u.T(), R = u.R();
    const double om2 = omega_squared(e, u);
    const double e2 = e * e, e4 = e2 * e2, e5 = e4 * e;
    const double q = std::sqrt(1.0 - e2);
    const double asn = std::asin(e);

    CoefficientSet cs;
    cs.e = e;
    cs.A1 = (8.0 - e4 - 4.0 * e2) * T * om2 / (e4 * std::cbrt(1.0 - e2));
    cs.A2 = 8.0 * std::pow(1.0 - e2, 1.0 / 6.0) * T * om2 / e4;
    cs.S1 = (2.0 * R / e5) *
            (9.0 * e * (3.0 - 5.0 * e2 + 2.0 * e4) -
             q * (27.0 - 36.0 * e2 + 8.0 * e4) * asn);
    cs.S2 = (R / e5) * (e * (1.0 - e2) * (3.0 + 4.0 * e2) -
                        q * (3.0 + 2.0 * e2 - 4.0 * e4) * asn);
    cs.R1_diag = Vec3{2.0 * T * (3.0 - 2.0 * e2), 2.0 * T, 2.0 * T};
    cs.eta1_sq = (cs.A1 * cs.A1 - cs.A2 * cs.A2) *
                 std::pow(1.0 - e2, 2.0 / 3.0) / (T * T * om2);
    if (cs.S2 >= 0.0)
        cs.eta2_sq = cs.S2 / (8.0 * T);
    else
        cs.eta2_sq = std::nullopt;
    return cs;
}

double critical_eccentricity(const Units& u) {
    auto s2 = [&](double e) { return coefficients(e, u).S2; };
    if (!(s2(0.9) > 0.0) || !(s2(0.99) < 0.0))
        throw std::runtime_error(
            "critical_eccentricity: sign structure of S2 not as expected");
    return brent(s2, 0.9, 0.99, 1e-12);
}

} // namespace maclaurin
