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
#include "maclaurin/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maclaurin {

namespace {

void require_open_unit(double e, const char* who) {
    if (!(e > 0.0) || !(e < 1.0))
        throw std::domain_error(std::string(who) +
                                ": eccentricity must lie in (0, 1)");
}

// internal-spin weight kappa = (1-e^2)^(-1/3) T Omega
double spin_weight(double e, const Units& u) {
    return std::pow(1.0 - e * e, -1.0 / 3.0) * u.T() *
           std::sqrt(omega_squared(e, u));
}

double max_abs10(const std::array<double, 10>& x) {
    double m = 0.0;
    for (double c : x) m = std::max(m, std::fabs(c));
    return m;
}

NormalVector apply_rep(double theta, bool flip, const NormalVector& v) {
    NormalVector w;
    const Mat4 q = rep_on_qmu(theta);
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += q[4 * i + j] * v.lambda[j];
        w.lambda[i] = s;
    }
    const Mat3 r = rep_on_S(theta);
    w.a = r * v.a;
    w.beta = r * v.beta;
    if (flip) {
        const std::array<double, 4> l = w.lambda;
        w.lambda = {l[1], l[0], -l[3], -l[2]};
        const Mat3 f = rep_on_S_flip();
        w.a = f * w.a;
        w.beta = f * w.beta;
    }
    return w;
}

bool fixes(double theta, bool flip, const NormalVector& v) {
    const NormalVector w = apply_rep(theta, flip, v);
    const std::array<double, 10> a = flatten(v);
    const std::array<double, 10> b = flatten(w);
    const double scale = std::max(1.0, max_abs10(a));
    for (int i = 0; i < 10; ++i)
        if (std::fabs(a[i] - b[i]) > 1e-12 * scale) return false;
    return true;
}

} // namespace

std::array<double, 10> flatten(const NormalVector& v) {
    return {v.lambda[0], v.lambda[1], v.lambda[2], v.lambda[3],
            v.a[0],      v.a[1],      v.a[2],
            v.beta[0],   v.beta[1],   v.beta[2]};
}

NormalVector unflatten(const std::array<double, 10>& x) {
    NormalVector v;
    v.lambda = {x[0], x[1], x[2], x[3]};
    v.a = {x[4], x[5], x[6]};
    v.beta = {x[7], x[8], x[9]};
    return v;
}

const char* to_string(BranchType b) {
    switch (b) {
    case BranchType::TypeI: return "TypeI";
    case BranchType::TypeS: return "TypeS";
    case BranchType::AdjointS: return "AdjointS";
    }
    return "?";
}

const char* to_string(StabilizerLabel s) {
    switch (s) {
    case StabilizerLabel::FULL_O2_TILDE: return "FULL_O2_TILDE";
    case StabilizerLabel::SO2_DIAG: return "SO2_DIAG";
    case StabilizerLabel::Z2_DIAG_E3: return "Z2_DIAG_E3";
    case StabilizerLabel::D2_TILDE_E3: return "D2_TILDE_E3";
    case StabilizerLabel::TRIVIAL: return "TRIVIAL";
    }
    return "?";
}

Mat3 embed_S(const Vec3& a, double e) {
    if (!(e >= 0.0) || !(e < 1.0))
        throw std::domain_error("embed_S: eccentricity must lie in [0, 1)");
    const double axis_ratio = std::sqrt(1.0 - e * e); // c/a
    Mat3 m = Mat3::zero();
    m(0, 0) = a[0] + a[1];
    m(0, 1) = a[2];
    m(1, 0) = a[2];
    m(1, 1) = a[0] - a[1];
    m(2, 2) = -2.0 * axis_ratio * a[0];
    return m;
}

Mat3 rep_on_S(double theta) {
    const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
    Mat3 m = Mat3::identity();
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
    return m;
}

Mat3 rep_on_S_flip() { return Mat3::diag(1.0, 1.0, -1.0); }

Mat4 rep_on_qmu(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return Mat4{c,   0.0, -s,  0.0,
                0.0, c,   0.0, -s,
                s,   0.0, c,   0.0,
                0.0, s,   0.0, c};
}

Mat4 rep_on_qmu_flip() {
    return Mat4{0.0, 1.0, 0.0, 0.0,
                1.0, 0.0, 0.0, 0.0,
                0.0, 0.0, 0.0, -1.0,
                0.0, 0.0, -1.0, 0.0};
}

double momentum_JN(double eta, const NormalVector& v, double e,
                   const Units& u) {
    require_open_unit(e, "momentum_JN");
    const double kappa = spin_weight(e, u);
    const auto& l = v.lambda;
    return kappa * eta * (l[0] * l[0] - l[1] * l[1] + l[2] * l[2] -
                          l[3] * l[3]) +
           2.0 * eta * (v.a[1] * v.beta[2] - v.a[2] * v.beta[1]);
}

Mat10 momentum_hessian(double e, double eta, const Units& u) {
    require_open_unit(e, "momentum_hessian");
    const double kappa = spin_weight(e, u);
    Mat10 m{};
    const double d = 2.0 * eta * kappa;
    m[0 * 10 + 0] = d;
    m[1 * 10 + 1] = -d;
    m[2 * 10 + 2] = d;
    m[3 * 10 + 3] = -d;
    // shape/dual coupling 2 eta J2 and its transpose
    m[5 * 10 + 9] = 2.0 * eta;
    m[6 * 10 + 8] = -2.0 * eta;
    m[9 * 10 + 5] = 2.0 * eta;
    m[8 * 10 + 6] = -2.0 * eta;
    return m;
}

Mat10 hessian_N(double e, double eta, const Units& u) {
    require_open_unit(e, "hessian_N");
    const CoefficientSet cs = coefficients(e, u);
    const double kappa = spin_weight(e, u);
    const double T = u.T();

    Mat10 h{};
    // rotational block: two identical 2x2 sub-blocks
    for (int p = 0; p < 2; ++p) {
        const int i = 2 * p;
        h[i * 10 + i] = cs.A1 - eta * kappa;
        h[i * 10 + i + 1] = -cs.A2;
        h[(i + 1) * 10 + i] = -cs.A2;
        h[(i + 1) * 10 + i + 1] = cs.A1 + eta * kappa;
    }
    // shape block
    h[4 * 10 + 4] = cs.S1;
    h[5 * 10 + 5] = cs.S2;
    h[6 * 10 + 6] = cs.S2;
    // dual block: inverse of the locked-inertia diagonal
    h[7 * 10 + 7] = 1.0 / cs.R1_diag[0];
    h[8 * 10 + 8] = 1.0 / (2.0 * T);
    h[9 * 10 + 9] = 1.0 / (2.0 * T);
    // coupling -2 eta J2 between shape and dual (and its transpose)
    h[5 * 10 + 9] = -2.0 * eta;
    h[6 * 10 + 8] = 2.0 * eta;
    h[9 * 10 + 5] = -2.0 * eta;
    h[8 * 10 + 6] = 2.0 * eta;
    return h;
}

Mat10 symplectic_matrix(double e, const Units& u) {
    require_open_unit(e, "symplectic_matrix");
    const double s = 2.0 * spin_weight(e, u);
    Mat10 m{};
    m[0 * 10 + 2] = -s;
    m[1 * 10 + 3] = s;
    m[2 * 10 + 0] = s;
    m[3 * 10 + 1] = -s;
    for (int i = 0; i < 3; ++i) {
        m[(4 + i) * 10 + (7 + i)] = 1.0;
        m[(7 + i) * 10 + (4 + i)] = -1.0;
    }
    return m;
}

SpectrumReport spectrum(double e, double eta, const Units& u) {
    require_open_unit(e, "spectrum");
    const CoefficientSet cs = coefficients(e, u);
    const double kappa = spin_weight(e, u);
    const double T = u.T();
    const double b = 1.0 / (2.0 * T);

    SpectrumReport r;
    r.e = e;
    r.eta = eta;
    const double root1 = std::sqrt(cs.A2 * cs.A2 + eta * eta * kappa * kappa);
    r.sigma1_plus = cs.A1 + root1;
    r.sigma1_minus = cs.A1 - root1;
    r.sigma2_a = cs.S1;
    r.sigma2_b = 1.0 / cs.R1_diag[0];
    const double root2 = std::sqrt((b - cs.S2) * (b - cs.S2) +
                                   16.0 * eta * eta);
    r.sigma2_plus = 0.5 * (b + cs.S2 + root2);
    r.sigma2_minus = 0.5 * (b + cs.S2 - root2);
    r.stable = cs.S2 > 0.0;

    const Mat10 h = hessian_N(e, eta, u);
    std::vector<double> hv(h.begin(), h.end());
    const SymEig eig = jacobi_eigensystem(hv, 10);
    r.numeric_eigenvalues = eig.values;

    double hnorm = 0.0;
    for (double c : h) hnorm += c * c;
    hnorm = std::sqrt(hnorm);
    for (int k = 0; k < 10; ++k)
        if (std::fabs(eig.values[k]) <= 1e-9 * hnorm) {
            std::array<double, 10> x{};
            for (int i = 0; i < 10; ++i) x[i] = eig.vectors[10 * k + i];
            r.kernel.push_back(unflatten(x));
        }
    return r;
}

std::vector<NormalVector> kernel_basis_at(double e0, BranchType branch,
                                          double eta, const Units& u) {
    require_open_unit(e0, "kernel_basis_at");
    const CoefficientSet cs = coefficients(e0, u);
    const double T = u.T();

    auto on_locus = [eta](double locus_sq) {
        const double locus = std::sqrt(locus_sq);
        return std::fabs(std::fabs(eta) - locus) <= 1e-9 * std::max(1.0, locus);
    };

    switch (branch) {
    case BranchType::TypeI: {
        if (!on_locus(cs.eta1_sq))
            throw std::domain_error(
                "kernel_basis_at: eta is not on the rotational-block locus");
        const double kappa = spin_weight(e0, u);
        const double dt = (cs.A1 + eta * kappa) / cs.A2;
        NormalVector v1, v2;
        v1.lambda = {dt, 1.0, 0.0, 0.0};
        v2.lambda = {0.0, 0.0, dt, 1.0};
        return {v1, v2};
    }
    case BranchType::TypeS: {
        if (!cs.eta2_sq.has_value())
            throw std::domain_error(
                "kernel_basis_at: no shape-block locus beyond the critical "
                "eccentricity");
        if (!on_locus(*cs.eta2_sq))
            throw std::domain_error(
                "kernel_basis_at: eta is not on the shape-block locus");
        NormalVector v1, v2;
        v1.a = {0.0, 1.0, 0.0};
        v1.beta = {0.0, 0.0, 4.0 * T * eta};
        v2.a = {0.0, 0.0, 1.0};
        v2.beta = {0.0, -4.0 * T * eta, 0.0};
        return {v1, v2};
    }
    case BranchType::AdjointS: {
        if (std::fabs(e0 - critical_eccentricity(u)) > 1e-9)
            throw std::domain_error(
                "kernel_basis_at: adjoint branch exists only at the critical "
                "eccentricity");
        if (std::fabs(eta) > 1e-12)
            throw std::domain_error(
                "kernel_basis_at: adjoint branch sits at zero internal spin");
        NormalVector v;
        v.a = {0.0, 1.0, 0.0};
        return {v};
    }
    }
    throw std::logic_error("kernel_basis_at: unknown branch");
}

std::vector<NormalVector> kernel_basis(double e0, BranchType branch,
                                       const Units& u) {
    switch (branch) {
    case BranchType::TypeI:
        return kernel_basis_at(e0, branch,
                               -std::sqrt(coefficients(e0, u).eta1_sq), u);
    case BranchType::TypeS: {
        const CoefficientSet cs = coefficients(e0, u);
        if (!cs.eta2_sq.has_value())
            throw std::domain_error(
                "kernel_basis: no shape-block locus beyond the critical "
                "eccentricity");
        return kernel_basis_at(e0, branch, -std::sqrt(*cs.eta2_sq), u);
    }
    case BranchType::AdjointS:
        return kernel_basis_at(e0, branch, 0.0, u);
    }
    throw std::logic_error("kernel_basis: unknown branch");
}

double kernel_ratio_D(double e, const Units& u) {
    require_open_unit(e, "kernel_ratio_D");
    const CoefficientSet cs = coefficients(e, u);
    return (cs.A1 - std::sqrt(cs.eta1_sq) * spin_weight(e, u)) / cs.A2;
}

StabilizerLabel stabilizer_of_normal_vector(const NormalVector& v,
                                            BranchType /*context*/) {
    if (max_abs10(flatten(v)) == 0.0) return StabilizerLabel::FULL_O2_TILDE;

    const bool rot_generic = fixes(1.0, false, v);
    const bool rot_pi = fixes(M_PI, false, v);

    // A flipped rotation acts on each weight-2 pair as a reflection whose
    // fixed axis is determined by the angle, so the only angles that can fix
    // v are those aligned with the shape or dual components, plus the
    // weight-1 candidates 0 and pi.
    std::vector<double> candidates{0.0, M_PI};
    if (v.a[1] != 0.0 || v.a[2] != 0.0) {
        const double t = -std::atan2(v.a[2], v.a[1]);
        candidates.push_back(t);
        candidates.push_back(t + M_PI);
        candidates.push_back(t + 0.5 * M_PI);
    }
    if (v.beta[1] != 0.0 || v.beta[2] != 0.0) {
        const double t = -std::atan2(v.beta[2], v.beta[1]);
        candidates.push_back(t);
        candidates.push_back(t + M_PI);
        candidates.push_back(t + 0.5 * M_PI);
    }
    bool flip_some = false;
    for (double t : candidates)
        if (fixes(t, true, v)) {
            flip_some = true;
            break;
        }

    if (rot_generic && rot_pi)
        return flip_some ? StabilizerLabel::FULL_O2_TILDE
                         : StabilizerLabel::SO2_DIAG;
    if (rot_pi)
        return flip_some ? StabilizerLabel::D2_TILDE_E3
                         : StabilizerLabel::Z2_DIAG_E3;
    // Reflection-only stabilizers would require the kernel ratio to reach 1,
    // which never happens along the family.
    return StabilizerLabel::TRIVIAL;
}

} // namespace maclaurin
