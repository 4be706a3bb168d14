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
#include "maclaurin/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <random>

#include "maclaurin/bifurcation.hpp"
#include "maclaurin/family.hpp"
#include "maclaurin/normal_form.hpp"
#include "maclaurin/potential.hpp"
#include "maclaurin/rootfind.hpp"

namespace maclaurin {

namespace {

OracleReport finish(std::string name, double max_error, double tolerance,
                    int grid_size) {
    OracleReport r;
    r.name = std::move(name);
    r.max_error = max_error;
    r.tolerance = tolerance;
    r.passed = max_error <= tolerance;
    r.grid_size = grid_size;
    return r;
}

OracleReport vacuous(std::string name, double tolerance) {
    std::cerr << "warning: oracle '" << name
              << "' evaluated on an empty grid\n";
    return finish(std::move(name), 0.0, tolerance, 0);
}

double annihilation_norm(double e, double eta, BranchType branch,
                         const Units& u) {
    const Mat10 h = hessian_N(e, eta, u);
    double worst = 0.0;
    for (const NormalVector& v : kernel_basis_at(e, branch, eta, u)) {
        const std::array<double, 10> x = flatten(v);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < 10; ++i) {
            double s = 0.0;
            for (int j = 0; j < 10; ++j) s += h[10 * i + j] * x[j];
            num += s * s;
            den += x[i] * x[i];
        }
        worst = std::max(worst, std::sqrt(num / den));
    }
    return worst;
}

// largest gap between the sorted closed-form eigenvalue multiset and the
// numeric eigensolve of the assembled matrix
double multiset_gap(double e, double eta, const Units& u) {
    const SpectrumReport r = spectrum(e, eta, u);
    std::array<double, 10> closed{
        r.sigma1_plus, r.sigma1_plus, r.sigma1_minus, r.sigma1_minus,
        r.sigma2_a,    r.sigma2_b,    r.sigma2_plus,  r.sigma2_plus,
        r.sigma2_minus, r.sigma2_minus};
    std::sort(closed.begin(), closed.end());
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        worst = std::max(worst,
                         std::fabs(closed[i] - r.numeric_eigenvalues[i]));
    return worst;
}

std::vector<double> spin_samples(const CoefficientSet& cs) {
    std::vector<double> etas{0.0, 0.3};
    const double eta1 = std::sqrt(cs.eta1_sq);
    etas.push_back(eta1);
    etas.push_back(-eta1);
    if (cs.eta2_sq.has_value()) {
        const double eta2 = std::sqrt(*cs.eta2_sq);
        etas.push_back(eta2);
        etas.push_back(-eta2);
    }
    return etas;
}

OracleReport sweep_spectrum_multiset(const Units& u,
                                     std::vector<double> grid) {
    if (grid.empty()) return vacuous("spectrum_multiset", 1e-10);
    grid.push_back(0.97);
    double worst = 0.0;
    int count = 0;
    for (double e : grid)
        for (double eta : spin_samples(coefficients(e, u))) {
            worst = std::max(worst, multiset_gap(e, eta, u));
            ++count;
        }
    return finish("spectrum_multiset", worst, 1e-10, count);
}

OracleReport sweep_kernel_annihilation(const Units& u,
                                       std::vector<double> grid) {
    if (grid.empty()) return vacuous("kernel_annihilation", 1e-8);
    grid.push_back(0.97);
    double worst = 0.0;
    int count = 0;
    for (double e : grid) {
        const CoefficientSet cs = coefficients(e, u);
        const double eta1 = std::sqrt(cs.eta1_sq);
        for (double eta : {-eta1, eta1}) {
            worst = std::max(worst,
                             annihilation_norm(e, eta, BranchType::TypeI, u));
            ++count;
        }
        if (cs.eta2_sq.has_value()) {
            const double eta2 = std::sqrt(*cs.eta2_sq);
            for (double eta : {-eta2, eta2}) {
                worst = std::max(
                    worst, annihilation_norm(e, eta, BranchType::TypeS, u));
                ++count;
            }
        }
    }
    const double ec = critical_eccentricity(u);
    worst = std::max(worst,
                     annihilation_norm(ec, 0.0, BranchType::AdjointS, u));
    ++count;
    return finish("kernel_annihilation", worst, 1e-8, count);
}

// positivity of the non-crossing eigenvalues everywhere, and the sign
// flip of the lowest shape eigenvalue at zero spin across the critical
// point; violations accumulate as their magnitude
OracleReport sweep_eigenvalue_positivity(const Units& u,
                                         std::vector<double> grid) {
    if (grid.empty()) return vacuous("eigenvalue_positivity", 0.0);
    grid.insert(grid.end(), {0.97, 0.99});
    const double ec = critical_eccentricity(u);
    double violation = 0.0;
    int count = 0;
    for (double e : grid)
        for (double eta : spin_samples(coefficients(e, u))) {
            const SpectrumReport r = spectrum(e, eta, u);
            for (double must_be_positive :
                 {r.sigma1_plus, r.sigma2_a, r.sigma2_b, r.sigma2_plus})
                violation = std::max(violation, -must_be_positive);
            if (eta == 0.0) {
                const bool unstable_here = r.sigma2_minus < 0.0;
                if (unstable_here != (e > ec))
                    violation =
                        std::max(violation, std::fabs(r.sigma2_minus));
            }
            ++count;
        }
    return finish("eigenvalue_positivity", violation, 0.0, count);
}

OracleReport sweep_gram(const Units& u, const std::vector<double>& grid) {
    if (grid.empty()) return vacuous("gram_R1", 1e-12);
    double worst = 0.0;
    for (double e : grid)
        worst = std::max(worst, check_gram_R1(e, u).max_error);
    return finish("gram_R1", worst, 1e-12,
                  static_cast<int>(grid.size()));
}

OracleReport check_jacobi_dedekind(const Units& u) {
    const double root = jacobi_dedekind_point(u);
    double err = std::fabs(root - 0.8126700);
    if (!(root > 0.0 && root < critical_eccentricity(u))) err = 1.0;
    return finish("jacobi_dedekind_root", err, 5e-7, 1);
}

// the quadratic form of the assembled momentum Hessian must reproduce the
// momentum function on random vectors
OracleReport check_momentum_quadratic_form(const Units& u) {
    std::mt19937 rng(193707721u);
    std::normal_distribution<double> n(0.0, 1.0);
    double worst = 0.0;
    int count = 0;
    for (double e : {0.3, 0.5, 0.9})
        for (double eta : {1.0, -0.6}) {
            const Mat10 m = momentum_hessian(e, eta, u);
            for (int k = 0; k < 10; ++k) {
                NormalVector v;
                for (auto& c : v.lambda) c = n(rng);
                for (auto& c : v.a) c = n(rng);
                for (auto& c : v.beta) c = n(rng);
                const std::array<double, 10> x = flatten(v);
                double quad = 0.0;
                for (int i = 0; i < 10; ++i) {
                    double s = 0.0;
                    for (int j = 0; j < 10; ++j) s += m[10 * i + j] * x[j];
                    quad += x[i] * s;
                }
                quad *= 0.5;
                const double ref = momentum_JN(eta, v, e, u);
                worst = std::max(worst, std::fabs(quad - ref) /
                                            std::max(1.0, std::fabs(ref)));
                ++count;
            }
        }
    return finish("momentum_quadratic_form", worst, 1e-12, count);
}

} // namespace

void to_json(nlohmann::json& j, const OracleReport& r) {
    j = nlohmann::json{{"name", r.name},
                       {"max_error", r.max_error},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"grid_size", r.grid_size}};
}

std::vector<double> default_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
    return grid;
}

OracleReport check_gram_R1(double e, const Units& u) {
    const double T = u.T();
    const double ref[3] = {2.0 * T * (3.0 - 2.0 * e * e), 2.0 * T, 2.0 * T};
    const Vec3 basis[3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0},
                           {0.0, 0.0, 1.0}};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double g = T * trace(transpose(embed_S(basis[i], e)) *
                                       embed_S(basis[j], e));
            const double expected = (i == j) ? ref[i] : 0.0;
            worst = std::max(worst, std::fabs(g - expected));
        }
    return finish("gram_R1", worst, 1e-12, 1);
}

OracleReport check_quadrature_vs_closed(const std::vector<double>& grid,
                                        const Units& u, double quad_tol) {
    if (grid.empty()) return vacuous("quadrature_vs_closed", 1e-8);
    double worst = 0.0;
    bool past_flat_end = false;
    for (double e : grid) {
        const double closed = spheroid_potential(e, u);
        const double quad = potential(family_point(e, u).F, u, quad_tol);
        worst = std::max(worst, std::fabs(quad - closed) / std::fabs(closed));
        past_flat_end = past_flat_end || e > 0.98;
    }
    return finish("quadrature_vs_closed", worst,
                  past_flat_end ? 1e-7 : 1e-8,
                  static_cast<int>(grid.size()));
}

OracleReport check_small_e_series(const Units& u) {
    const double es[3] = {1e-2, 5e-3, 1e-3};
    double ratio[3];
    for (int i = 0; i < 3; ++i) {
        const double e2 = es[i] * es[i];
        ratio[i] = std::fabs(omega_squared(es[i], u) / u.pi_G_rho0() -
                             (8.0 / 15.0) * e2) /
                   (e2 * e2);
    }
    double spread = 0.0;
    for (int i = 1; i < 3; ++i)
        spread = std::max(spread, std::fabs(ratio[i] / ratio[0] - 1.0));
    return finish("small_e_series", spread, 0.10, 3);
}

OracleReport check_equilibrium_grid(const std::vector<double>& grid,
                                    const Units& u) {
    if (grid.empty()) return vacuous("equilibrium_grid", 1e-6);
    double worst = 0.0;
    for (double e : grid)
        worst = std::max(worst, equilibrium_residual(e, u));
    return finish("equilibrium_grid", worst, 1e-6,
                  static_cast<int>(grid.size()));
}

OracleReport check_velocity_convention(const Units& u) {
    const double correct = equilibrium_residual(0.5, u);
    const double halved = equilibrium_residual(0.5, u, 1e-5, 0.5);
    return finish("velocity_convention_gap", correct / halved, 1e-3, 1);
}

OracleReport check_critical_root(
    const Units& u, const std::function<double(double, const Units&)>& s2) {
    std::function<double(double, const Units&)> s2_fn = s2;
    if (!s2_fn)
        s2_fn = [](double e, const Units& uu) {
            return coefficients(e, uu).S2;
        };
    double err;
    try {
        const double root = brent(
            [&](double e) { return s2_fn(e, u); }, 0.9, 0.99, 1e-12);
        const bool structure =
            s2_fn(root - 1e-4, u) > 0.0 && s2_fn(root + 1e-4, u) < 0.0;
        err = structure ? std::fabs(root - 0.952887) : 1.0;
    } catch (const std::exception&) {
        err = 1.0; // no bracket: the sign structure is already wrong
    }
    return finish("critical_root_sign_structure", err, 5e-6, 2);
}

std::vector<OracleReport> run_all(const Units& u) {
    return run_all(u, default_grid());
}

std::vector<OracleReport> run_all(const Units& u,
                                  const std::vector<double>& grid,
                                  double quad_tol) {
    std::vector<OracleReport> reports;
    reports.push_back(sweep_gram(u, grid));
    reports.push_back(check_quadrature_vs_closed(grid, u, quad_tol));
    reports.push_back(check_small_e_series(u));
    reports.push_back(check_equilibrium_grid(grid, u));
    reports.push_back(check_velocity_convention(u));
    reports.push_back(check_critical_root(u));
    reports.push_back(check_jacobi_dedekind(u));
    reports.push_back(sweep_spectrum_multiset(u, grid));
    reports.push_back(sweep_kernel_annihilation(u, grid));
    reports.push_back(sweep_eigenvalue_positivity(u, grid));
    reports.push_back(check_momentum_quadratic_form(u));
    std::sort(reports.begin(), reports.end(),
              [](const OracleReport& a, const OracleReport& b) {
                  return a.name < b.name;
              });
    return reports;
}

} // namespace maclaurin
