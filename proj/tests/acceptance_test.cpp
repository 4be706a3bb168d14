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
//
// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
// with its measured value and wall time; the process exits nonzero if any
// criterion fails. All tolerances are pinned here, in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "maclaurin/bifurcation.hpp"
#include "maclaurin/cli_app.hpp"
#include "maclaurin/family.hpp"
#include "maclaurin/normal_form.hpp"
#include "maclaurin/oracles.hpp"
#include "maclaurin/potential.hpp"

using namespace maclaurin;

namespace {

int failures = 0;

// runs one criterion, enforcing an optional wall-time budget
void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body,
               double budget_ms = 0.0) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (budget_ms > 0.0 && ms >= budget_ms) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("[%s] %02d %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL",
                number, label.c_str(), ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

double kernel_residual(double e, BranchType branch, double eta,
                       const Units& u) {
    const Mat10 h = hessian_N(e, eta, u);
    double worst = 0.0;
    for (const NormalVector& v : kernel_basis_at(e, branch, eta, u)) {
        const std::array<double, 10> x = flatten(v);
        double num2 = 0.0, den2 = 0.0;
        for (int i = 0; i < 10; ++i) {
            double s = 0.0;
            for (int j = 0; j < 10; ++j) s += h[10 * i + j] * x[j];
            num2 += s * s;
            den2 += x[i] * x[i];
        }
        worst = std::max(worst, std::sqrt(num2 / den2));
    }
    return worst;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

struct CliCapture {
    int code;
    std::string out;
};

CliCapture cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

} // namespace

int main() {
    const Units u;

    criterion(
        1, "critical eccentricity equals 0.952887 within 5e-6",
        [&](std::string& detail) {
            const double ec = critical_eccentricity(u);
            detail = "e_crit = " + num(ec);
            return std::fabs(ec - 0.952887) <= 5e-6;
        },
        1000.0);

    criterion(
        2, "rigid/internal pair point equals 0.8126700 within 5e-7",
        [&](std::string& detail) {
            const double e0 = jacobi_dedekind_point(u);
            detail = "root = " + num(e0);
            return std::fabs(e0 - 0.8126700) <= 5e-7;
        },
        1000.0);

    criterion(3,
              "small-e frequency remainder over e^4 stabilizes within 10%",
              [&](std::string& detail) {
                  double ratio[3];
                  const double es[3] = {1e-2, 5e-3, 1e-3};
                  for (int i = 0; i < 3; ++i) {
                      const double e2 = es[i] * es[i];
                      ratio[i] =
                          std::fabs(omega_squared(es[i], u) / u.pi_G_rho0() -
                                    (8.0 / 15.0) * e2) /
                          (e2 * e2);
                  }
                  double spread = 0.0;
                  for (int i = 1; i < 3; ++i)
                      spread = std::max(
                          spread, std::fabs(ratio[i] / ratio[0] - 1.0));
                  detail = "spread = " + num(spread);
                  return spread <= 0.10;
              });

    criterion(4,
              "potential: quadrature matches closed form to 1e-8; "
              "sphere value is -2R to 1e-10",
              [&](std::string& detail) {
                  double worst = 0.0;
                  for (int i = 1; i <= 19; ++i) {
                      const double e = 0.05 * i;
                      const double closed = spheroid_potential(e, u);
                      const double quad = potential(family_point(e, u).F, u);
                      worst = std::max(worst, std::fabs(quad - closed) /
                                                  std::fabs(closed));
                  }
                  const double sphere_rel =
                      std::fabs(potential(Mat3::identity(), u) +
                                2.0 * u.R()) /
                      (2.0 * u.R());
                  detail = "grid rel = " + num(worst) +
                           ", sphere rel = " + num(sphere_rel);
                  return worst <= 1e-8 && sphere_rel <= 1e-10;
              });

    criterion(
        5,
        "equilibrium residual <= 1e-6 with the velocity split; halved "
        "generator fails",
        [&](std::string& detail) {
            double worst = 0.0;
            for (double e : default_grid())
                worst = std::max(worst, equilibrium_residual(e, u));
            const double halved = equilibrium_residual(0.5, u, 1e-5, 0.5);
            detail =
                "residual = " + num(worst) + ", halved = " + num(halved);
            return worst <= 1e-6 && halved > 1e-3;
        });

    criterion(6, "shape-basis Gram matrix matches its diagonal block to 1e-12",
              [&](std::string& detail) {
                  double worst = 0.0;
                  for (int i = 1; i <= 99; ++i)
                      worst = std::max(
                          worst, check_gram_R1(0.01 * i, u).max_error);
                  detail = "max dev = " + num(worst);
                  return worst <= 1e-12;
              });

    criterion(
        7,
        "closed-form and numeric spectra agree to 1e-10 across the grid",
        [&](std::string& detail) {
            double worst = 0.0;
            std::vector<double> es;
            for (int i = 1; i <= 19; ++i) es.push_back(0.05 * i);
            es.push_back(0.97);
            for (double e : es) {
                const CoefficientSet cs = coefficients(e, u);
                std::vector<double> etas{0.0, 0.3,
                                         std::sqrt(cs.eta1_sq),
                                         -std::sqrt(cs.eta1_sq)};
                if (cs.eta2_sq.has_value()) {
                    etas.push_back(std::sqrt(*cs.eta2_sq));
                    etas.push_back(-std::sqrt(*cs.eta2_sq));
                }
                for (double eta : etas) {
                    const SpectrumReport r = spectrum(e, eta, u);
                    std::vector<double> closed{
                        r.sigma1_plus,  r.sigma1_plus,  r.sigma1_minus,
                        r.sigma1_minus, r.sigma2_a,     r.sigma2_b,
                        r.sigma2_plus,  r.sigma2_plus,  r.sigma2_minus,
                        r.sigma2_minus};
                    std::sort(closed.begin(), closed.end());
                    for (int k = 0; k < 10; ++k)
                        worst = std::max(
                            worst, std::fabs(closed[k] -
                                             r.numeric_eigenvalues[k]));
                }
            }
            detail = "max gap = " + num(worst);
            return worst <= 1e-10;
        });

    criterion(
        8,
        "kernel vectors of all three branches annihilate the Hessian to 1e-8",
        [&](std::string& detail) {
            double worst = 0.0;
            for (int i = 1; i <= 19; ++i) {
                const double e = 0.05 * i;
                const CoefficientSet cs = coefficients(e, u);
                const double eta1 = std::sqrt(cs.eta1_sq);
                worst = std::max(
                    worst, kernel_residual(e, BranchType::TypeI, eta1, u));
                worst = std::max(
                    worst, kernel_residual(e, BranchType::TypeI, -eta1, u));
                if (cs.eta2_sq.has_value()) {
                    const double eta2 = std::sqrt(*cs.eta2_sq);
                    worst = std::max(worst, kernel_residual(
                                                e, BranchType::TypeS, eta2, u));
                    worst = std::max(
                        worst,
                        kernel_residual(e, BranchType::TypeS, -eta2, u));
                }
            }
            const double ec = critical_eccentricity(u);
            worst = std::max(
                worst, kernel_residual(ec, BranchType::AdjointS, 0.0, u));
            detail = "max |Hv|/|v| = " + num(worst);
            return worst <= 1e-8;
        });

    criterion(
        9,
        "non-crossing eigenvalues positive; lowest shape eigenvalue flips "
        "sign only past the critical point",
        [&](std::string& detail) {
            const double ec = critical_eccentricity(u);
            for (int i = 1; i <= 99; ++i) {
                const double e = 0.01 * i;
                const CoefficientSet cs = coefficients(e, u);
                std::vector<double> etas{0.0, 0.4,
                                         std::sqrt(cs.eta1_sq)};
                if (cs.eta2_sq.has_value())
                    etas.push_back(std::sqrt(*cs.eta2_sq));
                for (double eta : etas) {
                    const SpectrumReport r = spectrum(e, eta, u);
                    if (!(r.sigma1_plus > 0.0 && r.sigma2_a > 0.0 &&
                          r.sigma2_b > 0.0 && r.sigma2_plus > 0.0)) {
                        detail = "positivity lost at e = " + num(e);
                        return false;
                    }
                    if (eta == 0.0 &&
                        (r.sigma2_minus < 0.0) != (e > ec)) {
                        detail = "sign flip misplaced at e = " + num(e);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(10,
              "the two spin loci never collide below the critical point",
              [&](std::string& detail) {
                  double min_gap = 1e300;
                  for (int i = 1; i <= 95; ++i) {
                      const double e = 0.01 * i;
                      const CoefficientSet cs = coefficients(e, u);
                      if (!cs.eta2_sq.has_value()) continue;
                      min_gap = std::min(
                          min_gap, std::fabs(cs.eta1_sq - *cs.eta2_sq));
                  }
                  detail = "min |eta1^2 - eta2^2| = " + num(min_gap);
                  return min_gap > 0.0;
              });

    criterion(11, "the rotational kernel ratio D never reaches 1",
              [&](std::string& detail) {
                  double min_gap = 1e300;
                  for (int i = 1; i <= 99; ++i)
                      min_gap = std::min(
                          min_gap,
                          std::fabs(kernel_ratio_D(0.01 * i, u) - 1.0));
                  detail = "min |D - 1| = " + num(min_gap);
                  return min_gap > 0.0;
              });

    criterion(
        12,
        "stabilizers computed from the representations match the branch "
        "predictions",
        [&](std::string& detail) {
            for (double e : {0.2, 0.5, 0.9}) {
                for (const NormalVector& v :
                     kernel_basis(e, BranchType::TypeI, u))
                    if (stabilizer_of_normal_vector(v, BranchType::TypeI) !=
                        StabilizerLabel::TRIVIAL) {
                        detail = "rotational branch at e = " + num(e);
                        return false;
                    }
                for (const NormalVector& v :
                     kernel_basis(e, BranchType::TypeS, u))
                    if (stabilizer_of_normal_vector(v, BranchType::TypeS) !=
                        StabilizerLabel::Z2_DIAG_E3) {
                        detail = "shape branch at e = " + num(e);
                        return false;
                    }
            }
            const double ec = critical_eccentricity(u);
            for (const NormalVector& v :
                 kernel_basis(ec, BranchType::AdjointS, u))
                if (stabilizer_of_normal_vector(v, BranchType::AdjointS) !=
                    StabilizerLabel::D2_TILDE_E3) {
                    detail = "adjoint branch";
                    return false;
                }
            return true;
        });

    criterion(
        13,
        "figure data: spin-up column strictly increasing and divergent; "
        "shape locus terminates; dimensionless outputs unit-invariant",
        [&](std::string& detail) {
            const CliCapture mu = cli({"figure", "--which", "mu"});
            if (mu.code != 0) {
                detail = "mu emitter failed";
                return false;
            }
            double prev = -1.0, at_099 = 0.0, last = 0.0;
            for (const auto& line : lines_of(mu.out)) {
                if (line.empty() || line[0] == '#' || line[0] == 'e')
                    continue;
                const double e = std::stod(line);
                const double v =
                    std::stod(line.substr(line.find(',') + 1));
                if (v <= prev) {
                    detail = "not increasing at e = " + num(e);
                    return false;
                }
                prev = v;
                if (std::fabs(e - 0.99) < 1e-12) at_099 = v;
                last = v;
            }
            if (!(last > 1.5 * at_099)) {
                detail = "tail fails to keep growing past the grid";
                return false;
            }

            const CliCapture eta = cli({"figure", "--which", "eta"});
            for (const auto& line : lines_of(eta.out)) {
                if (line.empty() || line[0] == '#' || line[0] == 'e')
                    continue;
                const double e = std::stod(line);
                const bool empty_cell = line.back() == ',';
                if (empty_cell != (e > 0.952887)) {
                    detail = "shape locus column wrong at e = " + num(e);
                    return false;
                }
            }

            const CliCapture scan1 = cli({"bifurcations", "--scan"});
            const CliCapture scan2 =
                cli({"--G", "7.5", "--rho0", "2", "bifurcations", "--scan"});
            const auto l1 = lines_of(scan1.out);
            const auto l2 = lines_of(scan2.out);
            if (l1[1] != l2[1] || l1[2] != l2[2]) {
                detail = "named constants moved under unit change";
                return false;
            }
            detail = "mu grows to " + num(last);
            return true;
        });

    criterion(
        14, "full verification command exits 0",
        [&](std::string& detail) {
            const CliCapture v = cli({"verify"});
            detail = "exit = " + std::to_string(v.code);
            if (v.code != 0) return false;
            const nlohmann::json reports = nlohmann::json::parse(v.out);
            int passed = 0;
            for (const auto& r : reports)
                if (r["passed"] == true) ++passed;
            detail += ", " + std::to_string(passed) + "/" +
                      std::to_string(reports.size()) + " oracles passed";
            return passed == static_cast<int>(reports.size());
        },
        60000.0);

    std::printf("%d/14 criteria passed\n", 14 - failures);
    return failures == 0 ? 0 : 1;
}
