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
#include "maclaurin/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maclaurin/bifurcation.hpp"
#include "maclaurin/family.hpp"
#include "maclaurin/normal_form.hpp"
#include "maclaurin/oracles.hpp"
#include "maclaurin/units.hpp"

namespace maclaurin {

namespace {

// All emitted numbers carry 12 significant digits.
std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Round through the 12-digit decimal representation so JSON output obeys
// the same precision contract as the CSV tables.
double round12(double x) {
    return std::strtod(fmt12(x).c_str(), nullptr);
}

nlohmann::json rounded(const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(round12(x));
    return a;
}

std::string units_header(const Units& u) {
    return "# units: G=" + fmt12(u.G) + " rho0=" + fmt12(u.rho0) +
           " (pi*G*rho0=" + fmt12(u.pi_G_rho0()) + ")\n";
}

// Half-open grid [emin, emax): the upper endpoint is excluded, which is
// what lets emax = 1 describe a grid that never reaches the singular
// sphere-to-disk limit.
std::vector<double> make_grid(double emin, double emax, double step) {
    const int n =
        static_cast<int>(std::ceil((emax - emin) / step - 1e-9));
    std::vector<double> grid;
    for (int k = 0; k < n; ++k) {
        const double e = emin + k * step;
        if (e < emax - 1e-12 && e < 1.0) grid.push_back(e);
    }
    return grid;
}

int cmd_family(double emin, double emax, double step, const Units& u,
               std::ostream& out) {
    out << units_header(u);
    out << "e,omega2,mu_hat,A1,A2,S1,S2,eta1_sq,eta2_sq,stable\n";
    for (double e : make_grid(emin, emax, step)) {
        const FamilyPoint p = family_point(e, u);
        const CoefficientSet c = coefficients(e, u);
        out << fmt12(e) << ',' << fmt12(omega_squared(e, u)) << ','
            << fmt12(p.mu_hat) << ',' << fmt12(c.A1) << ',' << fmt12(c.A2)
            << ',' << fmt12(c.S1) << ',' << fmt12(c.S2) << ','
            << fmt12(c.eta1_sq) << ',';
        if (c.eta2_sq.has_value()) out << fmt12(*c.eta2_sq);
        out << ',' << (c.S2 > 0.0 ? '1' : '0') << '\n';
    }
    return 0;
}

int cmd_spectrum(double e, double eta, const Units& u, std::ostream& out) {
    const SpectrumReport r = spectrum(e, eta, u);
    std::vector<double> closed{
        r.sigma1_plus, r.sigma1_plus, r.sigma1_minus, r.sigma1_minus,
        r.sigma2_a,    r.sigma2_b,    r.sigma2_plus,  r.sigma2_plus,
        r.sigma2_minus, r.sigma2_minus};
    std::sort(closed.begin(), closed.end());
    double agreement = 0.0;
    for (int i = 0; i < 10; ++i)
        agreement = std::max(
            agreement, std::fabs(closed[i] - r.numeric_eigenvalues[i]));

    nlohmann::json j{
        {"e", round12(r.e)},
        {"eta", round12(r.eta)},
        {"sigma1_plus", round12(r.sigma1_plus)},
        {"sigma1_minus", round12(r.sigma1_minus)},
        {"sigma2_a", round12(r.sigma2_a)},
        {"sigma2_b", round12(r.sigma2_b)},
        {"sigma2_plus", round12(r.sigma2_plus)},
        {"sigma2_minus", round12(r.sigma2_minus)},
        {"numeric_eigenvalues", rounded(r.numeric_eigenvalues)},
        {"closed_numeric_agreement", round12(agreement)},
        {"kernel_dimension", r.kernel.size()},
        {"stable", r.stable}};
    out << j.dump(2) << '\n';
    return 0;
}

nlohmann::json event_json(const BifurcationEvent& ev) {
    nlohmann::json kernel = nlohmann::json::array();
    for (const NormalVector& v : ev.kernel) {
        const std::array<double, 10> x = flatten(v);
        kernel.push_back(rounded({x.begin(), x.end()}));
    }
    return nlohmann::json{
        {"e0", round12(ev.e0)},
        {"branch", to_string(ev.branch)},
        {"eta_locus", rounded({ev.eta_locus[0], ev.eta_locus[1]})},
        {"stabilizer", to_string(ev.stabilizer)},
        {"velocity",
         {{"xi_L", rounded({ev.velocity.xi_L[0], ev.velocity.xi_L[1],
                            ev.velocity.xi_L[2]})},
          {"xi_R", rounded({ev.velocity.xi_R[0], ev.velocity.xi_R[1],
                            ev.velocity.xi_R[2]})}}},
        {"kernel", kernel}};
}

int cmd_bifurcations(bool scan, double e, const Units& u,
                     std::ostream& out) {
    if (!scan) {
        nlohmann::json events = nlohmann::json::array();
        for (const BifurcationEvent& ev : events_at(e, u))
            events.push_back(event_json(ev));
        out << events.dump(2) << '\n';
        return 0;
    }
    out << units_header(u);
    out << "# e_crit = " << fmt12(critical_eccentricity(u)) << '\n';
    out << "# jacobi_dedekind = " << fmt12(jacobi_dedekind_point(u)) << '\n';
    out << "e,eta1,eta2\n";
    for (double ee : make_grid(0.01, 1.0, 0.01)) {
        const CoefficientSet c = coefficients(ee, u);
        out << fmt12(ee) << ',' << fmt12(std::sqrt(c.eta1_sq)) << ',';
        if (c.eta2_sq.has_value()) out << fmt12(std::sqrt(*c.eta2_sq));
        out << '\n';
    }
    return 0;
}

int cmd_figure(const std::string& which, const Units& u, std::ostream& out) {
    out << units_header(u);
    if (which == "mu") {
        out << "e,mu_hat\n";
        std::vector<double> grid = make_grid(0.01, 1.0, 0.01);
        // geometric tail toward the singular end exhibits the divergence
        for (int k = 3; k <= 12; ++k)
            grid.push_back(1.0 - std::pow(10.0, -k));
        for (double e : grid)
            out << fmt12(e) << ',' << fmt12(family_point(e, u).mu_hat)
                << '\n';
    } else {
        out << "e,eta1_sq,eta2_sq\n";
        for (double e : make_grid(0.01, 1.0, 0.01)) {
            const CoefficientSet c = coefficients(e, u);
            out << fmt12(e) << ',' << fmt12(c.eta1_sq) << ',';
            if (c.eta2_sq.has_value()) out << fmt12(*c.eta2_sq);
            out << '\n';
        }
    }
    return 0;
}

int cmd_verify(int grid_points, double quad_tol, const Units& u,
               std::ostream& out) {
    std::vector<double> grid;
    if (grid_points == 1) grid.push_back(0.5);
    for (int i = 0; grid_points > 1 && i < grid_points; ++i)
        grid.push_back(0.05 + 0.90 * i / (grid_points - 1));
    const std::vector<OracleReport> reports = run_all(u, grid, quad_tol);
    nlohmann::json j = reports;
    for (auto& item : j) {
        item["max_error"] = round12(item["max_error"].get<double>());
        item["tolerance"] = round12(item["tolerance"].get<double>());
    }
    out << j.dump(2) << '\n';
    return std::all_of(reports.begin(), reports.end(),
                       [](const OracleReport& r) { return r.passed; })
               ? 0
               : 1;
}

int cmd_classify(double a1, double a2, double a3, const std::string& plane,
                 std::ostream& out) {
    if (plane.size() != 2 || plane[0] < '1' || plane[0] > '3' ||
        plane[1] < '1' || plane[1] > '3')
        throw std::invalid_argument(
            "plane must be two axis digits, e.g. 12");
    out << to_string(riemann_class(a1, a2, a3, plane[0] - '0',
                                   plane[1] - '0'))
        << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"MacLaurin spheroid family: tables, spectra, bifurcation "
                 "catalog, verification"};
    app.require_subcommand(1);

    Units u;
    double quad_tol = 1e-10;
    std::string out_path;
    app.add_option("--G", u.G, "gravitational constant")
        ->check(CLI::PositiveNumber);
    app.add_option("--rho0", u.rho0, "fluid density")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", quad_tol, "quadrature tolerance")
        ->check(CLI::Range(1e-15, 1e-4));
    app.add_option("--out", out_path, "write command output to this file");

    double emin = 0.01, emax = 1.0, step = 0.01;
    auto* family = app.add_subcommand("family", "family coefficient table");
    family->add_option("--emin", emin, "grid start (inclusive)");
    family->add_option("--emax", emax, "grid end (exclusive)");
    family->add_option("--step", step, "grid spacing");

    double spec_e = 0.5, spec_eta = 0.0;
    auto* spec = app.add_subcommand("spectrum", "stability-form spectrum");
    spec->add_option("--e", spec_e, "eccentricity")->required();
    spec->add_option("--eta", spec_eta, "internal spin parameter");

    double bif_e = 0.0;
    bool scan = false;
    auto* bif =
        app.add_subcommand("bifurcations", "bifurcation events or loci scan");
    auto* bif_e_opt = bif->add_option("--e", bif_e, "eccentricity");
    auto* scan_opt =
        bif->add_flag("--scan", scan, "emit loci curves and special points");
    bif_e_opt->excludes(scan_opt);

    std::string which;
    auto* fig = app.add_subcommand("figure", "figure data emitters");
    fig->add_option("--which", which, "mu or eta")
        ->required()
        ->check(CLI::IsMember({"mu", "eta"}));

    int grid_points = 19;
    auto* verify = app.add_subcommand("verify", "run the oracle suite");
    verify->add_option("--grid", grid_points, "grid point count")
        ->check(CLI::NonNegativeNumber);

    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    std::string plane = "12";
    auto* cls = app.add_subcommand("classify", "ellipsoid type rules");
    cls->add_option("a1", a1, "first semiaxis")->required();
    cls->add_option("a2", a2, "second semiaxis")->required();
    cls->add_option("a3", a3, "third semiaxis")->required();
    cls->add_option("--plane", plane, "velocity plane, two axis digits");

    std::vector<const char*> argv;
    argv.push_back("maclaurin");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    // library diagnostics (e.g. the empty-grid oracle warning) must reach
    // the caller's error stream, not whatever std::cerr is bound to
    struct CerrRedirect {
        std::streambuf* saved;
        explicit CerrRedirect(std::ostream& target)
            : saved(std::cerr.rdbuf(target.rdbuf())) {}
        ~CerrRedirect() { std::cerr.rdbuf(saved); }
    } redirect(err);

    std::ostringstream payload;
    int code = 0;
    try {
        if (family->parsed()) {
            if (!(emin > 0.0 && emin < emax && emax <= 1.0))
                throw std::invalid_argument(
                    "family range must satisfy 0 < emin < emax <= 1");
            if (!(step > 0.0))
                throw std::invalid_argument("step must be positive");
            code = cmd_family(emin, emax, step, u, payload);
        } else if (spec->parsed()) {
            code = cmd_spectrum(spec_e, spec_eta, u, payload);
        } else if (bif->parsed()) {
            if (scan == (bif_e_opt->count() > 0))
                throw std::invalid_argument(
                    "bifurcations needs exactly one of --e or --scan");
            code = cmd_bifurcations(scan, bif_e, u, payload);
        } else if (fig->parsed()) {
            code = cmd_figure(which, u, payload);
        } else if (verify->parsed()) {
            code = cmd_verify(grid_points, quad_tol, u, payload);
        } else if (cls->parsed()) {
            code = cmd_classify(a1, a2, a3, plane, payload);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        file << payload.str();
        if (!file.good()) {
            err << "error: failed writing '" << out_path << "'\n";
            return 2;
        }
    } else {
        out << payload.str();
    }
    return code;
}

} // namespace maclaurin
