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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "maclaurin/cli_app.hpp"
#include "maclaurin/family.hpp"

using namespace maclaurin;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

} // namespace

TEST_CASE("family table: layout, precision, stability flip") {
    const CliResult r = run({"family"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 101); // units comment + header + 99 rows
    CHECK(lines[0].find("G=1 rho0=0.318309886184") != std::string::npos);
    CHECK(lines[1] ==
          "e,omega2,mu_hat,A1,A2,S1,S2,eta1_sq,eta2_sq,stable");

    int flips = 0;
    std::string prev_flag, flip_before, flip_after;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto cells = cells_of(lines[i]);
        REQUIRE(cells.size() == 10);
        if (!prev_flag.empty() && cells[9] != prev_flag) {
            ++flips;
            flip_before = cells_of(lines[i - 1])[0];
            flip_after = cells[0];
        }
        prev_flag = cells[9];
        // eta2_sq cell is empty exactly when the family is unstable
        CHECK(cells[8].empty() == (cells[9] == "0"));
    }
    CHECK(flips == 1);
    CHECK(std::stod(flip_before) < 0.952887);
    CHECK(std::stod(flip_after) > 0.952887);

    // spot value carries 12 significant digits
    bool found = false;
    for (const auto& line : lines_of(r.out))
        if (line.rfind("0.5,", 0) == 0) {
            CHECK(cells_of(line)[1] == "0.137993642342");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("family table: range handling") {
    const CliResult single =
        run({"family", "--emin", "0.98", "--emax", "0.99", "--step", "0.01"});
    REQUIRE(single.code == 0);
    CHECK(lines_of(single.out).size() == 3); // one data row

    CHECK(run({"family", "--step", "0"}).code == 2);
    CHECK(run({"family", "--step", "-0.1"}).code == 2);
    CHECK(run({"family", "--emin", "0.9", "--emax", "0.5"}).code == 2);
    CHECK(run({"family", "--emin", "0", "--emax", "0.5"}).code == 2);
    CHECK(run({"family", "--emax", "1.5"}).code == 2);
}

TEST_CASE("spectrum command") {
    const CliResult r = run({"spectrum", "--e", "0.5", "--eta", "0"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["stable"] == true);
    CHECK(j["kernel_dimension"] == 0);
    CHECK(j["sigma1_minus"].get<double>() > 0.0);
    CHECK(j["sigma2_minus"].get<double>() > 0.0);
    CHECK(j["closed_numeric_agreement"].get<double>() <= 1e-10);
    CHECK(j["numeric_eigenvalues"].size() == 10);

    const Units u;
    char eta_buf[32];
    std::snprintf(eta_buf, sizeof(eta_buf), "%.17g",
                  std::sqrt(coefficients(0.5, u).eta1_sq));
    const CliResult at_locus =
        run({"spectrum", "--e", "0.5", "--eta", eta_buf});
    REQUIRE(at_locus.code == 0);
    const nlohmann::json jl = nlohmann::json::parse(at_locus.out);
    CHECK(jl["kernel_dimension"] == 2);
    CHECK(std::fabs(jl["sigma1_minus"].get<double>()) <= 1e-9);

    const CliResult bad = run({"spectrum", "--e", "1.5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
    CHECK(run({"spectrum"}).code == 2); // --e is required
}

TEST_CASE("bifurcations command") {
    const CliResult at_half = run({"bifurcations", "--e", "0.5"});
    REQUIRE(at_half.code == 0);
    const nlohmann::json events = nlohmann::json::parse(at_half.out);
    REQUIRE(events.size() == 2);
    CHECK(events[0]["branch"] == "TypeI");
    CHECK(events[0]["stabilizer"] == "TRIVIAL");
    CHECK(events[1]["branch"] == "TypeS");
    CHECK(events[1]["stabilizer"] == "Z2_DIAG_E3");
    CHECK(events[0]["kernel"].size() == 2);
    CHECK(events[0]["eta_locus"][0].get<double>() ==
          -events[0]["eta_locus"][1].get<double>());

    const CliResult past = run({"bifurcations", "--e", "0.97"});
    REQUIRE(past.code == 0);
    CHECK(nlohmann::json::parse(past.out).size() == 1);

    const CliResult scan = run({"bifurcations", "--scan"});
    REQUIRE(scan.code == 0);
    CHECK(scan.out.find("# e_crit = 0.952886702034") != std::string::npos);
    CHECK(scan.out.find("# jacobi_dedekind = 0.812670010612") !=
          std::string::npos);
    bool found_empty_tail = false;
    for (const auto& line : lines_of(scan.out))
        if (line.rfind("0.96,", 0) == 0) {
            CHECK(cells_of(line)[2].empty());
            found_empty_tail = true;
        }
    CHECK(found_empty_tail);

    CHECK(run({"bifurcations"}).code == 2);
    CHECK(run({"bifurcations", "--e", "0.5", "--scan"}).code == 2);
    CHECK(run({"bifurcations", "--e", "0"}).code == 2);
}

TEST_CASE("figure data: monotone divergent spin-up curve") {
    const CliResult r = run({"figure", "--which", "mu"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 111); // 99 grid rows + 10 tail rows + 2 headers
    CHECK(lines[1] == "e,mu_hat");
    double prev = -1.0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const double mu = std::stod(cells_of(lines[i])[1]);
        CHECK(mu > prev);
        prev = mu;
    }
    // the tail reaches e = 1 - 1e-12 and the column keeps growing there
    CHECK(lines.back().rfind("0.999999999999,", 0) == 0);
    CHECK(prev > 5.0);
}

TEST_CASE("figure data: spin loci columns") {
    const CliResult r = run({"figure", "--which", "eta"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[1] == "e,eta1_sq,eta2_sq");
    int empty_cells = 0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto cells = cells_of(lines[i]);
        const double e = std::stod(cells[0]);
        CHECK(cells[2].empty() == (e > 0.952887));
        if (cells[2].empty()) ++empty_cells;
    }
    CHECK(empty_cells == 4); // 0.96 through 0.99

    CHECK(run({"figure", "--which", "bogus"}).code == 2);
    CHECK(run({"figure"}).code == 2);
}

TEST_CASE("verify command") {
    const CliResult r = run({"verify"});
    REQUIRE(r.code == 0);
    const nlohmann::json reports = nlohmann::json::parse(r.out);
    CHECK(reports.size() == 11);
    for (const auto& rep : reports) CHECK(rep["passed"] == true);

    const CliResult empty = run({"verify", "--grid", "0"});
    CHECK(empty.code == 0);
    CHECK(empty.err.find("empty grid") != std::string::npos);
    int vacuous = 0;
    for (const auto& rep : nlohmann::json::parse(empty.out))
        if (rep["grid_size"] == 0) ++vacuous;
    CHECK(vacuous == 6);
}

TEST_CASE("classify command") {
    CHECK(run({"classify", "1", "1.2", "2"}).out == "TypeI\n");
    CHECK(run({"classify", "3", "0.9", "0.95"}).out == "TypeII\n");
    CHECK(run({"classify", "3", "1", "0.5"}).out == "TypeIII\n");
    CHECK(run({"classify", "1", "1", "1"}).out == "Sphere-case\n");
    CHECK(run({"classify", "2", "1", "1.5", "--plane", "33"}).out ==
          "S-ellipsoid-case\n");
    CHECK(run({"classify", "1", "2"}).code == 2);
    CHECK(run({"classify", "1", "2", "3", "--plane", "14"}).code == 2);
    CHECK(run({"classify", "1", "2", "3", "--plane", "123"}).code == 2);
    CHECK(run({"classify", "-1", "2", "3"}).code == 2);
}

TEST_CASE("global flags: units scaling and invariance") {
    // quadrupling G doubles the angular velocity but leaves the
    // dimensionless structure of the family alone
    const CliResult base =
        run({"family", "--emin", "0.5", "--emax", "0.51", "--step", "0.01"});
    const CliResult scaled = run({"--G", "4", "family", "--emin", "0.5",
                                  "--emax", "0.51", "--step", "0.01"});
    REQUIRE(base.code == 0);
    REQUIRE(scaled.code == 0);
    const auto row = cells_of(lines_of(base.out)[2]);
    const auto row4 = cells_of(lines_of(scaled.out)[2]);
    CHECK(std::stod(row4[1]) ==
          doctest::Approx(4.0 * std::stod(row[1])).epsilon(1e-11));
    CHECK(std::stod(row4[2]) ==
          doctest::Approx(2.0 * std::stod(row[2])).epsilon(1e-11));
    CHECK(row4[9] == row[9]);

    // dimensionless outputs do not move under unit changes
    const CliResult scan1 = run({"bifurcations", "--scan"});
    const CliResult scan2 = run({"--G", "7.5", "--rho0", "2.0",
                                 "bifurcations", "--scan"});
    CHECK(lines_of(scan2.out)[1] == lines_of(scan1.out)[1]); // e_crit
    CHECK(lines_of(scan2.out)[2] == lines_of(scan1.out)[2]); // pair point
    CHECK(run({"--G", "3", "classify", "1", "1.2", "2"}).out == "TypeI\n");

    CHECK(run({"--G", "-1", "family"}).code == 2);
    CHECK(run({"--tol", "1", "family"}).code == 2);
}

TEST_CASE("output redirection and determinism") {
    const std::string path = "/tmp/maclaurin_cli_family.csv";
    std::remove(path.c_str());
    const CliResult direct = run({"family", "--emax", "0.2"});
    const CliResult filed = run({"--out", path, "family", "--emax", "0.2"});
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());

    const CliResult bad_path =
        run({"--out", "/nonexistent_dir/x.csv", "family"});
    CHECK(bad_path.code == 2);
    CHECK(bad_path.err.find("cannot open") != std::string::npos);

    // byte-identical reruns
    CHECK(run({"family"}).out == run({"family"}).out);
    CHECK(run({"verify"}).out == run({"verify"}).out);
    CHECK(run({"spectrum", "--e", "0.7"}).out ==
          run({"spectrum", "--e", "0.7"}).out);
}

TEST_CASE("help and missing subcommand") {
    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("family") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}
