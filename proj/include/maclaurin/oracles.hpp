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
#ifndef MACLAURIN_ORACLES_HPP
#define MACLAURIN_ORACLES_HPP

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "maclaurin/units.hpp"

namespace maclaurin {

// Independent cross-checks of the library against closed forms, finite
// differences, and structural invariants. Each oracle compares two
// computations that share no code path (quadrature vs series, analytic
// gradient vs finite difference, closed-form eigenvalues vs a numeric
// eigensolve), so a single bug cannot cancel out of both sides.

struct OracleReport {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false; // always max_error <= tolerance
    int grid_size = 0;
};

void to_json(nlohmann::json& j, const OracleReport& r);

/// Default eccentricity grid for grid-based oracles: 0.05 to 0.95 in
/// steps of 0.05.
std::vector<double> default_grid();

/// Gram matrix of the shape basis under the trace metric against the
/// inline reference diag(2T(3-2e^2), 2T, 2T). Tolerance 1e-12.
OracleReport check_gram_R1(double e, const Units& u);

/// Quadrature potential at the spheroid configuration against the closed
/// form. Tolerance 1e-8, relaxed to 1e-7 when the grid reaches past 0.98
/// where the integrand conditioning degrades. quad_tol is the quadrature
/// tolerance handed to the potential evaluation.
OracleReport check_quadrature_vs_closed(const std::vector<double>& grid,
                                        const Units& u,
                                        double quad_tol = 1e-10);

/// Remainder of the squared-frequency law after removing the leading
/// (8/15) e^2 term, divided by e^4, sampled at e in {1e-2, 5e-3, 1e-3}:
/// the three ratios must agree within 10%.
OracleReport check_small_e_series(const Units& u);

/// Finite-difference stationarity of the augmented potential along the
/// family. Tolerance 1e-6.
OracleReport check_equilibrium_grid(const std::vector<double>& grid,
                                    const Units& u);

/// Control run resolving the velocity-split convention: the residual with
/// the generator halved must dwarf the residual with the generator used
/// by the library. Reports the ratio correct/halved; passes when the
/// ratio is below 1e-3. A wrong factor of two in the library would make
/// both residuals comparable and fail this check.
OracleReport check_velocity_convention(const Units& u);

/// Sign structure of the shape coefficient S2 around its root: S2 must be
/// positive just below and negative just above, and the root must sit at
/// 0.952887 within 5e-6. The s2 hook exists for fault-injection tests;
/// production callers leave it empty.
OracleReport check_critical_root(
    const Units& u,
    const std::function<double(double, const Units&)>& s2 = {});

/// Runs every oracle plus the spectrum/kernel sweeps, returns the reports
/// sorted by name. Oracles given an empty grid report grid_size 0 and
/// pass vacuously with a warning on standard error.
std::vector<OracleReport> run_all(const Units& u);
std::vector<OracleReport> run_all(const Units& u,
                                  const std::vector<double>& grid,
                                  double quad_tol = 1e-10);

} // namespace maclaurin

#endif // MACLAURIN_ORACLES_HPP
