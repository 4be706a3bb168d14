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
#pragma once

#include <cmath>

namespace maclaurin {

// Physical constants of the fluid model. T and R are always derived from
// (G, rho0) so the four values can never drift apart. The defaults G = 1,
// rho0 = 1/pi give pi*G*rho0 = 1, so squared frequencies come out directly
// in pi*G*rho0 units (T = 4/15, R = 8/15).
struct Units {
    double G = 1.0;
    double rho0 = 1.0 / M_PI;

    double T() const { return (4.0 * M_PI / 15.0) * rho0; }
    double R() const { return (8.0 / 15.0) * M_PI * M_PI * G * rho0 * rho0; }
    double pi_G_rho0() const { return M_PI * G * rho0; }
};

} // namespace maclaurin
