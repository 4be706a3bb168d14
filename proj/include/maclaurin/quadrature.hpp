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

#include <functional>
#include <stdexcept>
#include <string>

namespace maclaurin {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Thrown when the subdivision budget runs out before the requested relative
// tolerance is met; carries the best estimate achieved so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double achieved_error)
        : std::runtime_error(what), value(value), achieved_error(achieved_error) {}
    double value;
    double achieved_error;
};

// Adaptive Gauss-Kronrod (7,15) on a finite interval. Splits the segment
// with the largest error estimate until the summed estimate drops below
// rel_tol * |integral|.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, int max_intervals = 4000);

// Integral over [0, inf) via the substitution s = (t/(1-t))^2 mapping the
// domain to [0,1). The squared map absorbs the square root of the s^(-3/2)
// decay, so integrands of that class become analytic up to the endpoint
// (the plain t/(1-t) map leaves a (1-t)^(-1/2) singularity that stalls
// bisection near 1e-11 relative). Kronrod nodes are interior, so the
// endpoint itself is never evaluated.
QuadResult integrate_zero_to_inf(const std::function<double(double)>& f,
                                 double rel_tol, int max_intervals = 4000);

} // namespace maclaurin
