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

namespace maclaurin {

// Brent's method on a sign-changing bracket [a, b]. Throws
// std::invalid_argument if f(a) and f(b) have the same sign.
double brent(const std::function<double(double)>& f, double a, double b,
             double tol = 1e-12, int max_iter = 200);

// Scans [a, b] in n steps for the first sign change and refines with brent.
// Throws std::runtime_error if no sign change is found.
double find_root_scan(const std::function<double(double)>& f, double a, double b,
                      int n, double tol = 1e-12);

} // namespace maclaurin
