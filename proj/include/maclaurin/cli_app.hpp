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
#ifndef MACLAURIN_CLI_APP_HPP
#define MACLAURIN_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace maclaurin {

/// Command-line front end. args excludes the program name. Writes results
/// to out (or the file named by --out) and diagnostics to err.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
/// Identical invocations produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace maclaurin

#endif // MACLAURIN_CLI_APP_HPP
