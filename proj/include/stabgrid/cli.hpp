// Copyright 2026 The stabgrid Authors
//
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
// limitations under the License.

#ifndef STABGRID_CLI_HPP
#define STABGRID_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stabgrid {

/// Runs the stabgrid command line. Exit codes: 0 success, 2 usage error,
/// 1 domain error. All numeric output is deterministic given the flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabgrid

#endif
