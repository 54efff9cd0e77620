// Copyright 2026 The stabaut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABAUT_CLI_H_
#define STABAUT_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace stabaut {

/// Command-line driver. `args` excludes the program name. Reports go to
/// `out`, diagnostics and search progress to `err`. Returns the exit status.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stabaut

#endif  // STABAUT_CLI_H_
