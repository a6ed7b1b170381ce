// Copyright 2026 The prefent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREFENT_CLI_HPP_
#define PREFENT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace prefent {

/// Command-line entry point, stream-parameterized so tests can drive it
/// in-process. Exit codes: 0 success / expected verdict, 1 property
/// failure or unexpected campaign outcome, 2 usage or input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace prefent

#endif  // PREFENT_CLI_HPP_
