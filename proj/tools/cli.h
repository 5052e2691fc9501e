// Copyright 2026 The FTFP Authors
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

#ifndef FTFP_TOOLS_CLI_H_
#define FTFP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ftfp {

// Parses and runs one command line. Returns the process exit code:
// 0 success, 1 input or usage error, 2 numerical failure.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftfp

#endif  // FTFP_TOOLS_CLI_H_
