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

#ifndef FTFP_INSTANCE_IO_H_
#define FTFP_INSTANCE_IO_H_

#include <iosfwd>
#include <string>

#include "ftfp/instance.h"

namespace ftfp {

// Line-oriented text format:
//
//   ftfp 1
//   facilities <m>
//   clients <n>
//   fcost <m reals>
//   req <n positive integers>
//   dist
//   <n lines of m reals, one line per client>
//
// Blank lines and '#' comments are ignored on input. Output is canonical:
// reals with 9 significant digits, single spaces, '\n' line endings.
Instance ParseInstance(const std::string& text);
std::string FormatInstance(const Instance& inst);

Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& inst, const std::string& path);

// "%.9g", shared by every text and CSV writer in the project.
std::string FormatReal(double value);

}  // namespace ftfp

#endif  // FTFP_INSTANCE_IO_H_
