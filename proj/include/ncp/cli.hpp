// Copyright 2026 The ncp Authors
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

#ifndef NCP_CLI_HPP
#define NCP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ncp::cli {

// Process exit codes. For analyze and witness, kNegative means "separable
// consistent" and kPositive "entangled detected"; for choi they mean CP and
// not CP.
inline constexpr int kNegative = 0;
inline constexpr int kPositive = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (without the program name). Input files named "-"
/// are read from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace ncp::cli

#endif  // NCP_CLI_HPP
