// Copyright 2026 The pauliblad Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pauliblad::cli {

// Exit codes. analyze additionally returns 0 / 10 / 11 by Markovianity class.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBadParameter = 3;
inline constexpr int kExitSingular = 4;
inline constexpr int kExitSizeLimit = 5;
inline constexpr int kExitNonMarkovianReal = 10;
inline constexpr int kExitComplexRates = 11;

/// Grid flag "a:b:step" (inclusive), "a,b,c" or a single value.
std::vector<double> parse_grid(const std::string &spec);

/// Runs one command line (without the program name). Output files go under --out.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pauliblad::cli
