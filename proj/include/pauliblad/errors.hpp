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

#include <stdexcept>
#include <string>

namespace pauliblad {

/// Mismatched qubit counts or vector lengths that are not 4^n.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A parameter outside its documented domain.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Pauli fidelity too close to zero for its logarithm to be taken.
struct SingularFidelityError : std::domain_error {
    SingularFidelityError(const std::string &msg, std::string pauli_label)
        : std::domain_error(msg), pauli(std::move(pauli_label)) {
    }
    std::string pauli;
};

/// Problem sizes beyond what an exponential-cost routine accepts.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

/// Malformed or unsupported serialized input.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pauliblad
