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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pauliblad/pauli.hpp"

namespace pauliblad {

using complex = std::complex<double>;

enum class SpectrumKind { Probabilities, Fidelities, LogFidelities, Rates };

/// A dense length-4^n complex vector indexed by PauliOp::to_index().
class SpectrumVector {
  public:
    SpectrumVector(unsigned num_qubits, SpectrumKind kind);
    SpectrumVector(unsigned num_qubits, SpectrumKind kind, std::vector<complex> values);
    /// Infers n from the length; throws DimensionError unless it is a power of 4.
    static SpectrumVector from_values(std::vector<complex> values, SpectrumKind kind);
    static SpectrumVector from_real(std::span<const double> values, SpectrumKind kind);

    unsigned num_qubits() const {
        return n_;
    }
    SpectrumKind kind() const {
        return kind_;
    }
    std::size_t size() const {
        return values_.size();
    }
    std::span<const complex> values() const {
        return values_;
    }
    std::span<complex> values() {
        return values_;
    }
    complex operator[](std::size_t i) const {
        return values_[i];
    }
    complex &operator[](std::size_t i) {
        return values_[i];
    }
    complex at(const PauliOp &p) const;

    SpectrumVector relabeled(SpectrumKind kind) const;
    std::vector<double> real_parts() const;

  private:
    unsigned n_;
    SpectrumKind kind_;
    std::vector<complex> values_;
};

/// f = H v with H_jk = +1 if P_j, P_k commute and -1 otherwise. O(n 4^n).
SpectrumVector walsh_hadamard(const SpectrumVector &v, SpectrumKind result_kind);
/// (1/4^n) H v.
SpectrumVector inverse_walsh_hadamard(const SpectrumVector &v, SpectrumKind result_kind);

/// In-place unnormalized transform on a raw buffer of length 4^n.
void walsh_hadamard_in_place(std::span<complex> data);
void walsh_hadamard_in_place(std::span<double> data);

}  // namespace pauliblad
