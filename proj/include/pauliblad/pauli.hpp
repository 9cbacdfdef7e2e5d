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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pauliblad {

/// An n-qubit Pauli operator (phase-free) stored as symplectic bit masks.
///
/// Qubit q is bit q of both masks. Per qubit: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1)
/// as (x, z). Labels are written with qubit 0 as the leftmost character, and the
/// dense spectrum index is sum_q c_q 4^q with c in {I:0, X:1, Y:2, Z:3}.
class PauliOp {
  public:
    static constexpr unsigned kMaxQubits = 64;
    static constexpr unsigned kMaxIndexedQubits = 31;

    PauliOp() = default;
    PauliOp(unsigned num_qubits, std::uint64_t x_bits, std::uint64_t z_bits);

    static PauliOp identity(unsigned num_qubits);
    static PauliOp from_label(std::string_view label);
    static PauliOp from_index(std::uint64_t index, unsigned num_qubits);
    /// Single-qubit factor `c` ('I','X','Y','Z') on `qubit`, identity elsewhere.
    static PauliOp single(unsigned num_qubits, unsigned qubit, char c);

    unsigned num_qubits() const {
        return n_;
    }
    std::uint64_t x_bits() const {
        return x_;
    }
    std::uint64_t z_bits() const {
        return z_;
    }
    std::uint64_t support() const {
        return x_ | z_;
    }
    unsigned weight() const {
        return static_cast<unsigned>(std::popcount(support()));
    }
    bool is_identity() const {
        return support() == 0;
    }

    /// 'I', 'X', 'Y' or 'Z' on the given qubit.
    char at(unsigned qubit) const;

    std::uint64_t to_index() const;
    std::string label() const;

    /// Product up to phase.
    PauliOp operator*(const PauliOp &other) const;

    friend bool operator==(const PauliOp &, const PauliOp &) = default;
    friend std::strong_ordering operator<=>(const PauliOp &, const PauliOp &) = default;

  private:
    unsigned n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// True iff the two Paulis commute. Throws DimensionError on qubit-count mismatch.
bool commutes(const PauliOp &a, const PauliOp &b);

/// True iff a and b agree (or one is I) on every qubit.
bool qubitwise_compatible(const PauliOp &a, const PauliOp &b);

/// 4^n, checked against the indexable range.
std::uint64_t spectrum_length(unsigned num_qubits);

}  // namespace pauliblad
