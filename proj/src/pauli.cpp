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

#include "pauliblad/pauli.hpp"

#include "pauliblad/errors.hpp"

namespace pauliblad {

namespace {

std::uint64_t qubit_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Digit order I, X, Y, Z.
constexpr char kDigitChar[4] = {'I', 'X', 'Y', 'Z'};
constexpr std::uint8_t kDigitX[4] = {0, 1, 1, 0};
constexpr std::uint8_t kDigitZ[4] = {0, 0, 1, 1};

unsigned digit_of(bool x, bool z) {
    return x ? (z ? 2u : 1u) : (z ? 3u : 0u);
}

}  // namespace

PauliOp::PauliOp(unsigned num_qubits, std::uint64_t x_bits, std::uint64_t z_bits)
    : n_(num_qubits), x_(x_bits), z_(z_bits) {
    if (num_qubits > kMaxQubits) {
        throw DimensionError("PauliOp supports at most 64 qubits, got " + std::to_string(num_qubits));
    }
    if (((x_bits | z_bits) & ~qubit_mask(num_qubits)) != 0) {
        throw DimensionError("Pauli bits set beyond qubit count " + std::to_string(num_qubits));
    }
}

PauliOp PauliOp::identity(unsigned num_qubits) {
    return PauliOp(num_qubits, 0, 0);
}

PauliOp PauliOp::from_label(std::string_view label) {
    if (label.size() > kMaxQubits) {
        throw DimensionError("Pauli label longer than 64 characters");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < label.size(); q++) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[q]) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw FormatError("invalid Pauli label character '" + std::string(1, label[q]) + "' in \"" +
                                  std::string(label) + "\"");
        }
    }
    return PauliOp(static_cast<unsigned>(label.size()), x, z);
}

PauliOp PauliOp::from_index(std::uint64_t index, unsigned num_qubits) {
    std::uint64_t d = spectrum_length(num_qubits);
    if (index >= d) {
        throw DimensionError("Pauli index " + std::to_string(index) + " out of range for " +
                             std::to_string(num_qubits) + " qubits");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (unsigned q = 0; q < num_qubits; q++) {
        unsigned c = static_cast<unsigned>(index & 3u);
        index >>= 2;
        x |= std::uint64_t{kDigitX[c]} << q;
        z |= std::uint64_t{kDigitZ[c]} << q;
    }
    return PauliOp(num_qubits, x, z);
}

PauliOp PauliOp::single(unsigned num_qubits, unsigned qubit, char c) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    switch (c) {
        case 'I':
            return PauliOp(num_qubits, 0, 0);
        case 'X':
            return PauliOp(num_qubits, bit, 0);
        case 'Y':
            return PauliOp(num_qubits, bit, bit);
        case 'Z':
            return PauliOp(num_qubits, 0, bit);
        default:
            throw FormatError("invalid Pauli character '" + std::string(1, c) + "'");
    }
}

char PauliOp::at(unsigned qubit) const {
    return kDigitChar[digit_of((x_ >> qubit) & 1u, (z_ >> qubit) & 1u)];
}

std::uint64_t PauliOp::to_index() const {
    if (n_ > kMaxIndexedQubits) {
        throw DimensionError("dense Pauli index needs at most 31 qubits");
    }
    std::uint64_t index = 0;
    for (unsigned q = n_; q-- > 0;) {
        index = (index << 2) | digit_of((x_ >> q) & 1u, (z_ >> q) & 1u);
    }
    return index;
}

std::string PauliOp::label() const {
    std::string out(n_, 'I');
    for (unsigned q = 0; q < n_; q++) {
        out[q] = at(q);
    }
    return out;
}

PauliOp PauliOp::operator*(const PauliOp &other) const {
    if (n_ != other.n_) {
        throw DimensionError("Pauli product of mismatched qubit counts");
    }
    return PauliOp(n_, x_ ^ other.x_, z_ ^ other.z_);
}

bool commutes(const PauliOp &a, const PauliOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("commutes: qubit counts " + std::to_string(a.num_qubits()) + " and " +
                             std::to_string(b.num_qubits()) + " differ");
    }
    std::uint64_t s = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
    return (std::popcount(s) & 1) == 0;
}

bool qubitwise_compatible(const PauliOp &a, const PauliOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("qubitwise_compatible: qubit counts differ");
    }
    std::uint64_t both = a.support() & b.support();
    return ((a.x_bits() ^ b.x_bits()) & both) == 0 && ((a.z_bits() ^ b.z_bits()) & both) == 0;
}

std::uint64_t spectrum_length(unsigned num_qubits) {
    if (num_qubits > PauliOp::kMaxIndexedQubits) {
        throw DimensionError("dense spectra need at most 31 qubits, got " + std::to_string(num_qubits));
    }
    return std::uint64_t{1} << (2 * num_qubits);
}

}  // namespace pauliblad
