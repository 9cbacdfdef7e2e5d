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

#include "pauliblad/spectrum.hpp"

#include <string>

#include "pauliblad/errors.hpp"

namespace pauliblad {

namespace {

unsigned qubits_for_length(std::size_t len) {
    unsigned n = 0;
    std::size_t d = 1;
    while (d < len && n <= PauliOp::kMaxIndexedQubits) {
        d <<= 2;
        n++;
    }
    if (d != len || len == 0) {
        throw DimensionError("spectrum length " + std::to_string(len) + " is not a power of 4");
    }
    return n;
}

// Kernel rows/columns ordered I, X, Y, Z.
template <typename T>
void butterfly(std::span<T> data) {
    std::size_t len = data.size();
    qubits_for_length(len);
    for (std::size_t stride = 1; stride < len; stride *= 4) {
        for (std::size_t block = 0; block < len; block += 4 * stride) {
            for (std::size_t i = block; i < block + stride; i++) {
                T a = data[i];
                T b = data[i + stride];
                T c = data[i + 2 * stride];
                T d = data[i + 3 * stride];
                T apb = a + b;
                T amb = a - b;
                T cpd = c + d;
                T cmd = c - d;
                data[i] = apb + cpd;
                data[i + stride] = apb - cpd;
                data[i + 2 * stride] = amb + cmd;
                data[i + 3 * stride] = amb - cmd;
            }
        }
    }
}

}  // namespace

SpectrumVector::SpectrumVector(unsigned num_qubits, SpectrumKind kind)
    : n_(num_qubits), kind_(kind), values_(spectrum_length(num_qubits)) {
}

SpectrumVector::SpectrumVector(unsigned num_qubits, SpectrumKind kind, std::vector<complex> values)
    : n_(num_qubits), kind_(kind), values_(std::move(values)) {
    if (values_.size() != spectrum_length(num_qubits)) {
        throw DimensionError("spectrum for " + std::to_string(num_qubits) + " qubits needs length " +
                             std::to_string(spectrum_length(num_qubits)) + ", got " +
                             std::to_string(values_.size()));
    }
}

SpectrumVector SpectrumVector::from_values(std::vector<complex> values, SpectrumKind kind) {
    unsigned n = qubits_for_length(values.size());
    return SpectrumVector(n, kind, std::move(values));
}

SpectrumVector SpectrumVector::from_real(std::span<const double> values, SpectrumKind kind) {
    return from_values(std::vector<complex>(values.begin(), values.end()), kind);
}

complex SpectrumVector::at(const PauliOp &p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("Pauli " + p.label() + " does not match spectrum qubit count");
    }
    return values_[p.to_index()];
}

SpectrumVector SpectrumVector::relabeled(SpectrumKind kind) const {
    SpectrumVector out = *this;
    out.kind_ = kind;
    return out;
}

std::vector<double> SpectrumVector::real_parts() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); i++) {
        out[i] = values_[i].real();
    }
    return out;
}

void walsh_hadamard_in_place(std::span<complex> data) {
    butterfly(data);
}

void walsh_hadamard_in_place(std::span<double> data) {
    butterfly(data);
}

SpectrumVector walsh_hadamard(const SpectrumVector &v, SpectrumKind result_kind) {
    SpectrumVector out = v.relabeled(result_kind);
    butterfly(out.values());
    return out;
}

SpectrumVector inverse_walsh_hadamard(const SpectrumVector &v, SpectrumKind result_kind) {
    SpectrumVector out = walsh_hadamard(v, result_kind);
    double scale = 1.0 / static_cast<double>(out.size());
    for (auto &x : out.values()) {
        x *= scale;
    }
    return out;
}

}  // namespace pauliblad
