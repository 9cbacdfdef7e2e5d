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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pauliblad/errors.hpp"
#include "pauliblad/pauli.hpp"
#include "pauliblad/rng.hpp"
#include "pauliblad/spectrum.hpp"

using namespace pauliblad;

TEST(PauliOp, LabelAndIndexRoundTrip) {
    for (std::uint64_t k = 0; k < 64; k++) {
        PauliOp p = PauliOp::from_index(k, 3);
        EXPECT_EQ(p.to_index(), k);
        EXPECT_EQ(PauliOp::from_label(p.label()), p);
    }
    PauliOp p = PauliOp::from_label("XYZI");
    EXPECT_EQ(p.at(0), 'X');
    EXPECT_EQ(p.at(1), 'Y');
    EXPECT_EQ(p.at(2), 'Z');
    EXPECT_EQ(p.at(3), 'I');
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.to_index(), 1u + 2u * 4 + 3u * 16);
}

TEST(PauliOp, SingleQubitCodes) {
    EXPECT_EQ(PauliOp::from_label("I").to_index(), 0u);
    EXPECT_EQ(PauliOp::from_label("X").to_index(), 1u);
    EXPECT_EQ(PauliOp::from_label("Y").to_index(), 2u);
    EXPECT_EQ(PauliOp::from_label("Z").to_index(), 3u);
    EXPECT_TRUE(PauliOp::identity(5).is_identity());
    EXPECT_EQ(PauliOp::single(3, 1, 'Z').label(), "IZI");
}

TEST(PauliOp, CommutationMatchesMatrices) {
    for (std::uint64_t a = 0; a < 16; a++) {
        for (std::uint64_t b = 0; b < 16; b++) {
            bool c = commutes(PauliOp::from_index(a, 2), PauliOp::from_index(b, 2));
            EXPECT_EQ(c, oracle::commutation_sign(a, b, 2) == 1) << a << " " << b;
        }
    }
}

TEST(PauliOp, ProductMatchesMatricesUpToPhase) {
    for (std::uint64_t a = 0; a < 16; a++) {
        for (std::uint64_t b = 0; b < 16; b++) {
            PauliOp prod = PauliOp::from_index(a, 2) * PauliOp::from_index(b, 2);
            oracle::Mat m = oracle::pauli(a, 2) * oracle::pauli(b, 2);
            oracle::Mat ref = oracle::pauli(prod.to_index(), 2);
            // |Tr(ref^dag m)| = 4 iff equal up to a phase.
            EXPECT_NEAR(std::abs((ref.adjoint() * m).trace()), 4.0, 1e-12);
        }
    }
}

TEST(PauliOp, QubitwiseCompatibility) {
    EXPECT_TRUE(qubitwise_compatible(PauliOp::from_label("XIZ"), PauliOp::from_label("XYI")));
    EXPECT_FALSE(qubitwise_compatible(PauliOp::from_label("XIZ"), PauliOp::from_label("ZII")));
    // commuting but not qubitwise compatible
    EXPECT_TRUE(commutes(PauliOp::from_label("XX"), PauliOp::from_label("ZZ")));
    EXPECT_FALSE(qubitwise_compatible(PauliOp::from_label("XX"), PauliOp::from_label("ZZ")));
}

TEST(PauliOp, Errors) {
    EXPECT_THROW(PauliOp::from_label("XQ"), FormatError);
    EXPECT_THROW(commutes(PauliOp::from_label("X"), PauliOp::from_label("XX")), DimensionError);
    EXPECT_THROW(PauliOp::from_index(16, 2), DimensionError);
    EXPECT_THROW(PauliOp::single(2, 2, 'X'), DimensionError);
}

TEST(PauliOp, WideOperators) {
    std::string label(64, 'I');
    label[63] = 'Y';
    label[0] = 'X';
    PauliOp p = PauliOp::from_label(label);
    EXPECT_EQ(p.weight(), 2u);
    EXPECT_EQ(p.label(), label);
    EXPECT_THROW(p.to_index(), DimensionError);
}

TEST(WalshHadamard, MatchesDenseSignMatrix) {
    CounterRng rng(7, 0);
    for (unsigned n = 1; n <= 3; n++) {
        Eigen::MatrixXd h = oracle::hadamard_matrix(n);
        std::size_t d = spectrum_length(n);
        std::vector<complex> v(d);
        for (auto &x : v) {
            x = complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
        }
        SpectrumVector s(n, SpectrumKind::Probabilities, v);
        SpectrumVector f = walsh_hadamard(s, SpectrumKind::Fidelities);
        for (std::size_t i = 0; i < d; i++) {
            complex ref = 0;
            for (std::size_t j = 0; j < d; j++) {
                ref += h(i, j) * v[j];
            }
            EXPECT_NEAR(std::abs(f[i] - ref), 0.0, 1e-12);
        }
        SpectrumVector back = inverse_walsh_hadamard(f, SpectrumKind::Probabilities);
        for (std::size_t i = 0; i < d; i++) {
            EXPECT_NEAR(std::abs(back[i] - v[i]), 0.0, 1e-13);
        }
    }
}

TEST(WalshHadamard, SquareIsDTimesIdentity) {
    std::vector<double> v(256, 0.0);
    v[37] = 1.0;
    walsh_hadamard_in_place(std::span<double>(v));
    walsh_hadamard_in_place(std::span<double>(v));
    for (std::size_t i = 0; i < v.size(); i++) {
        EXPECT_DOUBLE_EQ(v[i], i == 37 ? 256.0 : 0.0);
    }
}

TEST(Spectrum, LengthValidation) {
    EXPECT_THROW(SpectrumVector::from_values(std::vector<complex>(8), SpectrumKind::Fidelities), DimensionError);
    EXPECT_EQ(SpectrumVector::from_values(std::vector<complex>(16), SpectrumKind::Fidelities).num_qubits(), 2u);
    SpectrumVector s(2, SpectrumKind::Rates);
    EXPECT_THROW(s.at(PauliOp::from_label("X")), DimensionError);
}
