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

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pauliblad/generator.hpp"

namespace pauliblad {

/// Small dense complex matrix (operators on 1-2 qubits and their superoperators).
using DenseOperator = Eigen::MatrixXcd;

/// exp(A) by scaling and squaring with a truncated Taylor series.
DenseOperator matrix_exponential(const DenseOperator &a);

DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// Matrix of a Pauli with qubit 0 as the leftmost tensor factor.
DenseOperator pauli_matrix(const PauliOp &p);

// Superoperators act on column-stacked density matrices: vec(A rho B) = (B^T kron A) vec(rho).
DenseOperator unitary_superoperator(const DenseOperator &u);
/// -i[H, .] + sum_j D[L_j].
DenseOperator lindbladian(const DenseOperator &hamiltonian, std::span<const DenseOperator> jumps);
/// Applies a superoperator to an operator.
DenseOperator apply_superoperator(const DenseOperator &super, const DenseOperator &rho);

/// Where the extracted error channel sits relative to the ideal gate G.
enum class NoisePlacement {
    /// noisy = G o E, so E = G^-1 o noisy.
    BeforeGate,
    /// noisy = E o G, so E = noisy o G^-1.
    AfterGate,
};

/// Pauli-twirled fidelities f_P = Tr(P E(P)) / 2^n of the error channel E
/// extracted from a noisy gate superoperator and the ideal unitary.
/// Throws ParameterError if the ideal gate is not unitary or the noisy map is not trace preserving.
SpectrumVector twirl_fidelities(const DenseOperator &noisy_super, const DenseOperator &ideal_unitary, unsigned n,
                                NoisePlacement placement = NoisePlacement::BeforeGate);

struct HadamardOverrotation {
    /// p = sin^2(Omega dt) / 2, in [0, 1/2).
    double p = 0;
};

struct XPiGate {
    /// delta Omega / Omega.
    double dx = 0;
    /// epsilon / Omega.
    double dz = 0;
};

struct ZZGateT1 {
    /// kappa / (4 J).
    double dkappa = 0;
};

using GateNoiseSpec = std::variant<HadamardOverrotation, XPiGate, ZZGateT1>;

std::string variant_name(const GateNoiseSpec &spec);

struct GateModel {
    SpectrumVector fidelities;
    PseudoLindblad generator;
};

// ---- Hadamard with a timing error -----------------------------------------

/// Closed-form twirled channel (1-2p) rho + p X rho X + p Z rho Z and its rates.
std::pair<PauliChannel, PseudoLindblad> hadamard_channel(double p);
/// Evolves H = (X + Z)/sqrt(2) for Omega t = pi/2 + omega_dt and twirls against the ideal gate.
SpectrumVector hadamard_numeric_fidelities(double omega_dt);

// ---- X_pi with amplitude and off-axis error --------------------------------

/// sqrt((dx + 1)^2 + dz^2).
double xpi_zeta(double dx, double dz);
SpectrumVector xpi_fidelities(double dx, double dz);
/// Closed-form fidelities and rates. Throws SingularFidelityError when a fidelity vanishes.
GateModel xpi_channel(double dx, double dz);
SpectrumVector xpi_numeric_fidelities(double dx, double dz);

// ---- ZZ_{pi/2} with T1 damping ---------------------------------------------

SpectrumVector zz_t1_fidelities(double dkappa);
/// Closed-form fidelities and all 15 rates.
GateModel zz_t1_channel(double dkappa);

struct ZZSeriesRates {
    double ix = 0;
    double xz = 0;
    double zz = 0;
};
/// Fourth-order expansions of the three nonzero rate groups.
ZZSeriesRates zz_t1_series_rates(double dkappa);

/// Propagates the two-qubit master equation to J t = pi/4 (J = 1) and twirls.
/// The closed forms correspond to AfterGate placement.
SpectrumVector zz_t1_numeric_fidelities(double dkappa, NoisePlacement placement = NoisePlacement::AfterGate);

// ---- Uniform access for scans ----------------------------------------------

/// Closed-form fidelities and rates for any variant.
GateModel closed_form_model(const GateNoiseSpec &spec);
/// Fidelities from numerical evolution followed by extraction and twirl.
SpectrumVector numeric_fidelities(const GateNoiseSpec &spec);

}  // namespace pauliblad
