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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pauliblad/generator.hpp"
#include "pauliblad/rng.hpp"

namespace pauliblad {

enum class MitigationKind { Inject, Invert, Amplify };

struct MitigationMode {
    MitigationKind kind = MitigationKind::Inject;
    /// Only read for Amplify.
    double alpha = 1.0;

    static MitigationMode inject() {
        return {MitigationKind::Inject, 1.0};
    }
    static MitigationMode invert() {
        return {MitigationKind::Invert, -1.0};
    }
    static MitigationMode amplify(double alpha) {
        return {MitigationKind::Amplify, alpha};
    }
    /// Multiplier applied to every rate: 1, -1 or alpha.
    double rate_factor() const;
};

std::string_view to_string(MitigationKind k);
MitigationKind mitigation_kind_from_string(std::string_view s);

enum class TermCase {
    /// Real nonnegative rate: an ordinary Pauli channel.
    Probabilistic,
    /// Real negative rate: quasi-probability with a -1 sign.
    SignFlip,
    /// Complex rate: quasi-probability with a complex phase.
    ComplexPhase,
    /// Unconditional Pauli, produced only by factorize_phase_terms.
    Deterministic,
};

std::string_view to_string(TermCase c);

/// One factor gamma [q rho + e^{i phi} (1 - q) P rho P] = w rho + (1 - w) P rho P.
struct QuasiTerm {
    PauliOp pauli;
    complex lambda;
    complex w;
    double q = 1;
    double phi = 0;
    complex gamma{1.0, 0.0};
    TermCase kind = TermCase::Probabilistic;
};

/// Builds the sampling rule for exp(lambda (P . P - .)).
QuasiTerm compile_term(const PauliOp &pauli, complex lambda);

struct QuasiProgram {
    unsigned num_qubits = 0;
    std::vector<QuasiTerm> terms;
    /// prod_k |gamma_k|.
    double total_gamma = 1;
    MitigationMode mode;
};

QuasiProgram compile(const PseudoLindblad &g, MitigationMode mode);

/// Rewrites terms whose rate has imaginary part m pi / 2 into a real-rate term
/// plus (for odd m) an unconditional Pauli. Other terms are left untouched.
QuasiProgram factorize_phase_terms(const QuasiProgram &prog, double tol = 1e-12);

struct WeightedShot {
    std::vector<PauliOp> applied;
    complex weight{1.0, 0.0};
};

WeightedShot sample_shot(const QuasiProgram &prog, CounterRng &rng);

struct ExpectationEstimate {
    PauliOp observable;
    /// Real part of the weighted mean.
    double mean = 0;
    /// Imaginary part of the weighted mean; should vanish within stderr.
    double imag_mean = 0;
    double stderr = 0;
};

/// Weighted estimator of <P> for +1 eigenstate inputs of each observable P.
/// When `exact_channel` is given (it must be CPTP), a Pauli drawn from it is
/// applied after the program in every shot. Deterministic in (seed, shots) for any thread count.
std::vector<ExpectationEstimate> estimate_expectations(const QuasiProgram &prog,
                                                       const std::optional<PauliChannel> &exact_channel,
                                                       const std::vector<PauliOp> &observables,
                                                       std::uint64_t shots, std::uint64_t seed,
                                                       unsigned threads = 1);

/// Fidelity of the channel the program is meant to implement: f_P^{rate_factor}
/// evaluated from the generator terms.
complex target_fidelity(const PseudoLindblad &g, MitigationMode mode, const PauliOp &p);

/// exp(-2 alpha sum_{lambda<0} lambda) for real rates; prod |gamma_k| of the
/// amplified terms when complex rates are present.
double pea_overhead(const PseudoLindblad &g, double alpha);
/// exp(2 sum_{lambda>0} lambda) for real rates; prod |gamma_k| of the negated terms otherwise.
double pec_overhead(const PseudoLindblad &g);

}  // namespace pauliblad
