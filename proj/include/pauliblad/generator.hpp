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

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliblad/pauli.hpp"
#include "pauliblad/spectrum.hpp"

namespace pauliblad {

inline constexpr double kDefaultCpTol = 1e-10;
inline constexpr double kDefaultRateTol = 1e-14;
inline constexpr double kDefaultLogTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-10;
inline constexpr double kImagTol = 1e-12;

/// Orders Paulis by dense spectrum index (highest qubit digit most significant).
struct IndexOrder {
    bool operator()(const PauliOp &a, const PauliOp &b) const;
};

/// A dense Pauli channel: probability p_k for every Pauli P_k, indexed as in SpectrumVector.
class PauliChannel {
  public:
    /// Validates length 4^n and normalization. Negative entries are allowed (see is_cptp).
    PauliChannel(unsigned num_qubits, std::vector<double> probs);
    /// Accepts a complex spectrum whose imaginary parts are all below kImagTol.
    static PauliChannel from_spectrum(const SpectrumVector &probs);
    static PauliChannel identity(unsigned num_qubits);

    unsigned num_qubits() const {
        return n_;
    }
    std::span<const double> probs() const {
        return probs_;
    }
    double prob(const PauliOp &p) const;
    /// 1 - p_I.
    double infidelity() const {
        return 1.0 - probs_[0];
    }
    SpectrumVector as_spectrum() const;

  private:
    unsigned n_;
    std::vector<double> probs_;
};

/// Sparse Pauli pseudo-Lindblad generator L(rho) = sum_k lambda_k (P_k rho P_k - rho).
///
/// The identity never appears as a key; its coefficient is implied by trace preservation.
class PseudoLindblad {
  public:
    using RateMap = std::map<PauliOp, complex, IndexOrder>;

    explicit PseudoLindblad(unsigned num_qubits);
    PseudoLindblad(unsigned num_qubits, RateMap rates, double rate_tol = kDefaultRateTol);

    unsigned num_qubits() const {
        return n_;
    }
    const RateMap &rates() const {
        return rates_;
    }
    std::size_t size() const {
        return rates_.size();
    }
    bool empty() const {
        return rates_.empty();
    }
    /// Zero when the Pauli carries no term.
    complex rate(const PauliOp &p) const;
    /// Sets (or with a rate below tolerance, removes) one term.
    void set_rate(const PauliOp &p, complex value, double rate_tol = kDefaultRateTol);
    void add_rate(const PauliOp &p, complex value, double rate_tol = kDefaultRateTol);
    bool all_real(double imag_tol = kImagTol) const;

  private:
    unsigned n_;
    RateMap rates_;
};

enum class MarkovClass { Markovian, NonMarkovianReal, ComplexRates };

std::string_view to_string(MarkovClass c);

struct Classification {
    MarkovClass kind = MarkovClass::Markovian;
    /// Offending terms, most negative real part first, then largest |Im|.
    std::vector<std::pair<PauliOp, complex>> witnesses;
};

/// f = H p.
SpectrumVector channel_to_fidelities(const PauliChannel &ch);

/// Rates for every Pauli including the identity entry, (1/D) H log f.
/// Throws SingularFidelityError if any |f_k| < log_tol.
SpectrumVector fidelities_to_dense_rates(const SpectrumVector &fidelities, double log_tol = kDefaultLogTol);

PseudoLindblad fidelities_to_generator(const SpectrumVector &fidelities, double log_tol = kDefaultLogTol,
                                       double rate_tol = kDefaultRateTol);

/// lambda = (1/D) H log(H p), principal branch.
PseudoLindblad channel_to_generator(const PauliChannel &ch, double log_tol = kDefaultLogTol,
                                    double rate_tol = kDefaultRateTol);

/// log f_j = -2 sum over terms anticommuting with P_j, computed densely through the transform.
SpectrumVector generator_log_fidelities(const PseudoLindblad &g);
SpectrumVector generator_fidelities(const PseudoLindblad &g);

/// exp(L) as a dense channel. The result may be nonphysical; check it with is_cptp.
PauliChannel generator_to_channel(const PseudoLindblad &g);

/// Fidelity of a single Pauli under exp(L), from the sparse terms only (any n).
complex model_fidelity(const PseudoLindblad &g, const PauliOp &p);

Classification classify(const PseudoLindblad &g, double class_tol = 0.0);

bool is_cptp(const PauliChannel &ch, double cp_tol = kDefaultCpTol);

PseudoLindblad scale(const PseudoLindblad &g, double s);
PseudoLindblad compose(const PseudoLindblad &a, const PseudoLindblad &b);
PseudoLindblad invert(const PseudoLindblad &g);

}  // namespace pauliblad
