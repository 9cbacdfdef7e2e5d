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

#include "pauliblad/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pauliblad/errors.hpp"

namespace pauliblad {

bool IndexOrder::operator()(const PauliOp &a, const PauliOp &b) const {
    if (a.num_qubits() != b.num_qubits()) {
        return a.num_qubits() < b.num_qubits();
    }
    for (unsigned q = a.num_qubits(); q-- > 0;) {
        // Digit order I < X < Y < Z.
        auto digit = [q](const PauliOp &p) {
            bool x = (p.x_bits() >> q) & 1u;
            bool z = (p.z_bits() >> q) & 1u;
            return x ? (z ? 2 : 1) : (z ? 3 : 0);
        };
        int da = digit(a);
        int db = digit(b);
        if (da != db) {
            return da < db;
        }
    }
    return false;
}

PauliChannel::PauliChannel(unsigned num_qubits, std::vector<double> probs)
    : n_(num_qubits), probs_(std::move(probs)) {
    if (probs_.size() != spectrum_length(num_qubits)) {
        throw DimensionError("channel for " + std::to_string(num_qubits) + " qubits needs " +
                             std::to_string(spectrum_length(num_qubits)) + " probabilities, got " +
                             std::to_string(probs_.size()));
    }
    double total = 0;
    for (double p : probs_) {
        if (!std::isfinite(p)) {
            throw ParameterError("channel probabilities must be finite");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
        throw ParameterError("channel probabilities sum to " + std::to_string(total) + ", expected 1");
    }
}

PauliChannel PauliChannel::from_spectrum(const SpectrumVector &probs) {
    std::vector<double> re(probs.size());
    for (std::size_t i = 0; i < probs.size(); i++) {
        if (std::abs(probs[i].imag()) > kImagTol) {
            throw ParameterError("channel probability " + PauliOp::from_index(i, probs.num_qubits()).label() +
                                 " has imaginary part " + std::to_string(probs[i].imag()));
        }
        re[i] = probs[i].real();
    }
    return PauliChannel(probs.num_qubits(), std::move(re));
}

PauliChannel PauliChannel::identity(unsigned num_qubits) {
    std::vector<double> p(spectrum_length(num_qubits), 0.0);
    p[0] = 1.0;
    return PauliChannel(num_qubits, std::move(p));
}

double PauliChannel::prob(const PauliOp &p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("Pauli " + p.label() + " does not match channel qubit count");
    }
    return probs_[p.to_index()];
}

SpectrumVector PauliChannel::as_spectrum() const {
    return SpectrumVector(n_, SpectrumKind::Probabilities, std::vector<complex>(probs_.begin(), probs_.end()));
}

PseudoLindblad::PseudoLindblad(unsigned num_qubits) : n_(num_qubits) {
}

PseudoLindblad::PseudoLindblad(unsigned num_qubits, RateMap rates, double rate_tol) : n_(num_qubits) {
    for (const auto &[p, v] : rates) {
        set_rate(p, v, rate_tol);
    }
}

complex PseudoLindblad::rate(const PauliOp &p) const {
    auto it = rates_.find(p);
    return it == rates_.end() ? complex{} : it->second;
}

void PseudoLindblad::set_rate(const PauliOp &p, complex value, double rate_tol) {
    if (p.num_qubits() != n_) {
        throw DimensionError("term " + p.label() + " does not match generator qubit count " +
                             std::to_string(n_));
    }
    if (p.is_identity()) {
        throw ParameterError("the identity Pauli cannot carry a generator rate");
    }
    if (std::abs(value) < rate_tol) {
        rates_.erase(p);
    } else {
        rates_[p] = value;
    }
}

void PseudoLindblad::add_rate(const PauliOp &p, complex value, double rate_tol) {
    set_rate(p, rate(p) + value, rate_tol);
}

bool PseudoLindblad::all_real(double imag_tol) const {
    return std::all_of(rates_.begin(), rates_.end(),
                       [imag_tol](const auto &kv) { return std::abs(kv.second.imag()) <= imag_tol; });
}

std::string_view to_string(MarkovClass c) {
    switch (c) {
        case MarkovClass::Markovian:
            return "Markovian";
        case MarkovClass::NonMarkovianReal:
            return "NonMarkovianReal";
        case MarkovClass::ComplexRates:
            return "ComplexRates";
    }
    return "Unknown";
}

SpectrumVector channel_to_fidelities(const PauliChannel &ch) {
    return walsh_hadamard(ch.as_spectrum(), SpectrumKind::Fidelities);
}

SpectrumVector fidelities_to_dense_rates(const SpectrumVector &fidelities, double log_tol) {
    SpectrumVector logf = fidelities.relabeled(SpectrumKind::LogFidelities);
    for (std::size_t i = 0; i < logf.size(); i++) {
        if (std::abs(logf[i]) < log_tol) {
            auto label = PauliOp::from_index(i, fidelities.num_qubits()).label();
            throw SingularFidelityError("fidelity of " + label + " is too close to zero for a logarithm", label);
        }
        logf[i] = std::log(logf[i]);
    }
    return inverse_walsh_hadamard(logf, SpectrumKind::Rates);
}

PseudoLindblad fidelities_to_generator(const SpectrumVector &fidelities, double log_tol, double rate_tol) {
    SpectrumVector dense = fidelities_to_dense_rates(fidelities, log_tol);
    PseudoLindblad g(fidelities.num_qubits());
    for (std::size_t k = 1; k < dense.size(); k++) {
        g.set_rate(PauliOp::from_index(k, fidelities.num_qubits()), dense[k], rate_tol);
    }
    return g;
}

PseudoLindblad channel_to_generator(const PauliChannel &ch, double log_tol, double rate_tol) {
    return fidelities_to_generator(channel_to_fidelities(ch), log_tol, rate_tol);
}

SpectrumVector generator_log_fidelities(const PseudoLindblad &g) {
    // log f = H lambda with lambda_0 = -sum_{k>=1} lambda_k.
    SpectrumVector full(g.num_qubits(), SpectrumKind::Rates);
    complex total{};
    for (const auto &[p, v] : g.rates()) {
        full[p.to_index()] = v;
        total += v;
    }
    full[0] = -total;
    return walsh_hadamard(full, SpectrumKind::LogFidelities);
}

SpectrumVector generator_fidelities(const PseudoLindblad &g) {
    SpectrumVector f = generator_log_fidelities(g).relabeled(SpectrumKind::Fidelities);
    for (auto &x : f.values()) {
        x = std::exp(x);
    }
    // Identity fidelity is exactly one by trace preservation.
    f[0] = 1.0;
    return f;
}

PauliChannel generator_to_channel(const PseudoLindblad &g) {
    return PauliChannel::from_spectrum(inverse_walsh_hadamard(generator_fidelities(g), SpectrumKind::Probabilities));
}

complex model_fidelity(const PseudoLindblad &g, const PauliOp &p) {
    complex acc{};
    for (const auto &[q, v] : g.rates()) {
        if (!commutes(p, q)) {
            acc += v;
        }
    }
    return std::exp(-2.0 * acc);
}

Classification classify(const PseudoLindblad &g, double class_tol) {
    Classification out;
    bool complex_seen = false;
    for (const auto &[p, v] : g.rates()) {
        if (std::abs(v.imag()) > kImagTol) {
            complex_seen = true;
            out.witnesses.emplace_back(p, v);
        }
    }
    if (complex_seen) {
        out.kind = MarkovClass::ComplexRates;
    } else {
        for (const auto &[p, v] : g.rates()) {
            if (v.real() < -class_tol) {
                out.witnesses.emplace_back(p, v);
            }
        }
        out.kind = out.witnesses.empty() ? MarkovClass::Markovian : MarkovClass::NonMarkovianReal;
    }
    std::stable_sort(out.witnesses.begin(), out.witnesses.end(), [](const auto &a, const auto &b) {
        if (a.second.real() != b.second.real()) {
            return a.second.real() < b.second.real();
        }
        return std::abs(a.second.imag()) > std::abs(b.second.imag());
    });
    return out;
}

bool is_cptp(const PauliChannel &ch, double cp_tol) {
    double total = 0;
    double lowest = 0;
    for (double p : ch.probs()) {
        total += p;
        lowest = std::min(lowest, p);
    }
    return std::abs(total - 1.0) <= kNormalizationTol && lowest >= -cp_tol;
}

PseudoLindblad scale(const PseudoLindblad &g, double s) {
    PseudoLindblad out(g.num_qubits());
    for (const auto &[p, v] : g.rates()) {
        out.set_rate(p, s * v);
    }
    return out;
}

PseudoLindblad compose(const PseudoLindblad &a, const PseudoLindblad &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("compose: generators act on different qubit counts");
    }
    PseudoLindblad out = a;
    for (const auto &[p, v] : b.rates()) {
        out.add_rate(p, v);
    }
    return out;
}

PseudoLindblad invert(const PseudoLindblad &g) {
    return scale(g, -1.0);
}

}  // namespace pauliblad
