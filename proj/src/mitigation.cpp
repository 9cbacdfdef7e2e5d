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

#include "pauliblad/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pauliblad/errors.hpp"
#include "pauliblad/parallel.hpp"

namespace pauliblad {

namespace {

constexpr double kPi = std::numbers::pi;
// Shots are reduced in fixed blocks so sums do not depend on the thread count.
constexpr std::uint64_t kShotBlock = 1024;

bool is_real(complex v) {
    return std::abs(v.imag()) <= kImagTol;
}

}  // namespace

double MitigationMode::rate_factor() const {
    switch (kind) {
        case MitigationKind::Inject:
            return 1.0;
        case MitigationKind::Invert:
            return -1.0;
        case MitigationKind::Amplify:
            return alpha;
    }
    return 1.0;
}

std::string_view to_string(MitigationKind k) {
    switch (k) {
        case MitigationKind::Inject:
            return "inject";
        case MitigationKind::Invert:
            return "invert";
        case MitigationKind::Amplify:
            return "amplify";
    }
    return "inject";
}

MitigationKind mitigation_kind_from_string(std::string_view s) {
    if (s == "inject") {
        return MitigationKind::Inject;
    }
    if (s == "invert") {
        return MitigationKind::Invert;
    }
    if (s == "amplify") {
        return MitigationKind::Amplify;
    }
    throw ParameterError("unknown mode '" + std::string(s) + "' (expected inject, invert or amplify)");
}

std::string_view to_string(TermCase c) {
    switch (c) {
        case TermCase::Probabilistic:
            return "Probabilistic";
        case TermCase::SignFlip:
            return "SignFlip";
        case TermCase::ComplexPhase:
            return "ComplexPhase";
        case TermCase::Deterministic:
            return "Deterministic";
    }
    return "Probabilistic";
}

QuasiTerm compile_term(const PauliOp &pauli, complex lambda) {
    QuasiTerm t;
    t.pauli = pauli;
    t.lambda = lambda;
    t.w = 0.5 * (1.0 + std::exp(-2.0 * lambda));
    if (is_real(lambda) && lambda.real() >= 0.0) {
        t.kind = TermCase::Probabilistic;
        t.q = t.w.real();
        t.gamma = 1.0;
        t.phi = 0.0;
    } else if (is_real(lambda)) {
        double w = t.w.real();
        t.kind = TermCase::SignFlip;
        t.gamma = 2.0 * w - 1.0;
        t.q = w / (2.0 * w - 1.0);
        t.phi = kPi;
    } else {
        t.kind = TermCase::ComplexPhase;
        double aw = std::abs(t.w);
        double a1 = std::abs(1.0 - t.w);
        if (aw == 0.0) {
            // exp(L) is exactly P . P up to the phase of (1 - w).
            t.q = 0.0;
            t.gamma = a1;
            t.phi = std::arg(1.0 - t.w);
        } else {
            t.gamma = t.w / aw * (aw + a1);
            t.q = aw / (aw + a1);
            t.phi = std::arg((1.0 - t.w) / t.w);
        }
    }
    return t;
}

QuasiProgram compile(const PseudoLindblad &g, MitigationMode mode) {
    QuasiProgram prog;
    prog.num_qubits = g.num_qubits();
    prog.mode = mode;
    double factor = mode.rate_factor();
    for (const auto &[p, v] : g.rates()) {
        prog.terms.push_back(compile_term(p, factor * v));
        prog.total_gamma *= std::abs(prog.terms.back().gamma);
    }
    return prog;
}

QuasiProgram factorize_phase_terms(const QuasiProgram &prog, double tol) {
    QuasiProgram out;
    out.num_qubits = prog.num_qubits;
    out.mode = prog.mode;
    for (const auto &t : prog.terms) {
        if (t.kind != TermCase::ComplexPhase) {
            out.terms.push_back(t);
            continue;
        }
        double m = t.lambda.imag() / (kPi / 2);
        double m_round = std::round(m);
        if (std::abs(m - m_round) * (kPi / 2) > tol) {
            out.terms.push_back(t);
            continue;
        }
        if (std::fmod(std::abs(m_round), 2.0) == 1.0) {
            QuasiTerm det;
            det.pauli = t.pauli;
            det.lambda = complex{0.0, kPi / 2};
            det.w = 0.0;
            det.q = 0.0;
            det.phi = 0.0;
            det.gamma = 1.0;
            det.kind = TermCase::Deterministic;
            out.terms.push_back(det);
        }
        if (std::abs(t.lambda.real()) >= kDefaultRateTol) {
            out.terms.push_back(compile_term(t.pauli, complex{t.lambda.real(), 0.0}));
        }
    }
    out.total_gamma = 1.0;
    for (const auto &t : out.terms) {
        out.total_gamma *= std::abs(t.gamma);
    }
    return out;
}

WeightedShot sample_shot(const QuasiProgram &prog, CounterRng &rng) {
    WeightedShot shot;
    for (const auto &t : prog.terms) {
        shot.weight *= t.gamma;
        if (!(rng.uniform() < t.q)) {
            shot.applied.push_back(t.pauli);
            shot.weight *= std::polar(1.0, t.phi);
        }
    }
    return shot;
}

std::vector<ExpectationEstimate> estimate_expectations(const QuasiProgram &prog,
                                                       const std::optional<PauliChannel> &exact_channel,
                                                       const std::vector<PauliOp> &observables,
                                                       std::uint64_t shots, std::uint64_t seed, unsigned threads) {
    if (shots == 0) {
        throw ParameterError("shots must be positive");
    }
    for (const auto &o : observables) {
        if (o.num_qubits() != prog.num_qubits) {
            throw DimensionError("observable " + o.label() + " does not match program qubit count");
        }
    }
    std::vector<double> cdf;
    if (exact_channel) {
        if (exact_channel->num_qubits() != prog.num_qubits) {
            throw DimensionError("exact channel does not match program qubit count");
        }
        if (!is_cptp(*exact_channel)) {
            throw ParameterError("exact channel must be CPTP to be sampled");
        }
        double acc = 0;
        for (double p : exact_channel->probs()) {
            acc += std::max(p, 0.0);
            cdf.push_back(acc);
        }
    }

    const std::size_t nobs = observables.size();
    struct Partial {
        std::vector<complex> sum;
        std::vector<double> sum_sq;
    };
    std::uint64_t blocks = (shots + kShotBlock - 1) / kShotBlock;
    std::vector<Partial> partials(blocks, Partial{std::vector<complex>(nobs), std::vector<double>(nobs)});
    parallel_for(blocks, threads, [&](std::size_t b) {
        auto &part = partials[b];
        std::uint64_t end = std::min<std::uint64_t>(shots, (b + 1) * kShotBlock);
        for (std::uint64_t s = b * kShotBlock; s < end; s++) {
            CounterRng rng(seed, s);
            WeightedShot shot = sample_shot(prog, rng);
            PauliOp net = PauliOp::identity(prog.num_qubits);
            for (const auto &p : shot.applied) {
                net = net * p;
            }
            if (exact_channel) {
                double u = rng.uniform() * cdf.back();
                auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
                std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
                net = net * PauliOp::from_index(k, prog.num_qubits);
            }
            for (std::size_t o = 0; o < nobs; o++) {
                complex v = commutes(net, observables[o]) ? shot.weight : -shot.weight;
                part.sum[o] += v;
                part.sum_sq[o] += v.real() * v.real();
            }
        }
    });

    std::vector<ExpectationEstimate> out;
    double n = static_cast<double>(shots);
    for (std::size_t o = 0; o < nobs; o++) {
        complex sum{};
        double sum_sq = 0;
        for (const auto &part : partials) {
            sum += part.sum[o];
            sum_sq += part.sum_sq[o];
        }
        complex mean = sum / n;
        double var = shots > 1 ? std::max(0.0, (sum_sq - n * mean.real() * mean.real()) / (n - 1.0)) : 0.0;
        out.push_back(ExpectationEstimate{observables[o], mean.real(), mean.imag(), std::sqrt(var / n)});
    }
    return out;
}

complex target_fidelity(const PseudoLindblad &g, MitigationMode mode, const PauliOp &p) {
    return model_fidelity(scale(g, mode.rate_factor()), p);
}

namespace {

double eq18_gamma(complex lambda) {
    return std::exp(-lambda.real()) * (std::abs(std::sinh(lambda)) + std::abs(std::cosh(lambda)));
}

}  // namespace

double pea_overhead(const PseudoLindblad &g, double alpha) {
    if (g.all_real()) {
        double neg = 0;
        for (const auto &[p, v] : g.rates()) {
            if (alpha * v.real() < 0.0) {
                neg += alpha * v.real();
            }
        }
        return std::exp(-2.0 * neg);
    }
    double total = 1;
    for (const auto &[p, v] : g.rates()) {
        total *= eq18_gamma(alpha * v);
    }
    return total;
}

double pec_overhead(const PseudoLindblad &g) {
    if (g.all_real()) {
        double pos = 0;
        for (const auto &[p, v] : g.rates()) {
            if (v.real() > 0.0) {
                pos += v.real();
            }
        }
        return std::exp(2.0 * pos);
    }
    double total = 1;
    for (const auto &[p, v] : g.rates()) {
        total *= eq18_gamma(-v);
    }
    return total;
}

}  // namespace pauliblad
