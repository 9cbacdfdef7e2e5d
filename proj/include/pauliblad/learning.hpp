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

// Learning sparse pseudo-Lindblad noise models from synthetic cycle-benchmarking data.
//
// Pipeline: simulate_benchmark produces per-basis outcome histograms at even
// depths; marginal_decays and extract_fidelity turn them into SPAM-free Pauli
// fidelities; the three fit_* strategies recover rates from the local
// fidelities; holdout_validate scores a model on nonlocal Paulis measured in
// the same shots.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "pauliblad/generator.hpp"

namespace pauliblad {

using QubitPair = std::pair<unsigned, unsigned>;

/// Weight-1 Paulis on every qubit plus weight-2 Paulis on connected pairs.
struct LocalBasis {
    unsigned n = 0;
    std::vector<QubitPair> connectivity;
    /// Ordered by weight, then support, then label.
    std::vector<PauliOp> paulis;

    static LocalBasis build(unsigned n, std::vector<QubitPair> connectivity);
    /// Nearest-neighbour chain 0-1-...-(n-1).
    static LocalBasis chain(unsigned n);
    bool contains(const PauliOp &p) const;
};

std::vector<QubitPair> chain_connectivity(unsigned n);

/// M[i][j] = 1 if rows[i] anticommutes with cols[j], else 0.
struct DesignMatrix {
    std::vector<PauliOp> rows;
    std::vector<PauliOp> cols;
    Eigen::MatrixXd matrix;
};

DesignMatrix design_matrix(const std::vector<PauliOp> &rows, const std::vector<PauliOp> &cols);

/// Right-hand side -log(f)/2, so that M lambda = -log(f)/2 for exact data.
Eigen::VectorXd rate_rhs(const std::vector<double> &fidelities);

/// Full-weight measurement settings covering every basis Pauli qubitwise.
std::vector<PauliOp> measurement_plan(const LocalBasis &basis);

/// True when p is measurable in `setting` (p agrees with it on p's support).
bool measurable_in(const PauliOp &p, const PauliOp &setting);

struct BenchmarkConfig {
    std::vector<int> depths = {0, 2, 4, 8};
    /// Shots per measurement setting per depth.
    std::uint64_t shots = 10000;
    /// Per-qubit SPAM attenuation range; a Pauli's scale is the product over its support.
    double spam_low = 0.92;
    double spam_high = 0.99;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct SettingRecord {
    PauliOp setting;
    /// counts[depth index][outcome bitstring], bit q = 1 for a -1 outcome on qubit q.
    std::vector<std::vector<std::uint64_t>> counts;
};

struct DecayDataset {
    unsigned n = 0;
    std::vector<QubitPair> connectivity;
    std::vector<int> depths;
    std::vector<SettingRecord> settings;
    std::uint64_t seed = 0;
    /// Generation-side SPAM attenuation per qubit. Not used by any fitter.
    std::vector<double> spam;
};

/// Outcome distribution over 2^n bitstrings after `depth` layers of the truth
/// channel, for the +1 eigenstate of `setting` and per-qubit SPAM `spam`.
/// Throws ParameterError if the truth does not produce a physical distribution.
std::vector<double> outcome_distribution(const PseudoLindblad &truth, const PauliOp &setting, int depth,
                                         const std::vector<double> &spam);

/// Throws ParameterError unless all truth rates are real; depths must be nonnegative and even.
DecayDataset simulate_benchmark(const PseudoLindblad &truth, const LocalBasis &basis, const BenchmarkConfig &cfg);

struct PauliDecay {
    PauliOp pauli;
    std::vector<int> depths;
    std::vector<double> means;
    std::vector<std::uint64_t> shots;
};

/// Pools every setting that measures each Pauli. Paulis with no covering setting are omitted.
std::vector<PauliDecay> marginal_decays(const DecayDataset &ds, const std::vector<PauliOp> &paulis);

struct FidelityEstimate {
    PauliOp pauli;
    double fidelity = 0;
    double stderr = 0;
    bool ok = false;
};

/// Weighted least squares of log(mean) against depth; f = exp(slope).
/// Depths with nonpositive means are dropped; fewer than two usable depths gives ok = false.
FidelityEstimate extract_fidelity(const PauliDecay &decay);

/// Lawson-Hanson active-set solution of min ||A x - b|| subject to x >= 0.
Eigen::VectorXd fit_nonnegative(const Eigen::MatrixXd &a, const Eigen::VectorXd &b);

struct LeastSquaresSolution {
    Eigen::VectorXd x;
    bool rank_deficient = false;
};

/// Minimum-norm least squares via a complete orthogonal decomposition.
LeastSquaresSolution fit_unconstrained(const Eigen::MatrixXd &a, const Eigen::VectorXd &b);

struct CpOptions {
    std::uint64_t max_iterations = 100000;
    double relative_tolerance = 1e-12;
};

struct CpFit {
    PseudoLindblad rates;
    PauliChannel channel;
    /// ||H p - f_ext||^2 after each iterate, starting with the initial point.
    std::vector<double> objective;
    std::uint64_t iterations = 0;
};

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(const std::vector<double> &v);

/// Closest CPTP Pauli channel (in fidelity space) to exp(unconstrained), by
/// projected gradient; returns its generator. Throws SizeLimitError for n > 4.
CpFit fit_cp(const PseudoLindblad &unconstrained, const CpOptions &options = {});

enum class FitStrategy { NonNegative, Unconstrained, CpProjected };

std::string_view to_string(FitStrategy s);
FitStrategy fit_strategy_from_string(std::string_view s);

struct FitResult {
    FitStrategy strategy = FitStrategy::Unconstrained;
    PseudoLindblad rates{0};
    /// ||-log(f_model)/2 - rhs|| over the training Paulis.
    double residual = 0;
    double holdout_mae = 0;
    bool rank_deficient = false;
};

PseudoLindblad rates_to_generator(unsigned n, const std::vector<PauliOp> &model, const Eigen::VectorXd &x);

/// Mean absolute error between model fidelity^power and the given values.
double holdout_validate(const PseudoLindblad &model, const std::vector<std::pair<PauliOp, double>> &holdout,
                        int power = 1);

/// Residual of a model against training fidelities.
double training_residual(const PseudoLindblad &model, const std::vector<FidelityEstimate> &training);

struct LearningConfig {
    unsigned n = 4;
    std::vector<QubitPair> connectivity;
    PseudoLindblad truth{0};
    /// Empty means the observation basis.
    std::vector<PauliOp> model_terms;
    BenchmarkConfig benchmark;
    std::vector<FitStrategy> strategies = {FitStrategy::NonNegative, FitStrategy::Unconstrained,
                                           FitStrategy::CpProjected};
    /// Layer repetitions at which holdout predictions are compared.
    int holdout_power = 8;
};

struct LearningReport {
    DecayDataset dataset;
    std::vector<FidelityEstimate> training;
    std::vector<std::pair<PauliOp, double>> holdout;
    std::vector<FitResult> fits;
    /// Filled when CpProjected ran.
    std::optional<CpFit> cp_fit;
};

LearningReport run_learning_experiment(const LearningConfig &cfg);

/// Chain truth used by the demo: single-qubit rates 0.01-0.02, a few positive
/// pair rates and one negative ZZ-type rate of -0.004 on the middle pair.
PseudoLindblad builtin_chain_truth(unsigned n);

nlohmann::json dataset_to_json(const DecayDataset &ds);
DecayDataset dataset_from_json(const nlohmann::json &j);
nlohmann::json fit_result_to_json(const FitResult &fit);

}  // namespace pauliblad
