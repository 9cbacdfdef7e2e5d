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
#include <string>
#include <string_view>
#include <vector>

#include "pauliblad/generator.hpp"

namespace pauliblad {

enum class Sampler {
    /// Uniform on {p_k >= 0, sum_{k>=1} p_k = r}: normalized i.i.d. exponentials.
    Simplex,
    /// p_k = r x_k / ((D-1)/2) with x_k ~ U(0,1); the sum only concentrates around r.
    IndependentUniform,
};

std::string_view to_string(Sampler s);
Sampler sampler_from_string(std::string_view s);

struct RandomChannelConfig {
    unsigned n = 1;
    double r = 0.01;
    std::uint64_t trials = 20000;
    std::uint64_t seed = 0;
    Sampler sampler = Sampler::Simplex;
};

/// Deterministic in (cfg.seed, trial_index). Throws ParameterError unless 0 < r < 1.
PauliChannel sample_channel(const RandomChannelConfig &cfg, std::uint64_t trial_index);

struct MinRate {
    double value = 0;
    PauliOp witness;
};

/// Smallest non-identity rate and its Pauli. Rates below kDefaultRateTol in
/// magnitude count as zero; a channel with no nonzero rate yields (0, I).
/// Returns nullopt when some fidelity is nonpositive (the rates are complex).
std::optional<MinRate> min_rate(const PauliChannel &ch);

/// 1 - exp(-D r / (4 (1 + r))).
double analytic_prob_negative(unsigned n, double r);
/// r / (2 D^2 - 1) * (4 - (D - 4) r - 4 e^{-D} (r + 1)).
double analytic_mean_min_rate(unsigned n, double r);

struct ScanRow {
    RandomChannelConfig config;
    std::uint64_t usable = 0;
    double p_neg_mc = 0;
    double p_neg_stderr = 0;
    double p_neg_analytic = 0;
    double mean_min_mc = 0;
    double mean_min_stderr = 0;
    double mean_min_sd = 0;
    double mean_min_analytic = 0;
    double complex_fraction = 0;
    /// No real-rate draws: Monte Carlo columns are NaN.
    bool flagged = false;
};

ScanRow run_scan_config(const RandomChannelConfig &cfg, unsigned threads = 1);
std::vector<ScanRow> scan(const std::vector<RandomChannelConfig> &cfgs, unsigned threads = 1);

std::string scan_csv_header();
std::string scan_csv_row(const ScanRow &row);
std::string scan_to_csv(const std::vector<ScanRow> &rows);

}  // namespace pauliblad
