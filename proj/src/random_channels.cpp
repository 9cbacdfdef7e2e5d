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

#include "pauliblad/random_channels.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pauliblad/errors.hpp"
#include "pauliblad/io.hpp"
#include "pauliblad/parallel.hpp"
#include "pauliblad/rng.hpp"

namespace pauliblad {

std::string_view to_string(Sampler s) {
    return s == Sampler::Simplex ? "simplex" : "uniform";
}

Sampler sampler_from_string(std::string_view s) {
    if (s == "simplex") {
        return Sampler::Simplex;
    }
    if (s == "uniform" || s == "independent-uniform") {
        return Sampler::IndependentUniform;
    }
    throw ParameterError("unknown sampler '" + std::string(s) + "' (expected simplex or uniform)");
}

PauliChannel sample_channel(const RandomChannelConfig &cfg, std::uint64_t trial_index) {
    if (!(cfg.r > 0.0 && cfg.r < 1.0)) {
        throw ParameterError("infidelity r must lie in (0, 1), got " + std::to_string(cfg.r));
    }
    std::size_t d = spectrum_length(cfg.n);
    CounterRng rng(cfg.seed, trial_index);
    std::vector<double> p(d, 0.0);
    double total = 0;
    if (cfg.sampler == Sampler::Simplex) {
        for (std::size_t k = 1; k < d; k++) {
            p[k] = rng.exponential();
            total += p[k];
        }
        double factor = cfg.r / total;
        total = 0;
        for (std::size_t k = 1; k < d; k++) {
            p[k] *= factor;
            total += p[k];
        }
    } else {
        double factor = cfg.r / (static_cast<double>(d - 1) * 0.5);
        for (std::size_t k = 1; k < d; k++) {
            p[k] = factor * rng.uniform();
            total += p[k];
        }
    }
    p[0] = 1.0 - total;
    return PauliChannel(cfg.n, std::move(p));
}

std::optional<MinRate> min_rate(const PauliChannel &ch) {
    std::vector<double> f(ch.probs().begin(), ch.probs().end());
    walsh_hadamard_in_place(std::span<double>(f));
    for (double &x : f) {
        if (!(x >= kDefaultLogTol)) {
            return std::nullopt;
        }
        x = std::log(x);
    }
    walsh_hadamard_in_place(std::span<double>(f));
    double inv_d = 1.0 / static_cast<double>(f.size());
    MinRate best{0.0, PauliOp::identity(ch.num_qubits())};
    bool any_nonzero = false;
    std::size_t best_index = 0;
    for (std::size_t k = 1; k < f.size(); k++) {
        double lam = f[k] * inv_d;
        if (std::abs(lam) < kDefaultRateTol) {
            lam = 0.0;
        } else {
            any_nonzero = true;
        }
        if (best_index == 0 || lam < best.value) {
            best.value = lam;
            best_index = k;
        }
    }
    if (!any_nonzero) {
        return MinRate{0.0, PauliOp::identity(ch.num_qubits())};
    }
    best.witness = PauliOp::from_index(best_index, ch.num_qubits());
    return best;
}

double analytic_prob_negative(unsigned n, double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw ParameterError("infidelity r must lie in [0, 1)");
    }
    double d = static_cast<double>(spectrum_length(n));
    return 1.0 - std::exp(-d * r / (4.0 * (1.0 + r)));
}

double analytic_mean_min_rate(unsigned n, double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw ParameterError("infidelity r must lie in [0, 1)");
    }
    double d = static_cast<double>(spectrum_length(n));
    return r / (2.0 * d * d - 1.0) * (-((d - 4.0) * r) - 4.0 * std::exp(-d) * (r + 1.0) + 4.0);
}

ScanRow run_scan_config(const RandomChannelConfig &cfg, unsigned threads) {
    if (cfg.trials == 0) {
        throw ParameterError("trials must be positive");
    }
    if (!(cfg.r > 0.0 && cfg.r < 1.0)) {
        throw ParameterError("infidelity r must lie in (0, 1), got " + std::to_string(cfg.r));
    }
    struct Draw {
        bool usable = false;
        double min = 0;
    };
    std::vector<Draw> draws(cfg.trials);
    parallel_for(cfg.trials, threads, [&](std::size_t t) {
        auto m = min_rate(sample_channel(cfg, t));
        if (m) {
            draws[t] = Draw{true, m->value};
        }
    });

    ScanRow row;
    row.config = cfg;
    row.p_neg_analytic = analytic_prob_negative(cfg.n, cfg.r);
    row.mean_min_analytic = analytic_mean_min_rate(cfg.n, cfg.r);
    std::uint64_t negative = 0;
    double sum = 0;
    for (const auto &d : draws) {
        if (d.usable) {
            row.usable++;
            negative += d.min < 0.0 ? 1 : 0;
            sum += d.min;
        }
    }
    row.complex_fraction = static_cast<double>(cfg.trials - row.usable) / static_cast<double>(cfg.trials);
    if (row.usable == 0) {
        double nan = std::numeric_limits<double>::quiet_NaN();
        row.flagged = true;
        row.p_neg_mc = row.p_neg_stderr = row.mean_min_mc = row.mean_min_stderr = row.mean_min_sd = nan;
        return row;
    }
    double m = static_cast<double>(row.usable);
    row.p_neg_mc = static_cast<double>(negative) / m;
    row.p_neg_stderr = std::sqrt(row.p_neg_mc * (1.0 - row.p_neg_mc) / m);
    row.mean_min_mc = sum / m;
    double ss = 0;
    for (const auto &d : draws) {
        if (d.usable) {
            ss += (d.min - row.mean_min_mc) * (d.min - row.mean_min_mc);
        }
    }
    row.mean_min_sd = row.usable > 1 ? std::sqrt(ss / (m - 1.0)) : 0.0;
    row.mean_min_stderr = row.mean_min_sd / std::sqrt(m);
    return row;
}

std::vector<ScanRow> scan(const std::vector<RandomChannelConfig> &cfgs, unsigned threads) {
    std::vector<ScanRow> rows;
    rows.reserve(cfgs.size());
    for (const auto &cfg : cfgs) {
        rows.push_back(run_scan_config(cfg, threads));
    }
    return rows;
}

std::string scan_csv_header() {
    return "n,r,trials,sampler,p_neg_mc,p_neg_stderr,p_neg_analytic,mean_min_mc,mean_min_stderr,"
           "mean_min_analytic,complex_fraction,seed";
}

std::string scan_csv_row(const ScanRow &row) {
    std::ostringstream out;
    const auto &c = row.config;
    out << c.n << ',' << format_double(c.r) << ',' << c.trials << ',' << to_string(c.sampler) << ','
        << format_double(row.p_neg_mc) << ',' << format_double(row.p_neg_stderr) << ','
        << format_double(row.p_neg_analytic) << ',' << format_double(row.mean_min_mc) << ','
        << format_double(row.mean_min_stderr) << ',' << format_double(row.mean_min_analytic) << ','
        << format_double(row.complex_fraction) << ',' << c.seed;
    return out.str();
}

std::string scan_to_csv(const std::vector<ScanRow> &rows) {
    std::string out = scan_csv_header() + "\n";
    for (const auto &row : rows) {
        out += scan_csv_row(row) + "\n";
    }
    return out;
}

}  // namespace pauliblad
