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

#include <cmath>

#include <gtest/gtest.h>

#include "pauliblad/errors.hpp"
#include "pauliblad/random_channels.hpp"

using namespace pauliblad;

TEST(RandomChannels, SimplexDrawsHaveExactInfidelity) {
    RandomChannelConfig cfg{2, 0.07, 100, 42, Sampler::Simplex};
    for (std::uint64_t t = 0; t < cfg.trials; t++) {
        auto ch = sample_channel(cfg, t);
        EXPECT_NEAR(ch.infidelity(), 0.07, 1e-15);
        EXPECT_TRUE(is_cptp(ch));
    }
}

TEST(RandomChannels, UniformDrawsConcentrate) {
    RandomChannelConfig cfg{3, 0.05, 2000, 1, Sampler::IndependentUniform};
    double sum = 0;
    for (std::uint64_t t = 0; t < cfg.trials; t++) {
        auto ch = sample_channel(cfg, t);
        EXPECT_TRUE(is_cptp(ch));
        sum += ch.infidelity();
    }
    EXPECT_NEAR(sum / 2000.0, 0.05, 5e-4);
}

TEST(RandomChannels, DrawsAreDeterministic) {
    RandomChannelConfig cfg{2, 0.1, 10, 99, Sampler::Simplex};
    auto a = sample_channel(cfg, 7);
    auto b = sample_channel(cfg, 7);
    auto c = sample_channel(cfg, 8);
    EXPECT_TRUE(std::equal(a.probs().begin(), a.probs().end(), b.probs().begin()));
    EXPECT_FALSE(std::equal(a.probs().begin(), a.probs().end(), c.probs().begin()));
}

TEST(RandomChannels, RejectsBadInfidelity) {
    EXPECT_THROW(sample_channel(RandomChannelConfig{1, 0.0, 1, 0, Sampler::Simplex}, 0), ParameterError);
    EXPECT_THROW(sample_channel(RandomChannelConfig{1, 1.0, 1, 0, Sampler::Simplex}, 0), ParameterError);
    EXPECT_THROW(analytic_prob_negative(2, -0.1), ParameterError);
    EXPECT_THROW(sampler_from_string("gaussian"), ParameterError);
}

TEST(MinRate, KnownChannels) {
    auto m = min_rate(PauliChannel(1, {0.9, 0.05, 0.0, 0.05}));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->witness.label(), "Y");
    EXPECT_NEAR(m->value, -0.5 * std::log(0.9) + 0.25 * std::log(0.8), 1e-12);

    auto id = min_rate(PauliChannel::identity(2));
    ASSERT_TRUE(id);
    EXPECT_EQ(id->value, 0.0);
    EXPECT_TRUE(id->witness.is_identity());

    // a negative fidelity makes the draw unusable
    EXPECT_FALSE(min_rate(PauliChannel(1, {0.1, 0.0, 0.8, 0.1})));
}

TEST(Analytic, FrozenValues) {
    EXPECT_NEAR(analytic_prob_negative(2, 0.05), 0.173434562, 1e-9);
    EXPECT_NEAR(analytic_prob_negative(4, 0.05), 0.95252818, 1e-8);
    EXPECT_NEAR(analytic_mean_min_rate(1, 0.09), 0.0113811, 1e-7);
    EXPECT_NEAR(analytic_mean_min_rate(2, 0.09), 5.1429e-4, 1e-8);
    EXPECT_NEAR(analytic_mean_min_rate(3, 0.09), -1.53827e-5, 1e-10);
    EXPECT_NEAR(analytic_mean_min_rate(4, 0.09), -1.28266e-5, 1e-10);
    EXPECT_EQ(analytic_prob_negative(3, 0.0), 0.0);
}

TEST(Scan, ThreadCountDoesNotChangeResults) {
    std::vector<RandomChannelConfig> cfgs{{2, 0.03, 3000, 5, Sampler::Simplex},
                                          {3, 0.01, 1000, 5, Sampler::IndependentUniform}};
    EXPECT_EQ(scan_to_csv(scan(cfgs, 1)), scan_to_csv(scan(cfgs, 4)));
}

TEST(Scan, CsvColumns) {
    auto rows = scan({{3, 0.05, 1000, 0, Sampler::Simplex}});
    std::string csv = scan_to_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), scan_csv_header());
    EXPECT_EQ(scan_csv_header(),
              "n,r,trials,sampler,p_neg_mc,p_neg_stderr,p_neg_analytic,mean_min_mc,mean_min_stderr,"
              "mean_min_analytic,complex_fraction,seed");
    EXPECT_EQ(rows[0].usable, 1000u);
    EXPECT_EQ(rows[0].p_neg_analytic, analytic_prob_negative(3, 0.05));
    EXPECT_EQ(rows[0].mean_min_analytic, analytic_mean_min_rate(3, 0.05));
    // one data row, every column populated
    std::string line = csv.substr(csv.find('\n') + 1);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11);
    EXPECT_EQ(line.find(",,"), std::string::npos);
}

TEST(Scan, StderrUsesUsableDraws) {
    // Large r produces negative fidelities in some draws.
    auto row = run_scan_config({1, 0.6, 4000, 3, Sampler::Simplex});
    EXPECT_GT(row.complex_fraction, 0.0);
    EXPECT_LT(row.usable, 4000u);
    double m = static_cast<double>(row.usable);
    EXPECT_NEAR(row.p_neg_stderr, std::sqrt(row.p_neg_mc * (1 - row.p_neg_mc) / m), 1e-15);
}
