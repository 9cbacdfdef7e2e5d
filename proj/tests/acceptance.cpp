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

// Acceptance checks. Usage: pauliblad_acceptance [criterion ...]
// With no arguments every criterion runs. One PASS/FAIL line per criterion;
// the exit status is nonzero if any requested criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "pauliblad/generator.hpp"
#include "pauliblad/io.hpp"
#include "pauliblad/learning.hpp"
#include "pauliblad/mitigation.hpp"
#include "pauliblad/random_channels.hpp"
#include "pauliblad/rng.hpp"
#include "pauliblad/twirled_gates.hpp"

using namespace pauliblad;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; i++) {
        out.push_back(a + (b - a) * i / (count - 1));
    }
    return out;
}

// ---- 1 -----------------------------------------------------------------------

Outcome round_trip() {
    auto t0 = std::chrono::steady_clock::now();
    CounterRng pick(2024, 0);
    double worst = 0;
    int done = 0;
    std::uint64_t draw = 0;
    while (done < 1000) {
        unsigned n = 1 + static_cast<unsigned>(done % 3);
        double r = 0.3 * pick.uniform_open_low();
        auto ch = sample_channel(RandomChannelConfig{n, r, 1, 77, Sampler::Simplex}, draw++);
        auto f = channel_to_fidelities(ch);
        bool ok = true;
        for (std::size_t k = 0; k < f.size(); k++) {
            ok = ok && std::abs(f[k]) > 1e-6;
        }
        if (!ok) {
            continue;
        }
        auto back = generator_to_channel(channel_to_generator(ch));
        for (std::size_t k = 0; k < f.size(); k++) {
            worst = std::max(worst, std::abs(back.probs()[k] - ch.probs()[k]));
        }
        done++;
    }
    double secs = seconds_since(t0);
    return {worst <= 1e-9 && secs < 10,
            "max elementwise error " + num(worst) + " over 1000 channels in " + num(secs) + " s"};
}

// ---- 2 -----------------------------------------------------------------------

Outcome flip_family() {
    double worst = 0;
    bool all_complex = true;
    for (double p : {0.05, 0.1, 0.2, 0.3, 0.45}) {
        PauliChannel ch(1, {p, 0.0, 1.0 - 2.0 * p, p});
        auto f = channel_to_fidelities(ch);
        worst = std::max({worst, std::abs(f[1] - (2 * p - 1)), std::abs(f[2] - (1 - 2 * p)),
                          std::abs(f[3] - (4 * p - 1))});
        all_complex = all_complex && classify(channel_to_generator(ch)).kind == MarkovClass::ComplexRates;
    }
    return {worst <= 1e-12 && all_complex,
            "max fidelity error " + num(worst) + ", complex rates for all p: " + (all_complex ? "yes" : "no")};
}

// ---- 3, 4 ----------------------------------------------------------------------

Outcome prob_negative() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool pass = true;
    double worst_gap = 0;
    std::string worst_at;
    for (unsigned n : {2u, 3u, 4u}) {
        for (double r : {0.001, 0.003, 0.01, 0.03, 0.09}) {
            auto row = run_scan_config(RandomChannelConfig{n, r, 20000, 1, Sampler::Simplex});
            double gap = std::abs(row.p_neg_mc - row.p_neg_analytic);
            double allowed = std::max(0.03, 3 * row.p_neg_stderr);
            if (!(gap <= allowed)) {
                pass = false;
            }
            if (gap > worst_gap) {
                worst_gap = gap;
                worst_at = "n=" + std::to_string(n) + " r=" + num(r) + " mc=" + num(row.p_neg_mc) +
                           " analytic=" + num(row.p_neg_analytic);
            }
        }
    }
    double secs = seconds_since(t0);
    pass = pass && secs < 300;
    detail << "largest gap " << num(worst_gap) << " at " << worst_at << "; " << num(secs) << " s";
    return {pass, detail.str()};
}

Outcome mean_min_rate() {
    std::ostringstream detail;
    bool within = true;
    std::vector<double> sds;
    for (unsigned n : {2u, 3u, 4u}) {
        auto row = run_scan_config(RandomChannelConfig{n, 0.09, 20000, 1, Sampler::Simplex});
        double z = (row.mean_min_mc - row.mean_min_analytic) / row.mean_min_stderr;
        within = within && std::abs(z) <= 3;
        sds.push_back(row.mean_min_sd);
        detail << "n=" << n << " mc=" << num(row.mean_min_mc) << " analytic=" << num(row.mean_min_analytic)
               << " z=" << num(z) << " sd=" << num(row.mean_min_sd) << "; ";
    }
    bool decreasing = sds[0] > sds[1] && sds[1] > sds[2];
    detail << "sd decreasing: " << (decreasing ? "yes" : "no");
    return {within && decreasing, detail.str()};
}

// ---- 5 -----------------------------------------------------------------------

double max_diff(const SpectrumVector &a, const SpectrumVector &b) {
    double m = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

Outcome gate_models() {
    double worst = 0;
    bool signs = true;
    for (double p : linspace(0.0024, 0.24, 100)) {
        GateNoiseSpec s = HadamardOverrotation{p};
        worst = std::max(worst, max_diff(closed_form_model(s).fidelities, numeric_fidelities(s)));
        auto [ch, g] = hadamard_channel(p);
        signs = signs && g.rate(PauliOp::from_label("Y")).real() < 0;
    }
    for (double dx : linspace(-0.05, 0.05, 10)) {
        for (double dz : linspace(-0.05, 0.05, 10)) {
            GateNoiseSpec s = XPiGate{dx, dz};
            auto m = closed_form_model(s);
            worst = std::max(worst, max_diff(m.fidelities, numeric_fidelities(s)));
            signs = signs && m.generator.rate(PauliOp::from_label("Z")).real() < 0;
        }
    }
    for (double dk : linspace(0.02, 2.0, 100)) {
        GateNoiseSpec s = ZZGateT1{dk};
        auto m = closed_form_model(s);
        worst = std::max(worst, max_diff(m.fidelities, numeric_fidelities(s)));
        signs = signs && m.generator.rate(PauliOp::from_label("ZZ")).real() < 0;
    }
    double exact = zz_t1_channel(0.05).generator.rate(PauliOp::from_label("ZZ")).real();
    double rel = std::abs(zz_t1_series_rates(0.05).zz - exact) / std::abs(exact);
    return {worst <= 1e-8 && signs && rel <= 1e-4,
            "max closed-form vs numeric " + num(worst) + ", sign checks " + (signs ? "hold" : "fail") +
                ", series relative error " + num(rel)};
}

// ---- 6, 7 --------------------------------------------------------------------

PseudoLindblad random_real_generator(unsigned n, CounterRng &rng, double low, double high, int terms) {
    PseudoLindblad g(n);
    std::uint64_t d = spectrum_length(n);
    for (int t = 0; t < terms; t++) {
        std::uint64_t k = 1 + static_cast<std::uint64_t>(rng.uniform() * static_cast<double>(d - 1));
        g.set_rate(PauliOp::from_index(k, n), low + (high - low) * rng.uniform());
    }
    return g;
}

Outcome sampler_unbiased() {
    CounterRng rng(606, 0);
    const std::uint64_t shots = 100000;
    int inject_cases = 0, inject_ok = 0, invert_cases = 0, invert_ok = 0;
    int made = 0;
    while (made < 20) {
        unsigned n = 1 + static_cast<unsigned>(made % 2);
        auto g = random_real_generator(n, rng, -0.01, 0.05, 3);
        auto exact = generator_to_channel(g);
        if (g.empty() || !is_cptp(exact)) {
            continue;
        }
        std::vector<std::pair<std::uint64_t, complex>> rates;
        for (const auto &[p, v] : g.rates()) {
            rates.emplace_back(p.to_index(), v);
        }
        auto ref = oracle::fidelities(oracle::generator_super(rates, n), n);
        std::vector<PauliOp> obs;
        for (std::uint64_t k = 1; k < spectrum_length(n); k++) {
            obs.push_back(PauliOp::from_index(k, n));
        }
        auto inject = compile(g, MitigationMode::inject());
        auto est = estimate_expectations(inject, std::nullopt, obs, shots, 1000 + made);
        double band = 4 * inject.total_gamma / std::sqrt(static_cast<double>(shots));
        for (std::size_t i = 0; i < obs.size(); i++) {
            inject_cases++;
            inject_ok += std::abs(est[i].mean - ref[obs[i].to_index()].real()) <= band ? 1 : 0;
        }
        auto invert = compile(g, MitigationMode::invert());
        auto inv = estimate_expectations(invert, exact, obs, shots, 2000 + made);
        double band_inv = 4 * invert.total_gamma / std::sqrt(static_cast<double>(shots));
        for (const auto &e : inv) {
            invert_cases++;
            invert_ok += std::abs(e.mean - 1.0) <= band_inv ? 1 : 0;
        }
        made++;
    }
    double inject_frac = static_cast<double>(inject_ok) / inject_cases;
    return {inject_frac >= 0.95 && invert_ok == invert_cases,
            "inject within band " + std::to_string(inject_ok) + "/" + std::to_string(inject_cases) +
                ", invert within band " + std::to_string(invert_ok) + "/" + std::to_string(invert_cases)};
}

Outcome overheads() {
    CounterRng rng(707, 0);
    double worst = 0;
    for (int t = 0; t < 100; t++) {
        unsigned n = 1 + static_cast<unsigned>(t % 3);
        auto g = random_real_generator(n, rng, -0.05, 0.1, 6);
        for (double a : {0.5, 1.0, 1.5, 2.0}) {
            double direct = compile(g, MitigationMode::amplify(a)).total_gamma;
            worst = std::max(worst, std::abs(pea_overhead(g, a) - direct) / direct);
        }
        double direct = compile(g, MitigationMode::invert()).total_gamma;
        worst = std::max(worst, std::abs(pec_overhead(g) - direct) / direct);
    }
    bool markov = true;
    for (int t = 0; t < 20; t++) {
        auto g = random_real_generator(2, rng, 0.0, 0.1, 5);
        for (double a : {1.0, 1.5, 2.0}) {
            markov = markov && pea_overhead(g, a) == 1.0;
        }
    }
    return {worst <= 1e-12 && markov, "max relative mismatch " + num(worst) +
                                          ", Markovian PEA overhead exactly 1: " + (markov ? "yes" : "no")};
}

// ---- 8, 10 ---------------------------------------------------------------------

struct LearningRuns {
    std::vector<double> mae_nn, mae_unc, mae_cp;
    int sign_ok = 0;
    bool cptp_all = true;
    bool monotone_all = true;
    double secs = 0;
};

const LearningRuns &learning_runs() {
    static LearningRuns runs = [] {
        LearningRuns r;
        auto t0 = std::chrono::steady_clock::now();
        PauliOp negative = PauliOp::from_label("IZZI");
        for (std::uint64_t seed = 0; seed < 50; seed++) {
            LearningConfig cfg;
            cfg.n = 4;
            cfg.truth = builtin_chain_truth(4);
            cfg.benchmark.shots = 10000;
            cfg.benchmark.seed = seed;
            auto rep = run_learning_experiment(cfg);
            for (const auto &f : rep.fits) {
                if (f.strategy == FitStrategy::NonNegative) {
                    r.mae_nn.push_back(f.holdout_mae);
                } else if (f.strategy == FitStrategy::Unconstrained) {
                    r.mae_unc.push_back(f.holdout_mae);
                    r.sign_ok += f.rates.rate(negative).real() < 0 ? 1 : 0;
                } else {
                    r.mae_cp.push_back(f.holdout_mae);
                }
            }
            r.cptp_all = r.cptp_all && rep.cp_fit && is_cptp(rep.cp_fit->channel, 1e-10);
            if (rep.cp_fit) {
                const auto &obj = rep.cp_fit->objective;
                for (std::size_t i = 1; i < obj.size(); i++) {
                    r.monotone_all = r.monotone_all && obj[i] <= obj[i - 1];
                }
            }
        }
        r.secs = seconds_since(t0);
        return r;
    }();
    return runs;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

Outcome learning_bias() {
    const auto &r = learning_runs();
    double nn = median(r.mae_nn);
    double unc = median(r.mae_unc);
    bool pass = unc < nn && r.sign_ok >= 45 && r.secs < 120;
    return {pass, "median holdout MAE unconstrained " + num(unc) + " vs nonnegative " + num(nn) +
                      ", negative rate sign recovered in " + std::to_string(r.sign_ok) + "/50 seeds, " +
                      num(r.secs) + " s"};
}

Outcome cp_projection() {
    const auto &r = learning_runs();
    return {r.cptp_all && r.monotone_all, std::string("CPTP on all 50 runs: ") + (r.cptp_all ? "yes" : "no") +
                                              ", objective monotone: " + (r.monotone_all ? "yes" : "no") +
                                              ", median MAE cp " + num(median(r.mae_cp))};
}

// ---- 9 -----------------------------------------------------------------------

Outcome nnls_instance() {
    std::vector<PauliOp> xyz{PauliOp::from_label("X"), PauliOp::from_label("Y"), PauliOp::from_label("Z")};
    Eigen::MatrixXd m = design_matrix(xyz, xyz).matrix;
    Eigen::VectorXd b = rate_rhs({0.9, 0.8, 0.9});
    Eigen::VectorXd x = fit_nonnegative(m, b);
    Eigen::VectorXd expected(3);
    expected << 0.054751, 0.0, 0.054751;
    double err = (x - expected).cwiseAbs().maxCoeff();
    Eigen::VectorXd grad = m.transpose() * (m * x - b);
    bool kkt = x.minCoeff() >= 0;
    for (int j = 0; j < 3; j++) {
        kkt = kkt && (x(j) > 0 ? std::abs(grad(j)) <= 1e-10 : grad(j) >= -1e-8);
    }
    auto unc = fit_unconstrained(m, b);
    auto [ch, g] = hadamard_channel(0.05);
    double unc_err = 0;
    for (int j = 0; j < 3; j++) {
        unc_err = std::max(unc_err, std::abs(unc.x(j) - g.rate(xyz[static_cast<std::size_t>(j)]).real()));
    }
    return {err <= 1e-6 && kkt && unc_err <= 1e-10, "nonnegative error " + num(err) + ", KKT " +
                                                        (kkt ? "holds" : "violated") + ", unconstrained error " +
                                                        num(unc_err)};
}

// ---- 11 ----------------------------------------------------------------------

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism() {
    fs::path root = fs::temp_directory_path() / "pauliblad_acceptance_11";
    fs::remove_all(root);
    fs::create_directories(root);
    write_text_file(root / "had.json", channel_to_json(PauliChannel(1, {0.9, 0.05, 0.0, 0.05})).dump());
    PseudoLindblad g(2);
    g.set_rate(PauliOp::from_label("XX"), 0.1);
    g.set_rate(PauliOp::from_label("ZZ"), 0.05);
    g.set_rate(PauliOp::from_label("YY"), -0.003);
    write_text_file(root / "gen.json", generator_to_json(g).dump());

    std::vector<std::vector<std::string>> commands{
        {"analyze", (root / "had.json").string()},
        {"random-scan", "--n", "2,3", "--r", "0.01,0.09", "--trials", "4000"},
        {"random-scan", "--n", "2", "--r", "0.05", "--trials", "2000", "--format", "json"},
        {"gate-scan", "--variant", "hadamard"},
        {"gate-scan", "--variant", "xpi"},
        {"gate-scan", "--variant", "zz-t1", "--dkappa", "0:1:0.05"},
        {"mitigate", "--model", (root / "gen.json").string(), "--mode", "amplify", "--alpha", "1.5", "--shots",
         "20000"},
        {"mitigate", "--model", (root / "gen.json").string(), "--mode", "invert", "--shots", "20000",
         "--compose-exact"},
        {"learn-demo", "--n", "3", "--shots", "4000"},
    };
    int identical = 0;
    std::string first_bad;
    std::ostringstream sink;
    for (std::size_t c = 0; c < commands.size(); c++) {
        fs::path a = root / ("a" + std::to_string(c));
        auto args = commands[c];
        for (const char *s : {"--seed", "11", "--threads", "1", "--out"}) {
            args.emplace_back(s);
        }
        args.push_back(a.string());
        int code = cli::run(args, sink, sink);
        // Re-run from the manifest's recorded flags with a different thread count and output directory.
        auto manifest = read_json_file(a / (commands[c][0] + ".manifest.json"));
        auto replay = manifest["args"].get<std::vector<std::string>>();
        fs::path b = root / ("b" + std::to_string(c));
        for (std::size_t i = 0; i + 1 < replay.size(); i++) {
            if (replay[i] == "--threads") {
                replay[i + 1] = "4";
            } else if (replay[i] == "--out") {
                replay[i + 1] = b.string();
            }
        }
        int code2 = cli::run(replay, sink, sink);
        bool same = code == code2 && (code == 0 || code == 10) && !manifest["outputs"].empty();
        for (const auto &out : manifest["outputs"]) {
            fs::path pa(out.get<std::string>());
            same = same && slurp(pa) == slurp(b / pa.filename()) && !slurp(pa).empty();
        }
        if (same) {
            identical++;
        } else if (first_bad.empty()) {
            first_bad = commands[c][0];
        }
    }
    fs::remove_all(root);
    return {identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) +
                " command runs byte-identical between 1 and 4 threads" +
                (first_bad.empty() ? "" : ", first mismatch: " + first_bad)};
}

}  // namespace

int main(int argc, char **argv) {
    std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
        {1, {"channel/generator round trip", round_trip}},
        {2, {"single-qubit flip family closed form", flip_family}},
        {3, {"probability of a negative rate", prob_negative}},
        {4, {"mean minimum rate and concentration", mean_min_rate}},
        {5, {"gate closed forms vs evolution", gate_models}},
        {6, {"quasi-probability sampler unbiasedness", sampler_unbiased}},
        {7, {"overhead identities", overheads}},
        {8, {"learning bias demonstration", learning_bias}},
        {9, {"NNLS and unconstrained fit instance", nnls_instance}},
        {10, {"CP projection", cp_projection}},
        {11, {"CLI determinism", cli_determinism}},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; i++) {
        selected.push_back(std::stoi(argv[i]));
    }
    if (selected.empty()) {
        for (const auto &[k, v] : criteria) {
            selected.push_back(k);
        }
    }
    bool all = true;
    for (int k : selected) {
        auto it = criteria.find(k);
        if (it == criteria.end()) {
            std::cout << "criterion " << k << ": FAIL unknown criterion\n";
            all = false;
            continue;
        }
        Outcome o;
        try {
            o = it->second.second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " " << it->second.first << ": "
                  << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
