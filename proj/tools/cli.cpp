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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pauliblad/errors.hpp"
#include "pauliblad/generator.hpp"
#include "pauliblad/io.hpp"
#include "pauliblad/learning.hpp"
#include "pauliblad/mitigation.hpp"
#include "pauliblad/parallel.hpp"
#include "pauliblad/random_channels.hpp"
#include "pauliblad/twirled_gates.hpp"

#ifndef PAULIBLAD_VERSION
#define PAULIBLAD_VERSION "0.0.0"
#endif

namespace pauliblad::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string &s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw ParameterError("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw ParameterError("not a number: '" + s + "'");
    }
    return v;
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

struct Globals {
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out = ".";
    std::string format = "csv";
};

unsigned resolve_threads(int flag) {
    if (flag > 0) {
        return static_cast<unsigned>(flag);
    }
    if (const char *env = std::getenv("PAULIBLAD_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return 1;
}

class Manifest {
  public:
    Manifest(std::string command, const std::vector<std::string> &args, const Globals &g, unsigned threads)
        : command_(std::move(command)), start_(utc_now()) {
        j_["format"] = kFormatTag;
        j_["command"] = command_;
        j_["args"] = args;
        j_["seed"] = g.seed;
        j_["threads"] = threads;
        j_["version"] = PAULIBLAD_VERSION;
        j_["outputs"] = json::array();
    }
    void flag(const std::string &name, const json &value) {
        j_["flags"][name] = value;
    }
    void output(const fs::path &p) {
        j_["outputs"].push_back(p.string());
    }
    void write(const fs::path &dir, int exit_code) {
        j_["exit_code"] = exit_code;
        j_["start_time"] = start_;
        j_["end_time"] = utc_now();
        write_text_file(dir / (command_ + ".manifest.json"), dump(j_));
    }

  private:
    std::string command_;
    std::string start_;
    json j_;
};

void emit(const fs::path &path, const std::string &text, Manifest &manifest) {
    write_text_file(path, text);
    manifest.output(path);
}

// ---- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string &file, double class_tol, const Globals &g, Manifest &m, std::ostream &out) {
    ModelFile model = read_model_file(file);
    std::optional<PauliChannel> channel;
    PseudoLindblad gen(1);
    std::string input;
    if (auto *ch = std::get_if<PauliChannel>(&model)) {
        input = "channel";
        channel = *ch;
        gen = channel_to_generator(*ch);
    } else {
        input = "generator";
        gen = std::get<PseudoLindblad>(model);
        if (gen.num_qubits() <= 10) {
            channel = generator_to_channel(gen);
        }
    }
    unsigned n = gen.num_qubits();
    Classification cls = classify(gen, class_tol);

    std::optional<std::pair<PauliOp, complex>> lmin;
    for (const auto &[p, v] : gen.rates()) {
        if (!lmin || v.real() < lmin->second.real()) {
            lmin = std::make_pair(p, v);
        }
    }

    json report;
    report["format"] = kFormatTag;
    report["n"] = n;
    report["input"] = input;
    report["classification"] = std::string(to_string(cls.kind));
    report["witnesses"] = json::array();
    for (const auto &[p, v] : cls.witnesses) {
        report["witnesses"].push_back({{"pauli", p.label()}, {"re", v.real()}, {"im", v.imag()}});
    }
    report["lambda_min"] = lmin ? json{{"pauli", lmin->first.label()}, {"re", lmin->second.real()},
                                       {"im", lmin->second.imag()}}
                                : json{{"pauli", PauliOp::identity(n).label()}, {"re", 0.0}, {"im", 0.0}};
    report["rates"] = generator_to_json(gen)["terms"];
    if (channel) {
        auto f = channel_to_fidelities(*channel);
        double fmin = 1.0;
        std::string fmin_label = PauliOp::identity(n).label();
        for (std::size_t k = 0; k < f.size(); k++) {
            if (f[k].real() < fmin) {
                fmin = f[k].real();
                fmin_label = PauliOp::from_index(k, n).label();
            }
        }
        double pmin = *std::min_element(channel->probs().begin(), channel->probs().end());
        report["cptp"] = is_cptp(*channel);
        report["min_probability"] = pmin;
        report["min_fidelity"] = {{"pauli", fmin_label}, {"value", fmin}};
        if (n <= 3) {
            json fj = json::object();
            for (std::size_t k = 0; k < f.size(); k++) {
                fj[PauliOp::from_index(k, n).label()] = f[k].real();
            }
            report["fidelities"] = fj;
        }
    }

    fs::path dir(g.out);
    emit(dir / "analyze.json", dump(report), m);

    out << "input: " << input << " (" << n << " qubit" << (n == 1 ? "" : "s") << ")\n";
    if (channel) {
        out << "min fidelity: " << report["min_fidelity"]["pauli"].get<std::string>() << " "
            << format_double(report["min_fidelity"]["value"].get<double>()) << "\n";
        out << "CPTP: " << (report["cptp"].get<bool>() ? "yes" : "no") << " (min probability "
            << format_double(report["min_probability"].get<double>()) << ")\n";
    }
    out << "rates:\n";
    for (const auto &[p, v] : gen.rates()) {
        out << "  " << p.label() << " " << format_double(v.real()) << " " << format_double(v.imag()) << "\n";
    }
    out << "lambda_min: " << report["lambda_min"]["pauli"].get<std::string>() << " "
        << format_double(report["lambda_min"]["re"].get<double>()) << "\n";
    out << "classification: " << to_string(cls.kind) << "\n";
    for (const auto &[p, v] : cls.witnesses) {
        out << "  witness " << p.label() << " " << format_double(v.real()) << " " << format_double(v.imag())
            << "\n";
    }
    switch (cls.kind) {
        case MarkovClass::Markovian:
            return kExitOk;
        case MarkovClass::NonMarkovianReal:
            return kExitNonMarkovianReal;
        case MarkovClass::ComplexRates:
            return kExitComplexRates;
    }
    return kExitOk;
}

// ---- random-scan ------------------------------------------------------------

json scan_row_json(const ScanRow &r) {
    return {{"n", r.config.n},
            {"r", r.config.r},
            {"trials", r.config.trials},
            {"sampler", std::string(to_string(r.config.sampler))},
            {"usable", r.usable},
            {"p_neg_mc", r.p_neg_mc},
            {"p_neg_stderr", r.p_neg_stderr},
            {"p_neg_analytic", r.p_neg_analytic},
            {"mean_min_mc", r.mean_min_mc},
            {"mean_min_stderr", r.mean_min_stderr},
            {"mean_min_sd", r.mean_min_sd},
            {"mean_min_analytic", r.mean_min_analytic},
            {"complex_fraction", r.complex_fraction},
            {"flagged", r.flagged},
            {"seed", r.config.seed}};
}

int cmd_random_scan(const std::vector<unsigned> &ns, const std::vector<double> &rs, std::uint64_t trials,
                    const std::string &sampler, const Globals &g, unsigned threads, Manifest &m, std::ostream &out) {
    std::vector<RandomChannelConfig> cfgs;
    Sampler s = sampler_from_string(sampler);
    for (unsigned n : ns) {
        for (double r : rs) {
            cfgs.push_back(RandomChannelConfig{n, r, trials, g.seed, s});
        }
    }
    auto rows = scan(cfgs, threads);
    fs::path dir(g.out);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back(scan_row_json(r));
        }
        emit(dir / "random-scan.json", dump(json{{"format", kFormatTag}, {"rows", arr}}), m);
    } else {
        emit(dir / "random-scan.csv", scan_to_csv(rows), m);
    }
    out << "random-scan: " << rows.size() << " rows\n";
    return kExitOk;
}

// ---- gate-scan --------------------------------------------------------------

struct GateRow {
    std::vector<std::pair<std::string, std::string>> cells;
    json object;
};

void add_cell(GateRow &row, const std::string &name, double v) {
    row.cells.emplace_back(name, format_double(v));
    row.object[name] = v;
}

GateRow gate_row(const GateNoiseSpec &spec) {
    GateRow row;
    row.cells.emplace_back("variant", variant_name(spec));
    row.object["variant"] = variant_name(spec);
    if (auto *h = std::get_if<HadamardOverrotation>(&spec)) {
        add_cell(row, "p", h->p);
    } else if (auto *x = std::get_if<XPiGate>(&spec)) {
        add_cell(row, "dx", x->dx);
        add_cell(row, "dz", x->dz);
    } else if (auto *z = std::get_if<ZZGateT1>(&spec)) {
        add_cell(row, "dkappa", z->dkappa);
    }
    GateModel model = closed_form_model(spec);
    unsigned n = model.fidelities.num_qubits();
    std::size_t d = spectrum_length(n);
    for (std::size_t k = 1; k < d; k++) {
        add_cell(row, "f_" + PauliOp::from_index(k, n).label(), model.fidelities[k].real());
    }
    for (std::size_t k = 1; k < d; k++) {
        complex v = model.generator.rate(PauliOp::from_index(k, n));
        std::string label = PauliOp::from_index(k, n).label();
        add_cell(row, "lambda_re_" + label, v.real());
        add_cell(row, "lambda_im_" + label, v.imag());
    }
    std::string cls(to_string(classify(model.generator).kind));
    row.cells.emplace_back("classification", cls);
    row.object["classification"] = cls;
    return row;
}

int cmd_gate_scan(const std::string &variant, const std::string &p_grid, const std::string &dx_grid,
                  const std::string &dz_grid, const std::string &dk_grid, const Globals &g, unsigned threads,
                  Manifest &m, std::ostream &out) {
    std::vector<GateNoiseSpec> specs;
    if (variant == "hadamard") {
        for (double p : parse_grid(p_grid)) {
            specs.emplace_back(HadamardOverrotation{p});
        }
    } else if (variant == "xpi") {
        for (double dx : parse_grid(dx_grid)) {
            for (double dz : parse_grid(dz_grid)) {
                specs.emplace_back(XPiGate{dx, dz});
            }
        }
    } else if (variant == "zz-t1") {
        for (double dk : parse_grid(dk_grid)) {
            specs.emplace_back(ZZGateT1{dk});
        }
    } else {
        throw ParameterError("unknown variant '" + variant + "' (expected hadamard, xpi or zz-t1)");
    }
    std::vector<GateRow> rows(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) { rows[i] = gate_row(specs[i]); });

    fs::path dir(g.out);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back(r.object);
        }
        emit(dir / "gate-scan.json", dump(json{{"format", kFormatTag}, {"rows", arr}}), m);
    } else {
        std::string text;
        if (!rows.empty()) {
            for (std::size_t c = 0; c < rows[0].cells.size(); c++) {
                text += (c ? "," : "") + rows[0].cells[c].first;
            }
            text += "\n";
        }
        for (const auto &r : rows) {
            for (std::size_t c = 0; c < r.cells.size(); c++) {
                text += (c ? "," : "") + r.cells[c].second;
            }
            text += "\n";
        }
        emit(dir / "gate-scan.csv", text, m);
    }
    out << "gate-scan: " << rows.size() << " rows\n";
    return kExitOk;
}

// ---- mitigate ---------------------------------------------------------------

int cmd_mitigate(const std::string &model_path, const std::string &mode_name, double alpha, std::uint64_t shots,
                 const std::string &observables, bool compose_exact, const Globals &g, unsigned threads, Manifest &m,
                 std::ostream &out) {
    ModelFile model = read_model_file(model_path);
    PseudoLindblad gen = std::holds_alternative<PseudoLindblad>(model)
                             ? std::get<PseudoLindblad>(model)
                             : channel_to_generator(std::get<PauliChannel>(model));
    unsigned n = gen.num_qubits();
    MitigationKind kind = mitigation_kind_from_string(mode_name);
    MitigationMode mode = kind == MitigationKind::Amplify ? MitigationMode::amplify(alpha)
                          : kind == MitigationKind::Invert ? MitigationMode::invert()
                                                           : MitigationMode::inject();
    QuasiProgram prog = compile(gen, mode);

    std::vector<PauliOp> obs;
    if (observables.empty()) {
        for (unsigned q = 0; q < n; q++) {
            for (char c : {'X', 'Y', 'Z'}) {
                obs.push_back(PauliOp::single(n, q, c));
            }
        }
    } else {
        for (const auto &label : split(observables, ',')) {
            PauliOp p = PauliOp::from_label(label);
            if (p.num_qubits() != n) {
                throw DimensionError("observable " + label + " does not match the model qubit count");
            }
            obs.push_back(p);
        }
    }
    std::optional<PauliChannel> exact;
    if (compose_exact) {
        exact = generator_to_channel(gen);
    }
    auto est = estimate_expectations(prog, exact, obs, shots, g.seed, threads);

    json j;
    j["format"] = kFormatTag;
    j["n"] = n;
    j["mode"] = std::string(to_string(kind));
    j["alpha"] = mode.rate_factor();
    j["shots"] = shots;
    j["seed"] = g.seed;
    j["compose_exact"] = compose_exact;
    j["total_gamma"] = prog.total_gamma;
    if (kind == MitigationKind::Invert) {
        j["pec_overhead"] = pec_overhead(gen);
    } else {
        j["pea_overhead"] = pea_overhead(gen, mode.rate_factor());
    }
    j["terms"] = json::array();
    for (const auto &t : prog.terms) {
        j["terms"].push_back({{"pauli", t.pauli.label()},
                              {"lambda_re", t.lambda.real()},
                              {"lambda_im", t.lambda.imag()},
                              {"case", std::string(to_string(t.kind))},
                              {"q", t.q},
                              {"phi", t.phi},
                              {"gamma_re", t.gamma.real()},
                              {"gamma_im", t.gamma.imag()}});
    }
    j["observables"] = json::array();
    for (const auto &e : est) {
        complex target = target_fidelity(gen, mode, e.observable);
        if (exact) {
            target *= model_fidelity(gen, e.observable);
        }
        j["observables"].push_back({{"pauli", e.observable.label()},
                                    {"mean", e.mean},
                                    {"imag_mean", e.imag_mean},
                                    {"stderr", e.stderr},
                                    {"target_re", target.real()},
                                    {"target_im", target.imag()}});
    }
    fs::path dir(g.out);
    emit(dir / "mitigate.json", dump(j), m);
    out << "mitigate: " << est.size() << " observables, total_gamma " << format_double(prog.total_gamma) << "\n";
    return kExitOk;
}

// ---- learn-demo -------------------------------------------------------------

std::vector<QubitPair> parse_pairs(const std::string &s) {
    std::vector<QubitPair> out;
    for (const auto &item : split(s, ',')) {
        auto parts = split(item, '-');
        if (parts.size() != 2) {
            throw ParameterError("connectivity entries look like 0-1, got '" + item + "'");
        }
        out.emplace_back(static_cast<unsigned>(std::stoul(parts[0])), static_cast<unsigned>(std::stoul(parts[1])));
    }
    return out;
}

int cmd_learn_demo(unsigned n, const std::string &chain, const std::string &truth_src, std::uint64_t shots,
                   const std::string &strategies, const std::string &depths, int power, const Globals &g,
                   unsigned threads, Manifest &m, std::ostream &out) {
    LearningConfig cfg;
    cfg.n = n;
    cfg.connectivity = chain.empty() ? chain_connectivity(n) : parse_pairs(chain);
    if (truth_src == "builtin") {
        cfg.truth = builtin_chain_truth(n);
    } else {
        ModelFile model = read_model_file(truth_src);
        cfg.truth = std::holds_alternative<PseudoLindblad>(model)
                        ? std::get<PseudoLindblad>(model)
                        : channel_to_generator(std::get<PauliChannel>(model));
    }
    cfg.strategies.clear();
    for (const auto &s : split(strategies, ',')) {
        cfg.strategies.push_back(fit_strategy_from_string(s));
    }
    cfg.benchmark.depths.clear();
    for (const auto &d : split(depths, ',')) {
        cfg.benchmark.depths.push_back(static_cast<int>(parse_number(d)));
    }
    cfg.benchmark.shots = shots;
    cfg.benchmark.seed = g.seed;
    cfg.benchmark.threads = threads;
    cfg.holdout_power = power;

    LearningReport rep = run_learning_experiment(cfg);

    json j;
    j["format"] = kFormatTag;
    j["n"] = n;
    j["seed"] = g.seed;
    j["shots"] = shots;
    j["truth"] = generator_to_json(cfg.truth);
    j["training_paulis"] = rep.training.size();
    j["holdout_paulis"] = rep.holdout.size();
    j["holdout_power"] = power;
    j["fits"] = json::array();
    for (const auto &f : rep.fits) {
        j["fits"].push_back(fit_result_to_json(f));
    }
    std::vector<const FitResult *> order;
    for (const auto &f : rep.fits) {
        order.push_back(&f);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const FitResult *a, const FitResult *b) { return a->holdout_mae < b->holdout_mae; });
    j["mae_ordering"] = json::array();
    for (const auto *f : order) {
        j["mae_ordering"].push_back(std::string(to_string(f->strategy)));
    }
    if (rep.cp_fit) {
        j["cp_objective"] = rep.cp_fit->objective;
        j["cp_channel_cptp"] = is_cptp(rep.cp_fit->channel);
    }

    fs::path dir(g.out);
    emit(dir / "learn-demo.json", dump(j), m);
    emit(dir / "learn-dataset.json", dump(dataset_to_json(rep.dataset)), m);
    out << "learn-demo: holdout MAE";
    for (const auto *f : order) {
        out << " " << to_string(f->strategy) << "=" << format_double(f->holdout_mae);
    }
    out << "\n";
    return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string &spec) {
    if (spec.find(':') != std::string::npos) {
        auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw ParameterError("grid must look like start:stop:step, got '" + spec + "'");
        }
        double a = parse_number(parts[0]);
        double b = parse_number(parts[1]);
        double step = parse_number(parts[2]);
        if (!(step > 0.0) || b < a) {
            throw ParameterError("grid needs step > 0 and stop >= start");
        }
        auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
        std::vector<double> out;
        for (std::size_t i = 0; i < count; i++) {
            out.push_back(a + static_cast<double>(i) * step);
        }
        return out;
    }
    std::vector<double> out;
    for (const auto &s : split(spec, ',')) {
        out.push_back(parse_number(s));
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pauli channels, pseudo-Lindblad generators and noise mitigation", "pauliblad"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (default: PAULIBLAD_THREADS or 1)");
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
    app.add_option("--format", g.format, "Table format for scans")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string analyze_file;
    double class_tol = 0.0;
    auto *analyze = app.add_subcommand("analyze", "Classify a channel or generator file");
    analyze->add_option("file", analyze_file, "Channel or generator JSON")->required();
    analyze->add_option("--class-tol", class_tol, "Classification tolerance")->capture_default_str();

    std::string ns_flag = "1,2,3,4";
    std::string rs_flag = "0.001,0.003,0.01,0.03,0.09";
    std::uint64_t trials = 20000;
    std::string sampler = "simplex";
    auto *rscan = app.add_subcommand("random-scan", "Monte Carlo statistics of random Pauli channels");
    rscan->add_option("--n", ns_flag, "Qubit counts, comma separated")->capture_default_str();
    rscan->add_option("--r", rs_flag, "Infidelities, list or start:stop:step")->capture_default_str();
    rscan->add_option("--trials", trials, "Draws per configuration")->capture_default_str();
    rscan->add_option("--sampler", sampler, "simplex or uniform")->capture_default_str();

    std::string variant = "hadamard";
    std::string p_grid = "0:0.45:0.05";
    std::string dx_grid = "-0.05:0.05:0.01";
    std::string dz_grid = "-0.05:0.05:0.01";
    std::string dk_grid = "0:1:0.05";
    auto *gscan = app.add_subcommand("gate-scan", "Closed-form twirled gate noise over a parameter grid");
    gscan->add_option("--variant", variant, "hadamard, xpi or zz-t1")->capture_default_str();
    gscan->add_option("--p", p_grid, "Hadamard error probability grid")->capture_default_str();
    gscan->add_option("--dx", dx_grid, "X_pi amplitude error grid")->capture_default_str();
    gscan->add_option("--dz", dz_grid, "X_pi off-axis error grid")->capture_default_str();
    gscan->add_option("--dkappa", dk_grid, "ZZ damping ratio grid")->capture_default_str();

    std::string model_path;
    std::string mode = "inject";
    double alpha = 1.0;
    std::uint64_t shots = 100000;
    std::string observables;
    bool compose_exact = false;
    auto *mit = app.add_subcommand("mitigate", "Quasi-probabilistic injection, inversion or amplification");
    mit->add_option("--model", model_path, "Generator or channel JSON")->required();
    mit->add_option("--mode", mode, "inject, invert or amplify")->capture_default_str();
    mit->add_option("--alpha", alpha, "Amplification factor")->capture_default_str();
    mit->add_option("--shots", shots, "Number of shots")->capture_default_str();
    mit->add_option("--observables", observables, "Pauli labels, comma separated (default: all weight-1)");
    mit->add_flag("--compose-exact", compose_exact, "Follow the program by the model's own channel");

    unsigned learn_n = 4;
    std::string chain;
    std::string truth = "builtin";
    std::uint64_t learn_shots = 10000;
    std::string strategies = "NonNegative,Unconstrained,CpProjected";
    std::string depths = "0,2,4,8";
    int power = 8;
    auto *learn = app.add_subcommand("learn-demo", "Fit local noise models to synthetic benchmark data");
    learn->add_option("--n", learn_n, "Qubits")->capture_default_str();
    learn->add_option("--chain", chain, "Connectivity as pairs 0-1,1-2 (default: nearest-neighbour chain)");
    learn->add_option("--truth", truth, "builtin or a generator/channel JSON")->capture_default_str();
    learn->add_option("--shots", learn_shots, "Shots per setting per depth")->capture_default_str();
    learn->add_option("--strategies", strategies, "Comma separated fit strategies")->capture_default_str();
    learn->add_option("--depths", depths, "Even depths, comma separated")->capture_default_str();
    learn->add_option("--holdout-power", power, "Layer repetitions for holdout comparison")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    unsigned threads = resolve_threads(g.threads);
    auto *sub = app.get_subcommands().front();
    Manifest manifest(sub->get_name(), args, g, threads);
    manifest.flag("out", g.out);
    manifest.flag("format", g.format);
    for (const auto *opt : sub->get_options()) {
        if (opt->get_name() == "--help") {
            continue;
        }
        auto res = opt->results();
        if (opt->get_type_size() == 0) {
            manifest.flag(opt->get_name(), opt->count() > 0);
        } else {
            manifest.flag(opt->get_name(), res.empty() ? json(opt->get_default_str()) : json(res.back()));
        }
    }

    int code = kExitOk;
    try {
        if (sub == analyze) {
            code = cmd_analyze(analyze_file, class_tol, g, manifest, out);
        } else if (sub == rscan) {
            std::vector<unsigned> ns;
            for (const auto &s : split(ns_flag, ',')) {
                double v = parse_number(s);
                if (v < 1 || v != std::floor(v)) {
                    throw ParameterError("qubit counts must be positive integers");
                }
                ns.push_back(static_cast<unsigned>(v));
            }
            code = cmd_random_scan(ns, parse_grid(rs_flag), trials, sampler, g, threads, manifest, out);
        } else if (sub == gscan) {
            code = cmd_gate_scan(variant, p_grid, dx_grid, dz_grid, dk_grid, g, threads, manifest, out);
        } else if (sub == mit) {
            code = cmd_mitigate(model_path, mode, alpha, shots, observables, compose_exact, g, threads, manifest,
                                out);
        } else if (sub == learn) {
            code = cmd_learn_demo(learn_n, chain, truth, learn_shots, strategies, depths, power, g, threads,
                                  manifest, out);
        }
    } catch (const FormatError &e) {
        err << "error: " << e.what() << "\n";
        code = kExitBadInput;
    } catch (const SingularFidelityError &e) {
        err << "error: " << e.what() << "\n";
        code = kExitSingular;
    } catch (const SizeLimitError &e) {
        err << "error: " << e.what() << "\n";
        code = kExitSizeLimit;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        code = kExitBadParameter;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        code = kExitFailure;
    }
    try {
        manifest.write(fs::path(g.out), code);
    } catch (const std::exception &e) {
        err << "error: cannot write manifest: " << e.what() << "\n";
        return code == kExitOk ? kExitFailure : code;
    }
    return code;
}

}  // namespace pauliblad::cli
