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

#include "pauliblad/learning.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "pauliblad/errors.hpp"
#include "pauliblad/io.hpp"
#include "pauliblad/parallel.hpp"
#include "pauliblad/rng.hpp"

namespace pauliblad {

namespace {

constexpr char kLetters[] = {'X', 'Y', 'Z'};
constexpr std::uint64_t kSpamStream = std::numeric_limits<std::uint64_t>::max();

// Ascending qubit indices of a support mask, for lexicographic support order.
std::vector<unsigned> support_list(const PauliOp &p) {
    std::vector<unsigned> out;
    for (unsigned q = 0; q < p.num_qubits(); q++) {
        if ((p.support() >> q) & 1u) {
            out.push_back(q);
        }
    }
    return out;
}

bool basis_order(const PauliOp &a, const PauliOp &b) {
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    auto sa = support_list(a);
    auto sb = support_list(b);
    if (sa != sb) {
        return sa < sb;
    }
    return a.label() < b.label();
}

void check_pairs(unsigned n, const std::vector<QubitPair> &pairs) {
    for (const auto &[a, b] : pairs) {
        if (a >= n || b >= n || a == b) {
            throw DimensionError("invalid qubit pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
}

int parity(std::uint64_t v) {
    return std::popcount(v) & 1;
}

}  // namespace

std::vector<QubitPair> chain_connectivity(unsigned n) {
    std::vector<QubitPair> out;
    for (unsigned q = 0; q + 1 < n; q++) {
        out.emplace_back(q, q + 1);
    }
    return out;
}

LocalBasis LocalBasis::build(unsigned n, std::vector<QubitPair> connectivity) {
    if (n == 0 || n > PauliOp::kMaxQubits) {
        throw DimensionError("basis needs 1.." + std::to_string(PauliOp::kMaxQubits) + " qubits");
    }
    check_pairs(n, connectivity);
    std::set<PauliOp, IndexOrder> seen;
    LocalBasis b;
    b.n = n;
    b.connectivity = std::move(connectivity);
    for (unsigned q = 0; q < n; q++) {
        for (char c : kLetters) {
            seen.insert(PauliOp::single(n, q, c));
        }
    }
    for (const auto &[a, c] : b.connectivity) {
        for (char ca : kLetters) {
            for (char cc : kLetters) {
                seen.insert(PauliOp::single(n, a, ca) * PauliOp::single(n, c, cc));
            }
        }
    }
    b.paulis.assign(seen.begin(), seen.end());
    std::sort(b.paulis.begin(), b.paulis.end(), basis_order);
    return b;
}

LocalBasis LocalBasis::chain(unsigned n) {
    return build(n, chain_connectivity(n));
}

bool LocalBasis::contains(const PauliOp &p) const {
    return std::binary_search(paulis.begin(), paulis.end(), p, basis_order);
}

DesignMatrix design_matrix(const std::vector<PauliOp> &rows, const std::vector<PauliOp> &cols) {
    DesignMatrix m{rows, cols, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                     static_cast<Eigen::Index>(cols.size()))};
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = 0; j < cols.size(); j++) {
            m.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = commutes(rows[i], cols[j]) ? 0.0 : 1.0;
        }
    }
    return m;
}

Eigen::VectorXd rate_rhs(const std::vector<double> &fidelities) {
    Eigen::VectorXd b(static_cast<Eigen::Index>(fidelities.size()));
    for (std::size_t i = 0; i < fidelities.size(); i++) {
        if (!(fidelities[i] > 0.0)) {
            throw ParameterError("fidelities must be positive to take logarithms");
        }
        b(static_cast<Eigen::Index>(i)) = -0.5 * std::log(fidelities[i]);
    }
    return b;
}

bool measurable_in(const PauliOp &p, const PauliOp &setting) {
    if (p.num_qubits() != setting.num_qubits()) {
        throw DimensionError("Pauli and setting differ in qubit count");
    }
    std::uint64_t s = p.support();
    return (p.x_bits() & s) == (setting.x_bits() & s) && (p.z_bits() & s) == (setting.z_bits() & s);
}

std::vector<PauliOp> measurement_plan(const LocalBasis &basis) {
    // Greedy: each Pauli joins the first partial setting it agrees with.
    std::vector<PauliOp> partial;
    for (const auto &p : basis.paulis) {
        bool placed = false;
        for (auto &s : partial) {
            if (qubitwise_compatible(p, s)) {
                std::uint64_t sup = p.support();
                s = PauliOp(basis.n, s.x_bits() | (p.x_bits() & sup), s.z_bits() | (p.z_bits() & sup));
                placed = true;
                break;
            }
        }
        if (!placed) {
            partial.push_back(p);
        }
    }
    std::uint64_t all = basis.n == 64 ? ~0ULL : ((1ULL << basis.n) - 1);
    for (auto &s : partial) {
        std::uint64_t free = all & ~s.support();
        s = PauliOp(basis.n, s.x_bits() | free, s.z_bits());
    }
    return partial;
}

std::vector<double> outcome_distribution(const PseudoLindblad &truth, const PauliOp &setting, int depth,
                                         const std::vector<double> &spam) {
    unsigned n = setting.num_qubits();
    if (truth.num_qubits() != n || spam.size() != n) {
        throw DimensionError("truth, setting and SPAM sizes disagree");
    }
    if (n > 20) {
        throw SizeLimitError("outcome distributions are limited to 20 qubits");
    }
    std::size_t size = std::size_t{1} << n;
    std::vector<double> e(size);
    for (std::size_t s = 0; s < size; s++) {
        PauliOp sub(n, setting.x_bits() & s, setting.z_bits() & s);
        double a = 1.0;
        for (unsigned q = 0; q < n; q++) {
            if ((s >> q) & 1u) {
                a *= spam[q];
            }
        }
        e[s] = a * std::pow(model_fidelity(truth, sub).real(), depth);
    }
    // p(b) = 2^-n sum_S (-1)^{b.S} E_S
    for (std::size_t h = 1; h < size; h <<= 1) {
        for (std::size_t i = 0; i < size; i += 2 * h) {
            for (std::size_t j = i; j < i + h; j++) {
                double u = e[j];
                double v = e[j + h];
                e[j] = u + v;
                e[j + h] = u - v;
            }
        }
    }
    for (auto &v : e) {
        v /= static_cast<double>(size);
        if (v < -1e-12) {
            throw ParameterError("truth generator yields a negative outcome probability");
        }
        v = std::max(v, 0.0);
    }
    return e;
}

DecayDataset simulate_benchmark(const PseudoLindblad &truth, const LocalBasis &basis, const BenchmarkConfig &cfg) {
    if (truth.num_qubits() != basis.n) {
        throw DimensionError("truth and basis differ in qubit count");
    }
    if (!truth.all_real()) {
        throw ParameterError("benchmark simulation requires real truth rates");
    }
    if (cfg.depths.empty()) {
        throw ParameterError("at least one depth is required");
    }
    for (int d : cfg.depths) {
        if (d < 0 || d % 2 != 0) {
            throw ParameterError("depths must be nonnegative and even");
        }
    }
    if (!(cfg.spam_low > 0.0 && cfg.spam_low <= cfg.spam_high && cfg.spam_high <= 1.0)) {
        throw ParameterError("SPAM range must satisfy 0 < low <= high <= 1");
    }

    DecayDataset ds;
    ds.n = basis.n;
    ds.connectivity = basis.connectivity;
    ds.depths = cfg.depths;
    ds.seed = cfg.seed;
    CounterRng spam_rng(cfg.seed, kSpamStream);
    for (unsigned q = 0; q < basis.n; q++) {
        ds.spam.push_back(cfg.spam_low + (cfg.spam_high - cfg.spam_low) * spam_rng.uniform());
    }

    auto settings = measurement_plan(basis);
    ds.settings.resize(settings.size());
    const std::size_t nd = cfg.depths.size();
    parallel_for(settings.size(), cfg.threads, [&](std::size_t s) {
        SettingRecord rec;
        rec.setting = settings[s];
        for (std::size_t di = 0; di < nd; di++) {
            auto probs = outcome_distribution(truth, settings[s], cfg.depths[di], ds.spam);
            std::vector<double> cdf(probs.size());
            double acc = 0;
            for (std::size_t k = 0; k < probs.size(); k++) {
                acc += probs[k];
                cdf[k] = acc;
            }
            std::vector<std::uint64_t> counts(probs.size(), 0);
            CounterRng rng(cfg.seed, s * nd + di);
            for (std::uint64_t shot = 0; shot < cfg.shots; shot++) {
                double u = rng.uniform() * acc;
                auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
                std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
                counts[k]++;
            }
            rec.counts.push_back(std::move(counts));
        }
        ds.settings[s] = std::move(rec);
    });
    return ds;
}

std::vector<PauliDecay> marginal_decays(const DecayDataset &ds, const std::vector<PauliOp> &paulis) {
    std::vector<PauliDecay> out;
    for (const auto &p : paulis) {
        if (p.num_qubits() != ds.n) {
            throw DimensionError("Pauli " + p.label() + " does not match dataset qubit count");
        }
        PauliDecay decay{p, ds.depths, std::vector<double>(ds.depths.size(), 0.0),
                         std::vector<std::uint64_t>(ds.depths.size(), 0)};
        bool covered = false;
        std::vector<double> sums(ds.depths.size(), 0.0);
        for (const auto &rec : ds.settings) {
            if (!measurable_in(p, rec.setting)) {
                continue;
            }
            covered = true;
            for (std::size_t di = 0; di < ds.depths.size(); di++) {
                const auto &counts = rec.counts[di];
                for (std::size_t b = 0; b < counts.size(); b++) {
                    double c = static_cast<double>(counts[b]);
                    sums[di] += parity(b & p.support()) ? -c : c;
                    decay.shots[di] += counts[b];
                }
            }
        }
        if (!covered) {
            continue;
        }
        for (std::size_t di = 0; di < ds.depths.size(); di++) {
            decay.means[di] = decay.shots[di] > 0 ? sums[di] / static_cast<double>(decay.shots[di]) : 0.0;
        }
        out.push_back(std::move(decay));
    }
    return out;
}

FidelityEstimate extract_fidelity(const PauliDecay &decay) {
    FidelityEstimate est;
    est.pauli = decay.pauli;
    std::vector<double> x, y, w;
    bool exact = true;
    for (std::size_t i = 0; i < decay.depths.size(); i++) {
        double m = decay.means[i];
        if (!(m > 0.0)) {
            continue;
        }
        x.push_back(decay.depths[i]);
        y.push_back(std::log(m));
        std::uint64_t shots = i < decay.shots.size() ? decay.shots[i] : 0;
        if (shots == 0) {
            w.push_back(1.0);
        } else {
            exact = false;
            double nn = static_cast<double>(shots);
            // Delta-method variance of log(mean) for a +-1 average.
            w.push_back(nn * m * m / std::max(1.0 - m * m, 1.0 / nn));
        }
    }
    std::set<double> distinct(x.begin(), x.end());
    if (distinct.size() < 2) {
        return est;
    }
    double sw = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
    }
    double xbar = sx / sw;
    double ybar = sy / sw;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
        sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
    }
    double slope = sxy / sxx;
    est.fidelity = std::exp(slope);
    est.stderr = exact ? 0.0 : est.fidelity / std::sqrt(sxx);
    est.ok = std::isfinite(est.fidelity);
    return est;
}

Eigen::VectorXd fit_nonnegative(const Eigen::MatrixXd &a, const Eigen::VectorXd &b) {
    if (a.rows() != b.size()) {
        throw DimensionError("design matrix and right-hand side disagree");
    }
    const Eigen::Index n = a.cols();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (n == 0) {
        return x;
    }
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    const double tol = 10.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(a.rows(), n)) *
                       std::max(1.0, a.cwiseAbs().colwise().sum().maxCoeff()) * std::max(1.0, b.cwiseAbs().maxCoeff());

    auto solve_passive = [&]() {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; j++) {
            if (passive[static_cast<std::size_t>(j)]) {
                idx.push_back(j);
            }
        }
        Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); k++) {
            ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
        }
        Eigen::VectorXd zp = ap.completeOrthogonalDecomposition().solve(b);
        Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
        for (std::size_t k = 0; k < idx.size(); k++) {
            z(idx[k]) = zp(static_cast<Eigen::Index>(k));
        }
        return z;
    };

    Eigen::VectorXd w = a.transpose() * (b - a * x);
    const int max_outer = static_cast<int>(3 * n) + 10;
    for (int outer = 0; outer < max_outer; outer++) {
        Eigen::Index best = -1;
        double best_w = tol;
        for (Eigen::Index j = 0; j < n; j++) {
            if (!passive[static_cast<std::size_t>(j)] && w(j) > best_w) {
                best_w = w(j);
                best = j;
            }
        }
        if (best < 0) {
            break;
        }
        passive[static_cast<std::size_t>(best)] = true;
        Eigen::VectorXd z = solve_passive();
        for (int inner = 0; inner <= n; inner++) {
            bool feasible = true;
            double alpha = 1.0;
            for (Eigen::Index j = 0; j < n; j++) {
                if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
                    feasible = false;
                    double denom = x(j) - z(j);
                    if (denom > 0.0) {
                        alpha = std::min(alpha, x(j) / denom);
                    } else {
                        alpha = 0.0;
                    }
                }
            }
            if (feasible) {
                break;
            }
            x += alpha * (z - x);
            for (Eigen::Index j = 0; j < n; j++) {
                if (passive[static_cast<std::size_t>(j)] && x(j) <= tol) {
                    passive[static_cast<std::size_t>(j)] = false;
                    x(j) = 0.0;
                }
            }
            z = solve_passive();
        }
        x = z;
        for (Eigen::Index j = 0; j < n; j++) {
            if (x(j) < 0.0) {
                x(j) = 0.0;
                passive[static_cast<std::size_t>(j)] = false;
            }
        }
        w = a.transpose() * (b - a * x);
    }
    return x;
}

LeastSquaresSolution fit_unconstrained(const Eigen::MatrixXd &a, const Eigen::VectorXd &b) {
    if (a.rows() != b.size()) {
        throw DimensionError("design matrix and right-hand side disagree");
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    return LeastSquaresSolution{cod.solve(b), cod.rank() < a.cols()};
}

std::vector<double> project_to_simplex(const std::vector<double> &v) {
    if (v.empty()) {
        return {};
    }
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0;
    double theta = 0;
    for (std::size_t k = 0; k < u.size(); k++) {
        cumsum += u[k];
        double t = (cumsum - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) {
            theta = t;
        }
    }
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = std::max(v[i] - theta, 0.0);
    }
    return out;
}

CpFit fit_cp(const PseudoLindblad &unconstrained, const CpOptions &options) {
    const unsigned n = unconstrained.num_qubits();
    if (n > 4) {
        throw SizeLimitError("fit_cp optimizes over all 4^n probabilities and is limited to n <= 4");
    }
    const std::size_t d = spectrum_length(n);
    const double dd = static_cast<double>(d);
    std::vector<double> f_ext = generator_fidelities(unconstrained).real_parts();
    std::vector<double> hf = f_ext;
    walsh_hadamard_in_place(std::span<double>(hf));

    auto objective = [&](const std::vector<double> &p) {
        std::vector<double> hp = p;
        walsh_hadamard_in_place(std::span<double>(hp));
        double s = 0;
        for (std::size_t i = 0; i < d; i++) {
            s += (hp[i] - f_ext[i]) * (hp[i] - f_ext[i]);
        }
        return s;
    };

    std::vector<double> p(d, 0.0);
    p[0] = 1.0;
    CpFit fit{PseudoLindblad(n), PauliChannel::identity(n), {objective(p)}, 0};
    while (fit.iterations < options.max_iterations) {
        // grad = 2 (D p - H f); step 1/L with L = 2D.
        std::vector<double> step(d);
        for (std::size_t i = 0; i < d; i++) {
            step[i] = p[i] - (dd * p[i] - hf[i]) / dd;
        }
        std::vector<double> next = project_to_simplex(step);
        double prev = fit.objective.back();
        double cur = objective(next);
        fit.iterations++;
        if (cur > prev) {
            break;
        }
        p = std::move(next);
        fit.objective.push_back(cur);
        if (prev - cur <= options.relative_tolerance * prev) {
            break;
        }
    }
    double total = 0;
    for (double v : p) {
        total += v;
    }
    for (auto &v : p) {
        v /= total;
    }
    fit.channel = PauliChannel(n, p);
    fit.rates = channel_to_generator(fit.channel);
    return fit;
}

std::string_view to_string(FitStrategy s) {
    switch (s) {
        case FitStrategy::NonNegative:
            return "NonNegative";
        case FitStrategy::Unconstrained:
            return "Unconstrained";
        case FitStrategy::CpProjected:
            return "CpProjected";
    }
    return "Unconstrained";
}

FitStrategy fit_strategy_from_string(std::string_view s) {
    if (s == "NonNegative" || s == "nonnegative" || s == "nnls") {
        return FitStrategy::NonNegative;
    }
    if (s == "Unconstrained" || s == "unconstrained") {
        return FitStrategy::Unconstrained;
    }
    if (s == "CpProjected" || s == "cp" || s == "cpprojected") {
        return FitStrategy::CpProjected;
    }
    throw ParameterError("unknown fit strategy '" + std::string(s) + "'");
}

PseudoLindblad rates_to_generator(unsigned n, const std::vector<PauliOp> &model, const Eigen::VectorXd &x) {
    if (static_cast<Eigen::Index>(model.size()) != x.size()) {
        throw DimensionError("rate vector and model terms disagree");
    }
    PseudoLindblad g(n);
    for (std::size_t k = 0; k < model.size(); k++) {
        g.add_rate(model[k], complex{x(static_cast<Eigen::Index>(k)), 0.0});
    }
    return g;
}

double holdout_validate(const PseudoLindblad &model, const std::vector<std::pair<PauliOp, double>> &holdout,
                        int power) {
    if (holdout.empty()) {
        return 0.0;
    }
    double s = 0;
    for (const auto &[p, value] : holdout) {
        double f = model_fidelity(model, p).real();
        s += std::abs(std::pow(f, power) - value);
    }
    return s / static_cast<double>(holdout.size());
}

double training_residual(const PseudoLindblad &model, const std::vector<FidelityEstimate> &training) {
    double s = 0;
    for (const auto &e : training) {
        double fit = -std::log(model_fidelity(model, e.pauli)).real() / 2.0;
        double obs = -std::log(e.fidelity) / 2.0;
        s += (fit - obs) * (fit - obs);
    }
    return std::sqrt(s);
}

LearningReport run_learning_experiment(const LearningConfig &cfg) {
    auto connectivity = cfg.connectivity.empty() ? chain_connectivity(cfg.n) : cfg.connectivity;
    LocalBasis basis = LocalBasis::build(cfg.n, connectivity);
    if (cfg.truth.num_qubits() != cfg.n) {
        throw DimensionError("truth generator does not match n");
    }
    LearningReport report;
    report.dataset = simulate_benchmark(cfg.truth, basis, cfg.benchmark);

    for (const auto &decay : marginal_decays(report.dataset, basis.paulis)) {
        auto est = extract_fidelity(decay);
        if (est.ok) {
            report.training.push_back(est);
        }
    }

    std::set<PauliOp, IndexOrder> nonlocal;
    for (const auto &rec : report.dataset.settings) {
        std::uint64_t sup = rec.setting.support();
        for (std::uint64_t s = sup; s != 0; s = (s - 1) & sup) {
            PauliOp sub(cfg.n, rec.setting.x_bits() & s, rec.setting.z_bits() & s);
            if (!basis.contains(sub)) {
                nonlocal.insert(sub);
            }
        }
    }
    std::vector<PauliOp> holdout_paulis(nonlocal.begin(), nonlocal.end());
    for (const auto &decay : marginal_decays(report.dataset, holdout_paulis)) {
        auto est = extract_fidelity(decay);
        if (est.ok) {
            report.holdout.emplace_back(est.pauli, std::pow(est.fidelity, cfg.holdout_power));
        }
    }

    std::vector<PauliOp> rows;
    std::vector<double> fids;
    for (const auto &e : report.training) {
        rows.push_back(e.pauli);
        fids.push_back(e.fidelity);
    }
    const auto &model = cfg.model_terms.empty() ? basis.paulis : cfg.model_terms;
    DesignMatrix m = design_matrix(rows, model);
    Eigen::VectorXd rhs = rate_rhs(fids);

    std::optional<LeastSquaresSolution> unc;
    auto unconstrained = [&]() -> const LeastSquaresSolution & {
        if (!unc) {
            unc = fit_unconstrained(m.matrix, rhs);
        }
        return *unc;
    };

    for (FitStrategy strategy : cfg.strategies) {
        FitResult fit;
        fit.strategy = strategy;
        switch (strategy) {
            case FitStrategy::NonNegative:
                fit.rates = rates_to_generator(cfg.n, model, fit_nonnegative(m.matrix, rhs));
                break;
            case FitStrategy::Unconstrained:
                fit.rates = rates_to_generator(cfg.n, model, unconstrained().x);
                fit.rank_deficient = unconstrained().rank_deficient;
                break;
            case FitStrategy::CpProjected: {
                auto g = rates_to_generator(cfg.n, model, unconstrained().x);
                report.cp_fit = fit_cp(g);
                fit.rates = report.cp_fit->rates;
                fit.rank_deficient = unconstrained().rank_deficient;
                break;
            }
        }
        fit.residual = training_residual(fit.rates, report.training);
        fit.holdout_mae = holdout_validate(fit.rates, report.holdout, cfg.holdout_power);
        report.fits.push_back(std::move(fit));
    }
    return report;
}

PseudoLindblad builtin_chain_truth(unsigned n) {
    if (n == 0) {
        throw DimensionError("chain truth needs at least one qubit");
    }
    PseudoLindblad g(n);
    unsigned mid = n >= 2 ? n / 2 - 1 : 0;
    auto central = [&](unsigned q) { return n >= 2 && (q == mid || q == mid + 1); };
    for (unsigned q = 0; q < n; q++) {
        if (central(q)) {
            g.set_rate(PauliOp::single(n, q, 'X'), 0.020);
            g.set_rate(PauliOp::single(n, q, 'Y'), 0.020);
            g.set_rate(PauliOp::single(n, q, 'Z'), 0.050);
        } else {
            g.set_rate(PauliOp::single(n, q, 'X'), q % 2 == 0 ? 0.012 : 0.014);
            g.set_rate(PauliOp::single(n, q, 'Y'), q % 2 == 0 ? 0.010 : 0.011);
            g.set_rate(PauliOp::single(n, q, 'Z'), q % 2 == 0 ? 0.030 : 0.035);
        }
    }
    auto pair = [&](unsigned a, unsigned b, char ca, char cb) {
        return PauliOp::single(n, a, ca) * PauliOp::single(n, b, cb);
    };
    for (const auto &[a, b] : chain_connectivity(n)) {
        g.set_rate(pair(a, b, 'X', 'X'), 0.010);
        g.set_rate(pair(a, b, 'Y', 'Y'), 0.010);
        g.set_rate(pair(a, b, 'Z', 'Z'), 0.015);
        g.set_rate(pair(a, b, 'X', 'Z'), 0.030);
        g.set_rate(pair(a, b, 'Z', 'X'), 0.030);
    }
    if (n >= 2) {
        g.set_rate(pair(mid, mid + 1, 'Z', 'Z'), -0.004);
    }
    return g;
}

nlohmann::json dataset_to_json(const DecayDataset &ds) {
    nlohmann::json j;
    j["format"] = kFormatTag;
    j["n"] = ds.n;
    j["connectivity"] = nlohmann::json::array();
    for (const auto &[a, b] : ds.connectivity) {
        j["connectivity"].push_back({a, b});
    }
    j["depths"] = ds.depths;
    j["bases"] = nlohmann::json::array();
    for (const auto &rec : ds.settings) {
        j["bases"].push_back({{"label", rec.setting.label()}, {"counts", rec.counts}});
    }
    j["seed"] = ds.seed;
    return j;
}

DecayDataset dataset_from_json(const nlohmann::json &j) {
    try {
        if (j.at("format").get<std::string>() != kFormatTag) {
            throw FormatError("unsupported dataset format tag");
        }
        DecayDataset ds;
        ds.n = j.at("n").get<unsigned>();
        for (const auto &pr : j.at("connectivity")) {
            ds.connectivity.emplace_back(pr.at(0).get<unsigned>(), pr.at(1).get<unsigned>());
        }
        ds.depths = j.at("depths").get<std::vector<int>>();
        ds.seed = j.at("seed").get<std::uint64_t>();
        for (const auto &b : j.at("bases")) {
            SettingRecord rec;
            rec.setting = PauliOp::from_label(b.at("label").get<std::string>());
            if (rec.setting.num_qubits() != ds.n) {
                throw FormatError("basis label length does not match n");
            }
            rec.counts = b.at("counts").get<std::vector<std::vector<std::uint64_t>>>();
            if (rec.counts.size() != ds.depths.size()) {
                throw FormatError("counts do not match depths");
            }
            for (const auto &c : rec.counts) {
                if (c.size() != (std::size_t{1} << ds.n)) {
                    throw FormatError("count vector has the wrong length");
                }
            }
            ds.settings.push_back(std::move(rec));
        }
        return ds;
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("malformed dataset: ") + e.what());
    }
}

nlohmann::json fit_result_to_json(const FitResult &fit) {
    return {{"strategy", std::string(to_string(fit.strategy))},
            {"rates", generator_to_json(fit.rates)},
            {"residual", fit.residual},
            {"holdout_mae", fit.holdout_mae},
            {"rank_deficient", fit.rank_deficient}};
}

}  // namespace pauliblad
