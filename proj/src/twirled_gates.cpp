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

#include "pauliblad/twirled_gates.hpp"

#include <cmath>
#include <numbers>

#include "pauliblad/errors.hpp"

namespace pauliblad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

complex clog(double x) {
    return std::log(complex{x, 0.0});
}

DenseOperator single_qubit(char c) {
    return pauli_matrix(PauliOp::from_label(std::string(1, c)));
}

}  // namespace

DenseOperator matrix_exponential(const DenseOperator &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("matrix_exponential needs a square matrix");
    }
    const Eigen::Index d = a.rows();
    double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.25) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
    }
    DenseOperator scaled = a / std::ldexp(1.0, squarings);

    // With ||scaled||_1 <= 1/4, 20 Taylor terms leave a remainder far below 1e-16.
    DenseOperator result = DenseOperator::Identity(d, d);
    DenseOperator term = DenseOperator::Identity(d, d);
    for (int k = 1; k <= 20; k++) {
        term = term * scaled / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; s++) {
        result = result * result;
    }
    return result;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseOperator pauli_matrix(const PauliOp &p) {
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (unsigned q = 0; q < p.num_qubits(); q++) {
        DenseOperator m(2, 2);
        switch (p.at(q)) {
            case 'I':
                m << 1, 0, 0, 1;
                break;
            case 'X':
                m << 0, 1, 1, 0;
                break;
            case 'Y':
                m << 0, -kI, kI, 0;
                break;
            default:
                m << 1, 0, 0, -1;
                break;
        }
        out = kron(out, m);
    }
    return out;
}

DenseOperator unitary_superoperator(const DenseOperator &u) {
    return kron(u.conjugate(), u);
}

DenseOperator lindbladian(const DenseOperator &hamiltonian, std::span<const DenseOperator> jumps) {
    const Eigen::Index d = hamiltonian.rows();
    DenseOperator id = DenseOperator::Identity(d, d);
    DenseOperator out = -kI * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
    for (const auto &l : jumps) {
        DenseOperator ldl = l.adjoint() * l;
        out += kron(l.conjugate(), l) - 0.5 * kron(id, ldl) - 0.5 * kron(ldl.transpose(), id);
    }
    return out;
}

DenseOperator apply_superoperator(const DenseOperator &super, const DenseOperator &rho) {
    const Eigen::Index d = rho.rows();
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
    Eigen::VectorXcd out = super * v;
    return Eigen::Map<const DenseOperator>(out.data(), d, d);
}

SpectrumVector twirl_fidelities(const DenseOperator &noisy_super, const DenseOperator &ideal_unitary, unsigned n,
                                NoisePlacement placement) {
    const Eigen::Index d = Eigen::Index{1} << n;
    if (ideal_unitary.rows() != d || ideal_unitary.cols() != d || noisy_super.rows() != d * d ||
        noisy_super.cols() != d * d) {
        throw DimensionError("twirl_fidelities: operator sizes do not match " + std::to_string(n) + " qubits");
    }
    if ((ideal_unitary.adjoint() * ideal_unitary - DenseOperator::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw ParameterError("twirl_fidelities: ideal gate is not unitary");
    }
    // Trace preservation: vec(I)^T S = vec(I)^T.
    DenseOperator id = DenseOperator::Identity(d, d);
    Eigen::RowVectorXcd vec_id = Eigen::Map<const Eigen::RowVectorXcd>(id.data(), d * d);
    if ((vec_id * noisy_super - vec_id).cwiseAbs().maxCoeff() > 1e-10) {
        throw ParameterError("twirl_fidelities: noisy map is not trace preserving");
    }

    DenseOperator undo = unitary_superoperator(ideal_unitary.adjoint());
    DenseOperator error = placement == NoisePlacement::BeforeGate ? DenseOperator(undo * noisy_super)
                                                                   : DenseOperator(noisy_super * undo);
    SpectrumVector f(n, SpectrumKind::Fidelities);
    for (std::size_t k = 0; k < f.size(); k++) {
        DenseOperator p = pauli_matrix(PauliOp::from_index(k, n));
        complex tr = (p * apply_superoperator(error, p)).trace();
        f[k] = tr.real() / static_cast<double>(d);
    }
    return f;
}

std::string variant_name(const GateNoiseSpec &spec) {
    switch (spec.index()) {
        case 0:
            return "hadamard";
        case 1:
            return "xpi";
        default:
            return "zz-t1";
    }
}

std::pair<PauliChannel, PseudoLindblad> hadamard_channel(double p) {
    if (!(p >= 0.0 && p < 0.5)) {
        throw ParameterError("Hadamard error probability must lie in [0, 1/2)");
    }
    PauliChannel ch(1, {1.0 - 2.0 * p, p, 0.0, p});
    PseudoLindblad g(1);
    complex xz = -0.25 * clog(1.0 - 4.0 * p);
    complex y = -0.5 * clog(1.0 - 2.0 * p) + 0.25 * clog(1.0 - 4.0 * p);
    g.set_rate(PauliOp::from_label("X"), xz);
    g.set_rate(PauliOp::from_label("Y"), y);
    g.set_rate(PauliOp::from_label("Z"), xz);
    return {ch, g};
}

SpectrumVector hadamard_numeric_fidelities(double omega_dt) {
    DenseOperator h = (single_qubit('X') + single_qubit('Z')) / std::sqrt(2.0);
    DenseOperator ideal = matrix_exponential(-kI * h * (kPi / 2));
    DenseOperator noisy = matrix_exponential(-kI * h * (kPi / 2 + omega_dt));
    return twirl_fidelities(unitary_superoperator(noisy), ideal, 1, NoisePlacement::BeforeGate);
}

double xpi_zeta(double dx, double dz) {
    return std::sqrt((dx + 1.0) * (dx + 1.0) + dz * dz);
}

SpectrumVector xpi_fidelities(double dx, double dz) {
    double zeta = xpi_zeta(dx, dz);
    double c = std::cos(kPi * zeta);
    double a2 = (dx + 1.0) * (dx + 1.0);
    double z2 = zeta * zeta;
    SpectrumVector f(1, SpectrumKind::Fidelities);
    f[0] = 1.0;
    f[1] = (a2 + c * dz * dz) / z2;
    f[2] = -c;
    f[3] = -(c * a2 + dz * dz) / z2;
    return f;
}

GateModel xpi_channel(double dx, double dz) {
    SpectrumVector f = xpi_fidelities(dx, dz);
    for (std::size_t k = 1; k < 4; k++) {
        if (std::abs(f[k]) < kDefaultLogTol) {
            auto label = PauliOp::from_index(k, 1).label();
            throw SingularFidelityError("X_pi fidelity of " + label + " vanishes", label);
        }
    }
    double zeta = xpi_zeta(dx, dz);
    double c = std::cos(kPi * zeta);
    double a2 = (dx + 1.0) * (dx + 1.0);
    double z2 = dz * dz;
    complex log_fx = clog(a2 + c * z2);   // zeta^2 f_X
    complex log_fy = clog(-c);            // f_Y
    complex log_fz = clog(-c * a2 - z2);  // zeta^2 f_Z
    complex log_zeta2 = clog(a2 + z2);
    PseudoLindblad g(1);
    g.set_rate(PauliOp::from_label("X"), 0.25 * log_fx - 0.25 * log_fy - 0.25 * log_fz);
    g.set_rate(PauliOp::from_label("Y"), 0.25 * log_fy - 0.25 * log_fz - 0.25 * log_fx + 0.5 * log_zeta2);
    g.set_rate(PauliOp::from_label("Z"), -0.25 * log_fy + 0.25 * log_fz - 0.25 * log_fx);
    return GateModel{f, g};
}

SpectrumVector xpi_numeric_fidelities(double dx, double dz) {
    DenseOperator ideal = matrix_exponential(-kI * (kPi / 2) * single_qubit('X'));
    DenseOperator h = (1.0 + dx) * single_qubit('X') + dz * single_qubit('Z');
    DenseOperator noisy = matrix_exponential(-kI * (kPi / 2) * h);
    return twirl_fidelities(unitary_superoperator(noisy), ideal, 1, NoisePlacement::BeforeGate);
}

SpectrumVector zz_t1_fidelities(double dkappa) {
    if (!(dkappa >= 0.0)) {
        throw ParameterError("dkappa must be nonnegative");
    }
    double d2 = dkappa * dkappa;
    double single = std::exp(-1.5 * kPi * dkappa) * (std::exp(kPi * dkappa) + 1.0) / (2.0 * (d2 + 1.0));
    double flat = std::exp(-kPi * dkappa);
    double mixed = single * (2.0 * d2 + 1.0);
    double zz = std::exp(-2.0 * kPi * dkappa);
    SpectrumVector f(2, SpectrumKind::Fidelities);
    for (std::size_t k = 0; k < 16; k++) {
        std::string l = PauliOp::from_index(k, 2).label();
        double v = 1.0;
        if (l == "II") {
            v = 1.0;
        } else if (l == "IX" || l == "IY" || l == "XI" || l == "YI") {
            v = single;
        } else if (l == "XZ" || l == "YZ" || l == "ZX" || l == "ZY") {
            v = mixed;
        } else if (l == "ZZ") {
            v = zz;
        } else {
            v = flat;
        }
        f[k] = v;
    }
    return f;
}

GateModel zz_t1_channel(double dkappa) {
    SpectrumVector f = zz_t1_fidelities(dkappa);
    double d2 = dkappa * dkappa;
    double l_single = (kPi * dkappa - std::log(2.0 * d2 + 1.0)) / 8.0;
    double l_mixed = (kPi * dkappa + std::log(2.0 * d2 + 1.0)) / 8.0;
    double l_zz = 0.25 * (std::log(4.0) + kPi * dkappa - 2.0 * std::log(std::exp(kPi * dkappa) + 1.0) +
                          2.0 * std::log(d2 + 1.0) - std::log(2.0 * d2 + 1.0));
    PseudoLindblad g(2);
    for (const char *l : {"IX", "IY", "XI", "YI"}) {
        g.set_rate(PauliOp::from_label(l), l_single);
    }
    for (const char *l : {"XZ", "YZ", "ZX", "ZY"}) {
        g.set_rate(PauliOp::from_label(l), l_mixed);
    }
    g.set_rate(PauliOp::from_label("ZZ"), l_zz);
    return GateModel{f, g};
}

ZZSeriesRates zz_t1_series_rates(double dkappa) {
    double d = dkappa;
    double d2 = d * d;
    double d4 = d2 * d2;
    return ZZSeriesRates{
        kPi * d / 8.0 - d2 / 4.0 + d4 / 4.0,
        kPi * d / 8.0 + d2 / 4.0 - d4 / 4.0,
        -kPi * kPi * d2 / 16.0 + (96.0 + kPi * kPi * kPi * kPi) * d4 / 384.0,
    };
}

SpectrumVector zz_t1_numeric_fidelities(double dkappa, NoisePlacement placement) {
    if (!(dkappa >= 0.0)) {
        throw ParameterError("dkappa must be nonnegative");
    }
    const double coupling = 1.0;
    const double kappa = 4.0 * coupling * dkappa;
    const double duration = kPi / (4.0 * coupling);
    DenseOperator zz = pauli_matrix(PauliOp::from_label("ZZ"));
    DenseOperator lower(2, 2);
    lower << 0, 1, 0, 0;
    DenseOperator id2 = DenseOperator::Identity(2, 2);
    std::vector<DenseOperator> jumps = {std::sqrt(kappa) * kron(lower, id2), std::sqrt(kappa) * kron(id2, lower)};
    DenseOperator gen = lindbladian(coupling * zz, jumps);
    DenseOperator noisy = matrix_exponential(gen * duration);
    DenseOperator ideal = matrix_exponential(-kI * coupling * duration * zz);
    return twirl_fidelities(noisy, ideal, 2, placement);
}

GateModel closed_form_model(const GateNoiseSpec &spec) {
    if (const auto *h = std::get_if<HadamardOverrotation>(&spec)) {
        auto [ch, g] = hadamard_channel(h->p);
        return GateModel{channel_to_fidelities(ch), g};
    }
    if (const auto *x = std::get_if<XPiGate>(&spec)) {
        return xpi_channel(x->dx, x->dz);
    }
    return zz_t1_channel(std::get<ZZGateT1>(spec).dkappa);
}

SpectrumVector numeric_fidelities(const GateNoiseSpec &spec) {
    if (const auto *h = std::get_if<HadamardOverrotation>(&spec)) {
        if (!(h->p >= 0.0 && h->p <= 0.5)) {
            throw ParameterError("Hadamard error probability must lie in [0, 1/2]");
        }
        return hadamard_numeric_fidelities(std::asin(std::sqrt(2.0 * h->p)));
    }
    if (const auto *x = std::get_if<XPiGate>(&spec)) {
        return xpi_numeric_fidelities(x->dx, x->dz);
    }
    return zz_t1_numeric_fidelities(std::get<ZZGateT1>(spec).dkappa);
}

}  // namespace pauliblad
