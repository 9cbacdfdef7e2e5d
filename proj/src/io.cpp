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

#include "pauliblad/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pauliblad/errors.hpp"

namespace pauliblad {

namespace {

void check_format(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw FormatError("expected a JSON object");
    }
    if (!j.contains("format") || j["format"] != kFormatTag) {
        throw FormatError(std::string("missing or unsupported \"format\" (expected \"") + kFormatTag + "\")");
    }
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0) {
        throw FormatError("missing or invalid qubit count \"n\"");
    }
}

}  // namespace

nlohmann::json generator_to_json(const PseudoLindblad &g) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[p, v] : g.rates()) {
        terms.push_back({{"pauli", p.label()}, {"re", v.real()}, {"im", v.imag()}});
    }
    return {{"format", kFormatTag}, {"n", g.num_qubits()}, {"terms", terms}};
}

PseudoLindblad generator_from_json(const nlohmann::json &j) {
    check_format(j);
    unsigned n = j["n"].get<unsigned>();
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw FormatError("generator file needs a \"terms\" array");
    }
    PseudoLindblad g(n);
    try {
        for (const auto &t : j["terms"]) {
            PauliOp p = PauliOp::from_label(t.at("pauli").get<std::string>());
            if (p.num_qubits() != n) {
                throw FormatError("term " + p.label() + " does not have " + std::to_string(n) + " qubits");
            }
            double re = t.at("re").get<double>();
            double im = t.contains("im") ? t["im"].get<double>() : 0.0;
            g.add_rate(p, complex{re, im});
        }
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("malformed generator term: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    return g;
}

nlohmann::json channel_to_json(const PauliChannel &ch) {
    return {{"format", kFormatTag},
            {"n", ch.num_qubits()},
            {"probs", std::vector<double>(ch.probs().begin(), ch.probs().end())}};
}

PauliChannel channel_from_json(const nlohmann::json &j) {
    check_format(j);
    if (!j.contains("probs") || !j["probs"].is_array()) {
        throw FormatError("channel file needs a \"probs\" array");
    }
    try {
        return PauliChannel(j["n"].get<unsigned>(), j["probs"].get<std::vector<double>>());
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("malformed channel probabilities: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

nlohmann::json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

ModelFile read_model_file(const std::filesystem::path &path) {
    nlohmann::json j = read_json_file(path);
    if (j.is_object() && j.contains("probs")) {
        return channel_from_json(j);
    }
    if (j.is_object() && j.contains("terms")) {
        return generator_from_json(j);
    }
    throw FormatError(path.string() + ": neither a channel (\"probs\") nor a generator (\"terms\") file");
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace pauliblad
