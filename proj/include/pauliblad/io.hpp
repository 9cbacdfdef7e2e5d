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

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"
#include "pauliblad/generator.hpp"

namespace pauliblad {

inline constexpr const char *kFormatTag = "pauliblad/v1";

// Generator: {"format", "n", "terms": [{"pauli", "re", "im"}]}
// Channel:   {"format", "n", "probs": [...]} in dense index order.
nlohmann::json generator_to_json(const PseudoLindblad &g);
PseudoLindblad generator_from_json(const nlohmann::json &j);
nlohmann::json channel_to_json(const PauliChannel &ch);
PauliChannel channel_from_json(const nlohmann::json &j);

using ModelFile = std::variant<PauliChannel, PseudoLindblad>;

/// Reads either file kind, dispatching on "probs" versus "terms". Throws FormatError.
ModelFile read_model_file(const std::filesystem::path &path);
nlohmann::json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

/// General notation with 17 significant digits (byte-stable, round-trips).
std::string format_double(double v);

}  // namespace pauliblad
