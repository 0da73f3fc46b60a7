// Copyright 2026 The asymlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "asymlab/circuit.hpp"
#include "asymlab/state.hpp"

namespace asymlab {

/**
 * JSON codecs. Complex numbers are [re, im] pairs; matrices are flat
 * row-major lists.
 *
 * Circuit: {geometry:{dimension, linear_size}, depth,
 *           layers:[[{sites:[i,j], unitary:[16 entries]}, ...], ...]}
 * The geometry key may be omitted when a geometry is passed explicitly.
 *
 * Channel: {support:[...], kraus:[[entries], ...]}
 * State:   {n_qubits, amplitudes:[...]} or {n_qubits, density_matrix:[...]}
 */
[[nodiscard]] nlohmann::json complex_to_json(cplx z);
[[nodiscard]] cplx complex_from_json(const nlohmann::json &j);

[[nodiscard]] nlohmann::json matrix_to_json(const CMatrix &m);
[[nodiscard]] CMatrix matrix_from_json(const nlohmann::json &j, Eigen::Index rows,
                                       Eigen::Index cols);

[[nodiscard]] nlohmann::json circuit_to_json(const BrickworkCircuit &c);
[[nodiscard]] BrickworkCircuit
circuit_from_json(const nlohmann::json &j,
                  const std::optional<LatticeGeometry> &geometry = std::nullopt);

[[nodiscard]] nlohmann::json channel_to_json(const KrausChannel &ch);
[[nodiscard]] KrausChannel channel_from_json(const nlohmann::json &j);

[[nodiscard]] nlohmann::json state_to_json(const State &state);
[[nodiscard]] State state_from_json(const nlohmann::json &j);

[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const nlohmann::json &j);

} // namespace asymlab
