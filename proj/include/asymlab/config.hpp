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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "asymlab/entropy.hpp"
#include "asymlab/lattice.hpp"
#include "asymlab/state.hpp"

namespace asymlab {

enum class ExperimentKind {
    u1_asymmetry,
    su2_asymmetry,
    dicke_sweep,
    kink_sweep,
    product_sweep,
    circuit_clustering,
    bound_suite
};

[[nodiscard]] std::string to_string(ExperimentKind kind);

namespace spec {

/// Every site in the same local state, or one local state per site.
struct Product {
    std::vector<LocalState> locals;
};
struct Circuit {
    std::filesystem::path file; // empty: random brickwork of `depth`
    int depth = 0;
    std::uint64_t seed = 0;
    Product input;
};
struct Dicke {
    std::optional<int> k;
    std::optional<double> ratio;
    bool rotated = true;
};
struct Kink {};
struct Random {
    std::uint64_t seed = 0;
    bool mixed = false;
};
struct File {
    std::filesystem::path path;
};

} // namespace spec

using StateSpec =
    std::variant<spec::Product, spec::Circuit, spec::Dicke, spec::Kink, spec::Random, spec::File>;

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::u1_asymmetry;
    std::optional<LatticeGeometry> geometry;
    std::optional<StateSpec> state;
    std::vector<int> sweep;
    std::uint64_t seed = 0;
    std::filesystem::path output;
    LogBase log_base = LogBase::e;
    std::optional<int> range;
    double tolerance = 1e-10;
    /// Canonical JSON the config was parsed from.
    nlohmann::json source;

    /// N values the experiment evaluates, after applying defaults.
    [[nodiscard]] std::vector<int> sizes() const;
    /// FNV-1a 64-bit hash of the canonical JSON, as 16 hex digits.
    [[nodiscard]] std::string hash() const;
};

/**
 * Parses and validates a config. Unknown keys are errors, as are N values
 * outside the envelope of the chosen evaluation path. Relative file paths
 * are resolved against `base_dir`.
 */
[[nodiscard]] ExperimentConfig parse_config(const nlohmann::json &j,
                                            const std::filesystem::path &base_dir = {});
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);

[[nodiscard]] StateSpec parse_state_spec(const nlohmann::json &j,
                                         const std::filesystem::path &base_dir = {});

/// Product-state shorthand for the CLI: "plus", "zero", "one", "x=0.3",
/// or a JSON state spec.
[[nodiscard]] spec::Product parse_product_shorthand(const std::string &text);

/// Expand a product spec to N local states.
[[nodiscard]] std::vector<LocalState> expand_locals(const spec::Product &p, int n_qubits);

/// Largest N the closed-form sweeps accept.
inline constexpr int kMaxClosedFormN = 10'000'000;

[[nodiscard]] std::uint64_t fnv1a(const std::string &text);

} // namespace asymlab
