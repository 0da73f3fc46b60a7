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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "asymlab/entropy.hpp"

namespace asymlab {

/// Slack allowed on every non-strict inequality check.
inline constexpr double kBoundSlack = 1e-9;

enum class SymmetryGroup { u1, su2 };

/// One inequality lhs <= rhs (or lhs < rhs when strict).
struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool strict = false;

    [[nodiscard]] double margin() const noexcept { return rhs - lhs; }
    [[nodiscard]] bool passed() const noexcept {
        return strict ? lhs < rhs : lhs <= rhs + kBoundSlack;
    }
};

/**
 * Asymmetry of one state together with every applicable bound.
 *
 * For U(1) the bounds are `shannon` (Delta S <= H(p_q)), `log_n_plus_1`,
 * `massey` (H(p_q) < massey(sigma^2), strict, only when sigma^2 > 0) and
 * `clustering` (when a range is supplied). For SU(2) they are
 * `shannon_rhs` (sector Shannon bound) and `general` (support-dimension
 * bound).
 */
struct AsymmetryReport {
    SymmetryGroup group = SymmetryGroup::u1;
    int n_qubits = 0;
    double delta_s = 0.0;
    /// H(p_q) for U(1); the sector Shannon functional for SU(2).
    double shannon = 0.0;
    std::optional<double> variance;
    std::vector<BoundCheck> bounds;

    [[nodiscard]] const BoundCheck *bound(std::string_view name) const;
    [[nodiscard]] bool all_passed() const;
    /// {delta_s, shannon, bounds:{...}, margins:{...}, passed:{...}}.
    [[nodiscard]] nlohmann::json to_json(LogBase base = LogBase::e) const;
};

} // namespace asymlab
