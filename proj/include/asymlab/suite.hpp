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
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymlab/su2.hpp"

namespace asymlab {

struct CheckResult {
    std::string name;
    /// Inputs of the worst case seen.
    std::string inputs;
    /// Worst slack; negative means violated.
    double margin = 0.0;
    bool passed = true;
    int samples = 0;
};

/// Substitutable internals, used to confirm that the suites catch faults.
struct SuiteHooks {
    TwirlNormalization twirl_normalization = nullptr;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] bool all_passed() const { return failures() == 0; }
    [[nodiscard]] nlohmann::json to_json() const;
    /// One line per check: status, name, margin, samples, worst inputs.
    void print(std::ostream &out) const;
};

/// Invariant battery over every module, on seeded random inputs.
[[nodiscard]] SuiteResult run_bound_suite(std::uint64_t seed, const SuiteHooks &hooks = {});

/// Agreement of fast paths with small brute-force references.
[[nodiscard]] SuiteResult run_oracle_suite(std::uint64_t seed, const SuiteHooks &hooks = {});

} // namespace asymlab
