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

#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymlab/clustering.hpp"
#include "asymlab/config.hpp"
#include "asymlab/report.hpp"
#include "asymlab/suite.hpp"

namespace asymlab {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitResource = 3,
    kExitInvariant = 4,
};

/// Exit code for an exception escaping a command.
[[nodiscard]] int exit_code_for(const std::exception &e) noexcept;

struct SweepPoint {
    int n = 0;
    AsymmetryReport report;
    std::optional<ClusterReport> cluster;
    std::optional<int> spreading_range;
    std::optional<int> depth;

    [[nodiscard]] bool passed() const;
};

struct RunOutcome {
    int exit_code = kExitOk;
    std::vector<SweepPoint> points;
    std::optional<SuiteResult> suite;
    nlohmann::json report;
    std::vector<std::filesystem::path> artifacts;
};

/// Evaluate one sweep point of an asymmetry experiment.
[[nodiscard]] SweepPoint evaluate_point(const ExperimentConfig &config, int n);

/**
 * Runs the experiment and writes <output>results.csv, <output>report.json and
 * (for sweeps) <output>plot.gp. Sweep points are evaluated on a small thread
 * pool; files are written in sweep order. Returns kExitInvariant when any
 * inequality fails.
 */
[[nodiscard]] RunOutcome run(const ExperimentConfig &config, const SuiteHooks &hooks = {});

/// Reference constants for the half-filled rotated Dicke intercept.
struct DickeInterceptConstants {
    double pi_over_4;
    double log_pi_over_4;
    double log_pi_over_8;
};
[[nodiscard]] DickeInterceptConstants dicke_intercept_constants();

/// "%.17g", or empty for a missing value.
[[nodiscard]] std::string format_number(std::optional<double> v);

} // namespace asymlab
