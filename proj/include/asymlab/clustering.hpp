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

#include <ostream>
#include <vector>

#include <json.hpp>

#include "asymlab/circuit.hpp"
#include "asymlab/lattice.hpp"
#include "asymlab/report.hpp"
#include "asymlab/state.hpp"

namespace asymlab {

inline constexpr double kClusterTolerance = 1e-10;

/// <O_i O_j> - <O_i><O_j> for single-site observables on distinct sites.
[[nodiscard]] double connected_correlator(const State &state, int i,
                                          const Eigen::Matrix2cd &o_i, int j,
                                          const Eigen::Matrix2cd &o_j);

struct PairCorrelation {
    int i = 0;
    int j = 0;
    int distance = 0;
    /// <q_i q_j>_c
    double charge = 0.0;
    /// max over sigma^a_i sigma^b_j, a, b in {x, y, z}, of |<.>_c|
    double max_pauli = 0.0;
};

struct ClusterReport {
    int range = 0;
    double tolerance = kClusterTolerance;
    double max_violation = 0.0;
    int effective_range = 0;
    std::vector<PairCorrelation> pairs;

    [[nodiscard]] bool clusters() const noexcept { return max_violation <= tolerance; }
    [[nodiscard]] nlohmann::json to_json() const;
    /// i,j,distance,charge_connected,max_pauli_connected
    void write_csv(std::ostream &out) const;
};

/**
 * Scans every site pair over the full single-site Pauli basis.
 * max_violation is taken over pairs with distance > range; effective_range
 * is the largest distance at which some connected correlator exceeds tol.
 */
[[nodiscard]] ClusterReport verify_cluster_property(const State &state, int range,
                                                    const LatticeGeometry &g,
                                                    double tol = kClusterTolerance);

/// Largest support size tracked during Heisenberg evolution.
inline constexpr int kMaxSpreadingSupport = 12;

/**
 * Largest distance from j at which U^dagger sigma^a_j U acts non-trivially,
 * maximized over j and a. A site counts as trivial when the evolved operator
 * differs from its partial-trace projection by at most 1e-12 in normalized
 * Frobenius norm.
 */
[[nodiscard]] int operator_spreading_range(const BrickworkCircuit &c);

[[nodiscard]] BoundCheck variance_bound_check(const State &state, int range,
                                              const LatticeGeometry &g);

} // namespace asymlab
