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
#include <vector>

#include "asymlab/lattice.hpp"
#include "asymlab/report.hpp"
#include "asymlab/schur.hpp"
#include "asymlab/state.hpp"

namespace asymlab {

/// Joint (s, m) weights. p_sm[s][m + s] for s = 0..N/2.
struct SectorTable {
    int n_qubits = 0;
    std::vector<double> p_s;
    std::vector<std::vector<double>> p_sm;
    std::vector<std::int64_t> multiplicities;

    [[nodiscard]] double p(int s, int m) const {
        return p_sm.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(m + s));
    }
};

[[nodiscard]] SectorTable sector_distribution(const State &state, const SchurBasis &basis);

/// Per-sector factor applied to the m-summed block; the correct choice is 1/(2s+1).
using TwirlNormalization = double (*)(int twice_s);

/**
 * SU(2) twirl of an arbitrary square matrix, without validation. Exposed so
 * invariant suites can exercise a deliberately broken normalization.
 */
[[nodiscard]] CMatrix su2_twirl_matrix(const CMatrix &rho, const SchurBasis &basis,
                                       TwirlNormalization normalization = nullptr);

[[nodiscard]] DensityMatrix su2_twirl(const DensityMatrix &rho, const SchurBasis &basis);

/// S_V of the twirled state, computed sector by sector.
[[nodiscard]] double su2_twirled_entropy(const State &state, const SchurBasis &basis);

/**
 * Delta S^{SU(2)} with bounds `shannon_rhs` and `general`. The `shannon`
 * field holds the sector Shannon functional.
 */
[[nodiscard]] AsymmetryReport su2_asymmetry(const State &state, const SchurBasis &basis);

struct GaugeRotation {
    State state;
    Eigen::Matrix2cd u;
};

/// Rotate u^{(x)N} so the magnetization points along +z.
[[nodiscard]] GaugeRotation zero_transverse_rotation(const State &state);

/// (<S^x>, <S^y>, <S^z>).
[[nodiscard]] Eigen::Vector3d magnetization(const State &state);

/// Sum_s p_s ln(2s+1) - Sum_{s,m} p_sm ln p_sm.
[[nodiscard]] double su2_shannon_rhs(const SectorTable &t);

/// ln Sum_s (2s+1) min(n_s, 2s+1).
[[nodiscard]] double su2_general_bound(int n_qubits);

[[nodiscard]] double casimir_constant(const LatticeGeometry &g, int range);

struct CasimirReport {
    double casimir_lhs = 0.0;   // <S^2> - <(S^z)^2>
    double precursor_lhs = 0.0; // <S^2> - sum_alpha <S^alpha>^2
    double bound = 0.0;         // c(Lambda) N
    double transverse = 0.0;

    [[nodiscard]] bool casimir_passed() const noexcept {
        return casimir_lhs <= bound + kBoundSlack;
    }
    [[nodiscard]] bool precursor_passed() const noexcept {
        return precursor_lhs <= bound + kBoundSlack;
    }
    [[nodiscard]] bool passed() const noexcept {
        return casimir_passed() && precursor_passed();
    }
};

/// Requires a gauge-fixed state: transverse magnetization <= 1e-6.
[[nodiscard]] CasimirReport casimir_constraint_check(const State &state, int range,
                                                     const LatticeGeometry &g);

} // namespace asymlab
