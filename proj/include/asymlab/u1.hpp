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

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "asymlab/lattice.hpp"
#include "asymlab/report.hpp"
#include "asymlab/state.hpp"

namespace asymlab {

/**
 * Probability vector p_q over U(1) charges q = 0..N with cached moments.
 *
 * Entries in [-1e-12, 0) are clamped to zero; the total must be 1 within
 * 1e-10.
 */
class ChargeDistribution {
  public:
    explicit ChargeDistribution(std::vector<double> probs);

    [[nodiscard]] const std::vector<double> &probs() const noexcept { return probs_; }
    [[nodiscard]] int max_charge() const noexcept {
        return static_cast<int>(probs_.size()) - 1;
    }
    [[nodiscard]] double operator[](int q) const {
        return probs_.at(static_cast<std::size_t>(q));
    }
    [[nodiscard]] double mean() const noexcept { return mean_; }
    [[nodiscard]] double variance() const noexcept { return variance_; }

  private:
    std::vector<double> probs_;
    double mean_ = 0.0;
    double variance_ = 0.0;
};

/// Charge of a computational basis index: number of sites in |0>.
[[nodiscard]] int basis_charge(std::uint64_t index, int n_qubits);

/// p_q = Tr[rho P_q] with Q = sum_j (sigma^z_j + 1)/2, so |0> carries charge 1.
[[nodiscard]] ChargeDistribution charge_distribution(const State &state);

[[nodiscard]] double shannon_entropy(const ChargeDistribution &d);

/// sum_q P_q rho P_q: removes all coherences between charge sectors.
[[nodiscard]] DensityMatrix u1_twirl(const DensityMatrix &rho);

/// S_V(u1_twirl(rho)) computed sector by sector.
[[nodiscard]] double u1_twirled_entropy(const DensityMatrix &rho);

/// (1/2) ln[2 pi e (sigma^2 + 1/12)]; requires sigma^2 > 0.
[[nodiscard]] double massey_bound(double variance);

/// 2 z_Lambda N.
[[nodiscard]] double clustering_variance_bound(const LatticeGeometry &g, int range);

/// (1/2) ln[2 pi e (2 z_Lambda N + 1/12)].
[[nodiscard]] double clustering_asymmetry_bound(const LatticeGeometry &g, int range);

/// Geometry plus clustering range for the clustering bound.
struct ClusteringHypothesis {
    LatticeGeometry geometry;
    int range = 0;
};

/**
 * Delta S^{U(1)} = S_V(G[rho]) - S_V(rho) with its bounds. Pure inputs use
 * the exact shortcut Delta S = H(p_q); mixed inputs use sector projection
 * and dense eigen-decomposition.
 */
[[nodiscard]] AsymmetryReport
u1_asymmetry(const State &state,
             const std::optional<ClusteringHypothesis> &hypothesis = std::nullopt);

/// Report for a pure state known only through its charge distribution
/// (closed-form paths that never build a statevector).
[[nodiscard]] AsymmetryReport
u1_report_from_distribution(const ChargeDistribution &d,
                            const std::optional<ClusteringHypothesis> &hypothesis =
                                std::nullopt);

/// <e^{i alpha Q}> = sum_q p_q e^{i alpha q}.
[[nodiscard]] std::complex<double> generating_function(const ChargeDistribution &d,
                                                       double alpha);
[[nodiscard]] std::complex<double> generating_function(const State &state,
                                                       double alpha);

/// Recover p_0..p_N from a generating function by the discrete Fourier
/// transform over alpha_k = 2 pi k / (N + 1).
[[nodiscard]] std::vector<double>
invert_generating_function(const std::function<std::complex<double>(double)> &gf,
                           int max_charge);

} // namespace asymlab
