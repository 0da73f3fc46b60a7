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
#include <random>
#include <utility>
#include <vector>

#include "asymlab/lattice.hpp"
#include "asymlab/state.hpp"

namespace asymlab {

/// A one- or two-site unitary. For two sites the 4x4 matrix index is
/// 2 * q(sites[0]) + q(sites[1]).
struct Gate {
    std::vector<int> sites;
    CMatrix unitary;
};

using Layer = std::vector<Gate>;

/**
 * Finite-depth local circuit U = V_D ... V_1 on a periodic lattice.
 *
 * Each layer holds gates on pairwise disjoint sites; two-site gates must
 * act on nearest neighbours of the geometry. depth() counts layers, so the
 * circuit is a locality-preserving operation with range depth().
 */
class BrickworkCircuit {
  public:
    BrickworkCircuit(LatticeGeometry geometry, std::vector<Layer> layers);

    [[nodiscard]] const LatticeGeometry &geometry() const noexcept {
        return geometry_;
    }
    [[nodiscard]] int n_qubits() const noexcept { return geometry_.num_sites(); }
    [[nodiscard]] int depth() const noexcept {
        return static_cast<int>(layers_.size());
    }
    [[nodiscard]] const std::vector<Layer> &layers() const noexcept {
        return layers_;
    }

    /// U^dagger: layers reversed, every gate adjointed.
    [[nodiscard]] BrickworkCircuit inverse() const;

  private:
    LatticeGeometry geometry_;
    std::vector<Layer> layers_;
};

/// Channel rho -> sum_k A_k rho A_k^dagger acting on `support`.
class KrausChannel {
  public:
    KrausChannel(std::vector<int> support, std::vector<CMatrix> kraus_ops);

    [[nodiscard]] const std::vector<int> &support() const noexcept {
        return support_;
    }
    [[nodiscard]] const std::vector<CMatrix> &kraus_ops() const noexcept {
        return kraus_ops_;
    }

  private:
    std::vector<int> support_;
    std::vector<CMatrix> kraus_ops_;
};

[[nodiscard]] StateVector apply_circuit(const StateVector &psi,
                                        const BrickworkCircuit &circuit);
[[nodiscard]] DensityMatrix apply_circuit(const DensityMatrix &rho,
                                          const BrickworkCircuit &circuit);
[[nodiscard]] State apply_circuit(const State &state,
                                  const BrickworkCircuit &circuit);

/// Single gate applied outside any circuit (sites need not be adjacent).
[[nodiscard]] StateVector apply_gate(const StateVector &psi, const Gate &gate);
[[nodiscard]] DensityMatrix apply_gate(const DensityMatrix &rho,
                                       const Gate &gate);

/// Same single-qubit unitary on every site.
[[nodiscard]] StateVector apply_uniform(const StateVector &psi,
                                        const Eigen::Matrix2cd &u);
[[nodiscard]] DensityMatrix apply_uniform(const DensityMatrix &rho,
                                          const Eigen::Matrix2cd &u);
[[nodiscard]] State apply_uniform(const State &state, const Eigen::Matrix2cd &u);

[[nodiscard]] DensityMatrix apply_channel(const DensityMatrix &rho,
                                          const KrausChannel &channel);

/// Haar-random unitary of the given dimension (QR of a Ginibre matrix with
/// the phase correction of the diagonal of R).
[[nodiscard]] CMatrix random_unitary(Eigen::Index dim, std::mt19937_64 &rng);

/// Disjoint nearest-neighbour pairs used by layer `layer_index` of a
/// brickwork circuit. Layers cycle through the axes, alternating even and
/// odd bonds along each axis.
[[nodiscard]] std::vector<std::pair<int, int>>
brickwork_pairs(const LatticeGeometry &geometry, int layer_index);

/// Brickwork circuit of Haar-random two-qubit gates; reproducible per seed.
[[nodiscard]] BrickworkCircuit random_brickwork(const LatticeGeometry &geometry,
                                                int depth, std::uint64_t seed);

namespace gates {
[[nodiscard]] Eigen::Matrix2cd identity();
[[nodiscard]] Eigen::Matrix2cd hadamard();
[[nodiscard]] Eigen::Matrix2cd pauli_x();
[[nodiscard]] Eigen::Matrix2cd pauli_y();
[[nodiscard]] Eigen::Matrix2cd pauli_z();
[[nodiscard]] CMatrix cnot();
[[nodiscard]] CMatrix swap();
} // namespace gates

namespace channels {
/// rho -> (1 - p) rho + p Tr_site(rho) (x) 1/2 on one site.
[[nodiscard]] KrausChannel depolarizing(int site, double p);
/// rho -> (1 - p) rho + p Z rho Z on one site; commutes with the charge.
[[nodiscard]] KrausChannel dephasing(int site, double p);
/// Kills all off-diagonal elements on one site.
[[nodiscard]] KrausChannel full_dephasing(int site);
} // namespace channels

} // namespace asymlab
