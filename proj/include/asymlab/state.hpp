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
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace asymlab {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerance on sum |amplitude|^2 == 1 for pure states.
inline constexpr double kNormTolerance = 1e-12;
/// Tolerance on Hermiticity and trace for density matrices.
inline constexpr double kDensityTolerance = 1e-10;
/// Eigenvalues in [-kEigenFloor, 0) are clamped to zero.
inline constexpr double kEigenFloor = 1e-10;

struct CapacityLimits {
    int max_statevector_qubits = 24;
    int max_density_qubits = 12;
};

/// Current limits. ASYMLAB_MAX_QUBITS, when set to a positive integer,
/// overrides both caps.
[[nodiscard]] CapacityLimits capacity_limits();

/// Throws ResourceError naming the cap when n exceeds it.
void require_statevector_capacity(int n_qubits, const char *what);
void require_density_capacity(int n_qubits, const char *what);

/**
 * Pure state of N qubits, 2^N amplitudes.
 *
 * Basis ordering: site 0 is the most significant bit of the amplitude
 * index, so |q_0 q_1 ... q_{N-1}> sits at index sum_j q_j 2^{N-1-j}.
 */
class StateVector {
  public:
    StateVector(int n_qubits, CVector amplitudes);

    static StateVector basis_state(int n_qubits, std::uint64_t index);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] const CVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] cplx operator[](Eigen::Index i) const { return amplitudes_[i]; }

  private:
    int n_qubits_;
    CVector amplitudes_;
};

/// Mixed state of N qubits; same basis ordering as StateVector.
class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, CMatrix matrix);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept {
        return matrix_.rows();
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }

    [[nodiscard]] double purity() const;

  private:
    int n_qubits_;
    CMatrix matrix_;
};

using State = std::variant<StateVector, DensityMatrix>;

[[nodiscard]] int num_qubits(const State &state);
[[nodiscard]] bool is_pure_representation(const State &state);
[[nodiscard]] DensityMatrix to_density_matrix(const StateVector &psi);
[[nodiscard]] DensityMatrix to_density_matrix(const State &state);

/// Single-qubit input to product_state: a normalized ket or a 2x2 density
/// matrix.
using LocalState = std::variant<Eigen::Vector2cd, Eigen::Matrix2cd>;

/// Tensor product in site order. Returns a StateVector iff every local
/// state is a ket; otherwise promotes to a DensityMatrix.
[[nodiscard]] State product_state(std::span<const LocalState> locals);

/// prod_j (sqrt(x_j)|0> + sqrt(1 - x_j)|1>), so that <q_j> = x_j.
[[nodiscard]] StateVector bernoulli_product_state(std::span<const double> x);

/// (|0...0> + |1...1>) / sqrt(2).
[[nodiscard]] StateVector ghz_state(int n_qubits);

/// Haar-random pure state; reproducible per seed.
[[nodiscard]] StateVector random_state(int n_qubits, std::uint64_t seed);

/// Random full-rank mixed state G G^dagger / Tr(G G^dagger) with complex
/// Gaussian G; reproducible per seed.
/// Product of independent Haar-random single-qubit pure states.
[[nodiscard]] StateVector random_product_state(int n_qubits, std::uint64_t seed);
[[nodiscard]] DensityMatrix random_density_matrix(int n_qubits,
                                                  std::uint64_t seed);

} // namespace asymlab
