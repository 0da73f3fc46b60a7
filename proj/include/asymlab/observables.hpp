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

#include <vector>

#include "asymlab/state.hpp"

namespace asymlab {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// coefficient * prod_j P_j over the listed (site, Pauli) factors.
struct PauliString {
    cplx coefficient{1.0, 0.0};
    std::vector<std::pair<int, Pauli>> factors;
};

/// Weighted sum of Pauli strings.
using Observable = std::vector<PauliString>;

/// Tr[rho O]. The imaginary part is returned as computed; Hermitian
/// observables give a real value up to rounding.
[[nodiscard]] cplx expectation(const StateVector &psi, const Observable &obs);
[[nodiscard]] cplx expectation(const DensityMatrix &rho, const Observable &obs);
[[nodiscard]] cplx expectation(const State &state, const Observable &obs);

/// Real part of the expectation; throws ValidationError if the imaginary
/// residue exceeds 1e-12 (non-Hermitian observable).
[[nodiscard]] double real_expectation(const State &state, const Observable &obs);

namespace observables {
[[nodiscard]] Observable pauli(int site, Pauli p);
/// Q = sum_j (sigma^z_j + 1) / 2.
[[nodiscard]] Observable charge(int n_qubits);
/// S^alpha = sum_j sigma^alpha_j / 2, alpha in {X, Y, Z}.
[[nodiscard]] Observable spin(int n_qubits, Pauli alpha);
/// (S^alpha)^2 expanded into two-site strings.
[[nodiscard]] Observable spin_squared_component(int n_qubits, Pauli alpha);
/// Casimir S^2 = sum_alpha (S^alpha)^2.
[[nodiscard]] Observable casimir(int n_qubits);
} // namespace observables

/// Dense 2^N x 2^N matrix of an observable (small N only).
[[nodiscard]] CMatrix to_matrix(const Observable &obs, int n_qubits);

/// Reduced density matrix on `sites` (local bit order = order of `sites`).
[[nodiscard]] CMatrix reduced_density_matrix(const State &state,
                                             const std::vector<int> &sites);

} // namespace asymlab
