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

#include <span>

#include "asymlab/state.hpp"

namespace asymlab {

/// Probabilities below this are dropped from entropy sums.
inline constexpr double kProbabilityFloor = 1e-14;

/// -sum p ln p (nats) with 0 ln 0 = 0.
[[nodiscard]] double shannon_entropy(std::span<const double> probs);

/// -sum lambda ln lambda over eigenvalues; values in [-1e-10, 0) are
/// clamped, anything more negative raises InvalidStateError.
[[nodiscard]] double entropy_from_eigenvalues(std::span<const double> eigenvalues);

/// Von Neumann entropy of a Hermitian positive block (need not have unit
/// trace; used for sector blocks of twirled states).
[[nodiscard]] double hermitian_block_entropy(const CMatrix &block);

/// S_V(rho) = -Tr(rho ln rho) in nats.
[[nodiscard]] double von_neumann_entropy(const DensityMatrix &rho);

/// Zero for StateVector inputs.
[[nodiscard]] double von_neumann_entropy(const State &state);

enum class LogBase { e, two };

/// Entropies are computed in nats; this converts for presentation.
[[nodiscard]] double convert_nats(double nats, LogBase base);

} // namespace asymlab
