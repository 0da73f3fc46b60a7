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

#include <cstddef>
#include <span>

#include "asymlab/state.hpp"

namespace asymlab::detail {

/// Bit position of a site inside an amplitude index.
constexpr int bit_of(int site, int n_qubits) { return n_qubits - 1 - site; }

/**
 * Apply `op` (2^k x 2^k) on `sites` to the length-2^n vector stored at
 * `data` with the given element stride. Local index bit order follows the
 * order of `sites`: sites[0] is the most significant local bit.
 */
void apply_local_operator(cplx *data, std::ptrdiff_t stride, int n_qubits,
                          std::span<const int> sites, const CMatrix &op);

/// rho -> op rho op^dagger in place.
void conjugate_local_operator(CMatrix &rho, int n_qubits,
                              std::span<const int> sites, const CMatrix &op);

/// op applied on the left only (rho -> op rho).
void left_multiply_local(CMatrix &rho, int n_qubits, std::span<const int> sites,
                         const CMatrix &op);

} // namespace asymlab::detail
