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
#include <vector>

namespace asymlab::numeric {

/// Pairwise (cascade) summation: fixed reduction order and O(log n) error
/// growth, so sums over 10^6 terms are bit-stable and accurate.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// ln n! - [(n + 1/2) ln n - n + (1/2) ln 2 pi] for n >= 1.
[[nodiscard]] double stirling_error(double n);

/// ln C(n, k); -inf when k is outside [0, n]. Large arguments use the
/// Stirling form, whose absolute error stays near n * eps * h(k/n) instead
/// of the n ln n * eps of an lgamma difference.
[[nodiscard]] double log_binomial(double n, double k);

} // namespace asymlab::numeric
