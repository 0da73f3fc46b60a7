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
#include <filesystem>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "asymlab/state.hpp"

namespace asymlab {

/// Column label of the Schur basis. Spins are stored doubled (2s, 2m).
struct SchurLabel {
    int twice_s = 0;
    int twice_m = 0;
    int alpha = 0;

    [[nodiscard]] double s() const noexcept { return 0.5 * twice_s; }
    [[nodiscard]] double m() const noexcept { return 0.5 * twice_m; }
    bool operator==(const SchurLabel &) const = default;
};

/**
 * Real orthogonal change of basis from the computational basis to |s, m, alpha>.
 *
 * Built by coupling one spin-1/2 at a time in site order with standard
 * Clebsch-Gordan coefficients; alpha enumerates coupling paths. The matrix
 * is block diagonal in the number of ones w (equivalently m = N/2 - w), so
 * only the blocks are stored. Block w has rows indexed by the weight-w bit
 * strings in ascending order and columns ordered by s descending, then alpha.
 * Dense column order is w = 0..N, then the within-block order.
 */
class SchurBasis {
  public:
    explicit SchurBasis(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept {
        return Eigen::Index{1} << n_qubits_;
    }

    [[nodiscard]] const Eigen::MatrixXd &block(int weight) const {
        return blocks_.at(static_cast<std::size_t>(weight));
    }
    /// Computational indices of the weight-w strings, ascending.
    [[nodiscard]] const std::vector<std::uint64_t> &strings(int weight) const {
        return strings_.at(static_cast<std::size_t>(weight));
    }
    /// Labels of the columns of block(w), in column order.
    [[nodiscard]] const std::vector<SchurLabel> &block_labels(int weight) const {
        return block_labels_.at(static_cast<std::size_t>(weight));
    }
    /// Labels in dense column order.
    [[nodiscard]] std::vector<SchurLabel> labels() const;

    /// n_s for s = twice_s / 2; zero when s is not admissible.
    [[nodiscard]] std::int64_t multiplicity(int twice_s) const;
    /// First column of the (2s) group inside block(w), or -1 if absent.
    [[nodiscard]] Eigen::Index block_offset(int weight, int twice_s) const;

    /// Full 2^N x 2^N orthogonal matrix U, columns = Schur vectors.
    [[nodiscard]] Eigen::MatrixXd dense() const;

    /// U^T psi, in dense column order.
    [[nodiscard]] CVector to_schur(const CVector &psi) const;

    void save(const std::filesystem::path &matrix_file) const;
    [[nodiscard]] static SchurBasis load(const std::filesystem::path &matrix_file);

  private:
    SchurBasis() = default;
    void index_strings();

    int n_qubits_ = 0;
    std::vector<Eigen::MatrixXd> blocks_;
    std::vector<std::vector<std::uint64_t>> strings_;
    std::vector<std::vector<SchurLabel>> block_labels_;
    std::vector<std::int64_t> multiplicities_; // indexed by 2s
};

/// n_s = C(N, N/2 - s) - C(N, N/2 - s - 1), exact integers.
[[nodiscard]] std::int64_t schur_multiplicity(int n_qubits, int twice_s);

/**
 * Even-N basis from the process-wide cache. When `cache_dir` is non-empty the
 * basis is also read from / written to schur_N<N>.bin plus a JSON label
 * sidecar schur_N<N>.json in that directory.
 */
[[nodiscard]] std::shared_ptr<const SchurBasis>
build_schur_basis(int n_qubits, const std::filesystem::path &cache_dir = {});

} // namespace asymlab
