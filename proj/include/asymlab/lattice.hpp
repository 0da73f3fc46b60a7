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

namespace asymlab {

/**
 * Periodic hypercubic lattice of N = M^d qubits.
 *
 * Sites are flattened row-major: coordinate 0 is the slowest-varying axis,
 * so site = ((c0 * M + c1) * M + c2) ... Distances are graph distances on
 * the torus with nearest-neighbour edges along the axes, i.e. the sum over
 * axes of the wrapped one-dimensional distance.
 */
class LatticeGeometry {
  public:
    LatticeGeometry(int dimension, int linear_size);

    [[nodiscard]] int dimension() const noexcept { return dimension_; }
    [[nodiscard]] int linear_size() const noexcept { return linear_size_; }
    [[nodiscard]] int num_sites() const noexcept { return num_sites_; }

    [[nodiscard]] std::vector<int> coordinates(int site) const;
    [[nodiscard]] int site_index(const std::vector<int> &coords) const;

    [[nodiscard]] int distance(int i, int j) const;

    /// Largest distance between two sites: d * floor(M/2).
    [[nodiscard]] int diameter() const noexcept {
        return dimension_ * (linear_size_ / 2);
    }

    /// z_Lambda: size of the ball {x' : dist(x, x') <= radius}; capped at N.
    [[nodiscard]] int neighborhood_cardinality(int radius) const;

    /// Sites at distance <= radius from `site`, ascending.
    [[nodiscard]] std::vector<int> ball(int site, int radius) const;

    /// Distinct nearest-neighbour pairs (i < j) of the torus graph.
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;

    bool operator==(const LatticeGeometry &) const = default;

  private:
    void check_site(int site) const;

    int dimension_;
    int linear_size_;
    int num_sites_;
};

/// Free-function form of LatticeGeometry::distance.
[[nodiscard]] int distance(int i, int j, const LatticeGeometry &g);

[[nodiscard]] int neighborhood_cardinality(const LatticeGeometry &g,
                                           int radius);

/// Range lambda of a brickwork circuit of the given depth. Each
/// nearest-neighbour layer spreads an operator by at most one site, so
/// lambda = depth and the clustering range is 2 * lambda.
[[nodiscard]] int lightcone_range(int depth);

} // namespace asymlab
