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

#include "asymlab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "asymlab/errors.hpp"

namespace asymlab {

LatticeGeometry::LatticeGeometry(int dimension, int linear_size)
    : dimension_(dimension), linear_size_(linear_size), num_sites_(1) {
    if (dimension < 1) {
        throw ArgumentError("lattice dimension must be positive, got " +
                            std::to_string(dimension));
    }
    if (linear_size < 1) {
        throw ArgumentError("lattice linear size must be positive, got " +
                            std::to_string(linear_size));
    }
    for (int a = 0; a < dimension; ++a) {
        if (num_sites_ > std::numeric_limits<int>::max() / linear_size) {
            throw ArgumentError("lattice too large");
        }
        num_sites_ *= linear_size;
    }
}

void LatticeGeometry::check_site(int site) const {
    if (site < 0 || site >= num_sites_) {
        throw ArgumentError("site index " + std::to_string(site) +
                            " out of range [0, " + std::to_string(num_sites_) +
                            ")");
    }
}

std::vector<int> LatticeGeometry::coordinates(int site) const {
    check_site(site);
    std::vector<int> coords(static_cast<std::size_t>(dimension_));
    for (int a = dimension_ - 1; a >= 0; --a) {
        coords[static_cast<std::size_t>(a)] = site % linear_size_;
        site /= linear_size_;
    }
    return coords;
}

int LatticeGeometry::site_index(const std::vector<int> &coords) const {
    if (static_cast<int>(coords.size()) != dimension_) {
        throw ArgumentError("coordinate vector has wrong dimension");
    }
    int site = 0;
    for (int c : coords) {
        if (c < 0 || c >= linear_size_) {
            throw ArgumentError("coordinate out of range");
        }
        site = site * linear_size_ + c;
    }
    return site;
}

int LatticeGeometry::distance(int i, int j) const {
    check_site(i);
    check_site(j);
    int total = 0;
    for (int a = 0; a < dimension_; ++a) {
        const int d = std::abs(i % linear_size_ - j % linear_size_);
        total += std::min(d, linear_size_ - d);
        i /= linear_size_;
        j /= linear_size_;
    }
    return total;
}

int LatticeGeometry::neighborhood_cardinality(int radius) const {
    if (radius < 0) {
        throw ArgumentError("neighbourhood radius must be non-negative");
    }
    if (radius >= diameter()) {
        return num_sites_;
    }
    // Translation invariance: count the ball around site 0.
    int count = 0;
    for (int x = 0; x < num_sites_; ++x) {
        if (distance(0, x) <= radius) {
            ++count;
        }
    }
    return count;
}

std::vector<int> LatticeGeometry::ball(int site, int radius) const {
    check_site(site);
    std::vector<int> out;
    for (int x = 0; x < num_sites_; ++x) {
        if (distance(site, x) <= radius) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> LatticeGeometry::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < num_sites_; ++i) {
        for (int j = i + 1; j < num_sites_; ++j) {
            if (distance(i, j) == 1) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

int distance(int i, int j, const LatticeGeometry &g) { return g.distance(i, j); }

int neighborhood_cardinality(const LatticeGeometry &g, int radius) {
    return g.neighborhood_cardinality(radius);
}

int lightcone_range(int depth) {
    if (depth < 0) {
        throw ArgumentError("circuit depth must be non-negative");
    }
    return depth;
}

} // namespace asymlab
