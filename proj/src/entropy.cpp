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

#include "asymlab/entropy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "asymlab/errors.hpp"

namespace asymlab {

double shannon_entropy(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > kProbabilityFloor) {
            h -= p * std::log(p);
        }
    }
    return h;
}

double entropy_from_eigenvalues(std::span<const double> eigenvalues) {
    double h = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda < -kEigenFloor) {
            throw InvalidStateError("eigenvalue " + std::to_string(lambda) +
                                    " below the clamp floor");
        }
        if (lambda > kProbabilityFloor) {
            h -= lambda * std::log(lambda);
        }
    }
    return h;
}

double hermitian_block_entropy(const CMatrix &block) {
    if (block.rows() == 0) {
        return 0.0;
    }
    if (block.rows() == 1) {
        const double v = block(0, 0).real();
        return entropy_from_eigenvalues(std::span<const double>(&v, 1));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(block, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw InvalidStateError("eigen-decomposition failed");
    }
    const Eigen::VectorXd &ev = es.eigenvalues();
    return entropy_from_eigenvalues(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return hermitian_block_entropy(rho.matrix());
}

double von_neumann_entropy(const State &state) {
    if (std::holds_alternative<StateVector>(state)) {
        return 0.0;
    }
    return von_neumann_entropy(std::get<DensityMatrix>(state));
}

double convert_nats(double nats, LogBase base) {
    return base == LogBase::two ? nats / std::log(2.0) : nats;
}

} // namespace asymlab
