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

#include "asymlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "asymlab/errors.hpp"
#include "asymlab/kernels.hpp"

namespace asymlab {

CapacityLimits capacity_limits() {
    CapacityLimits limits;
    if (const char *env = std::getenv("ASYMLAB_MAX_QUBITS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 62) {
            limits.max_statevector_qubits = static_cast<int>(v);
            limits.max_density_qubits = static_cast<int>(v);
        }
    }
    return limits;
}

void require_statevector_capacity(int n_qubits, const char *what) {
    const int cap = capacity_limits().max_statevector_qubits;
    if (n_qubits > cap) {
        throw ResourceError(std::string(what) + ": " + std::to_string(n_qubits) +
                            " qubits exceeds statevector cap " +
                            std::to_string(cap) +
                            " (override with ASYMLAB_MAX_QUBITS)");
    }
}

void require_density_capacity(int n_qubits, const char *what) {
    const int cap = capacity_limits().max_density_qubits;
    if (n_qubits > cap) {
        throw ResourceError(std::string(what) + ": " + std::to_string(n_qubits) +
                            " qubits exceeds density-matrix cap " +
                            std::to_string(cap) +
                            " (override with ASYMLAB_MAX_QUBITS)");
    }
}

namespace {

Eigen::Index checked_dimension(int n_qubits) {
    if (n_qubits < 0 || n_qubits > 62) {
        throw ArgumentError("invalid qubit count " + std::to_string(n_qubits));
    }
    return Eigen::Index{1} << n_qubits;
}

} // namespace

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != checked_dimension(n_qubits)) {
        throw ArgumentError("statevector length " +
                            std::to_string(amplitudes_.size()) +
                            " does not match 2^" + std::to_string(n_qubits));
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
        throw ValidationError("statevector not normalized: |psi|^2 = " +
                              std::to_string(norm2));
    }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    const Eigen::Index dim = checked_dimension(n_qubits);
    if (static_cast<Eigen::Index>(index) >= dim) {
        throw ArgumentError("basis index out of range");
    }
    CVector amps = CVector::Zero(dim);
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    const Eigen::Index dim = checked_dimension(n_qubits);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw ArgumentError("density matrix shape does not match 2^" +
                            std::to_string(n_qubits));
    }
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= kDensityTolerance)) {
        throw ValidationError("density matrix not Hermitian (deviation " +
                              std::to_string(herm) + ")");
    }
    const cplx tr = matrix_.trace();
    if (!(std::abs(tr - 1.0) <= kDensityTolerance)) {
        throw ValidationError("density matrix trace " + std::to_string(tr.real()) +
                              " differs from 1");
    }
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix_.squaredNorm();
}

int num_qubits(const State &state) {
    return std::visit([](const auto &s) { return s.n_qubits(); }, state);
}

bool is_pure_representation(const State &state) {
    return std::holds_alternative<StateVector>(state);
}

DensityMatrix to_density_matrix(const StateVector &psi) {
    require_density_capacity(psi.n_qubits(), "to_density_matrix");
    CMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
    // Symmetrize away rounding so the Hermiticity check is exact.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(psi.n_qubits(), std::move(rho));
}

DensityMatrix to_density_matrix(const State &state) {
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        return to_density_matrix(*psi);
    }
    return std::get<DensityMatrix>(state);
}

State product_state(std::span<const LocalState> locals) {
    const int n = static_cast<int>(locals.size());
    if (n == 0) {
        throw ArgumentError("product_state needs at least one site");
    }
    bool all_pure = true;
    for (const auto &local : locals) {
        if (const auto *ket = std::get_if<Eigen::Vector2cd>(&local)) {
            if (std::abs(ket->squaredNorm() - 1.0) > kNormTolerance) {
                throw ValidationError("local ket not normalized");
            }
        } else {
            all_pure = false;
            const auto &m = std::get<Eigen::Matrix2cd>(local);
            if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance ||
                std::abs(m.trace() - 1.0) > kDensityTolerance) {
                throw ValidationError("local density matrix invalid");
            }
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m);
            if (es.eigenvalues().minCoeff() < -kEigenFloor) {
                throw InvalidStateError("local density matrix not positive");
            }
        }
    }
    if (all_pure) {
        require_statevector_capacity(n, "product_state");
        CVector amps(1);
        amps[0] = 1.0;
        for (const auto &local : locals) {
            const auto &ket = std::get<Eigen::Vector2cd>(local);
            CVector next(amps.size() * 2);
            for (Eigen::Index i = 0; i < amps.size(); ++i) {
                next[2 * i] = amps[i] * ket[0];
                next[2 * i + 1] = amps[i] * ket[1];
            }
            amps = std::move(next);
        }
        return StateVector(n, std::move(amps));
    }
    require_density_capacity(n, "product_state");
    CMatrix rho(1, 1);
    rho(0, 0) = 1.0;
    for (const auto &local : locals) {
        Eigen::Matrix2cd m;
        if (const auto *ket = std::get_if<Eigen::Vector2cd>(&local)) {
            m = (*ket) * ket->adjoint();
        } else {
            m = std::get<Eigen::Matrix2cd>(local);
        }
        CMatrix next(rho.rows() * 2, rho.cols() * 2);
        for (Eigen::Index r = 0; r < rho.rows(); ++r) {
            for (Eigen::Index c = 0; c < rho.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = rho(r, c) * m;
            }
        }
        rho = std::move(next);
    }
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(n, std::move(rho));
}

StateVector bernoulli_product_state(std::span<const double> x) {
    std::vector<LocalState> locals;
    locals.reserve(x.size());
    for (double xi : x) {
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw ArgumentError("Bernoulli parameter outside [0, 1]");
        }
        Eigen::Vector2cd ket(std::sqrt(xi), std::sqrt(1.0 - xi));
        locals.emplace_back(ket);
    }
    return std::get<StateVector>(product_state(locals));
}

StateVector ghz_state(int n_qubits) {
    if (n_qubits < 1) {
        throw ArgumentError("GHZ state needs at least one qubit");
    }
    require_statevector_capacity(n_qubits, "ghz_state");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CVector amps = CVector::Zero(dim);
    amps[0] = M_SQRT1_2;
    amps[dim - 1] = M_SQRT1_2;
    return StateVector(n_qubits, std::move(amps));
}

StateVector random_state(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 0) {
        throw ArgumentError("negative qubit count");
    }
    require_statevector_capacity(n_qubits, "random_state");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CVector amps(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        amps[i] = cplx(re, im);
    }
    amps /= amps.norm();
    return StateVector(n_qubits, std::move(amps));
}

StateVector random_product_state(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 1) {
        throw ArgumentError("random product state needs at least one qubit");
    }
    require_statevector_capacity(n_qubits, "random_product_state");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<LocalState> locals;
    for (int j = 0; j < n_qubits; ++j) {
        Eigen::Vector2cd v;
        for (int k = 0; k < 2; ++k) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v[k] = cplx(re, im);
        }
        locals.emplace_back(v.normalized());
    }
    return std::get<StateVector>(product_state(locals));
}

DensityMatrix random_density_matrix(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 0) {
        throw ArgumentError("negative qubit count");
    }
    require_density_capacity(n_qubits, "random_density_matrix");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CMatrix g(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(r, c) = cplx(re, im);
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(n_qubits, std::move(rho));
}

namespace detail {

void apply_local_operator(cplx *data, std::ptrdiff_t stride, int n_qubits,
                          std::span<const int> sites, const CMatrix &op) {
    const int k = static_cast<int>(sites.size());
    const Eigen::Index local_dim = Eigen::Index{1} << k;
    if (op.rows() != local_dim || op.cols() != local_dim) {
        throw ArgumentError("local operator dimension does not match support");
    }
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(local_dim), 0);
    for (Eigen::Index r = 0; r < local_dim; ++r) {
        std::uint64_t off = 0;
        for (int t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1) {
                off |= std::uint64_t{1} << bit_of(sites[static_cast<std::size_t>(t)], n_qubits);
            }
        }
        offsets[static_cast<std::size_t>(r)] = off;
    }
    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(k));
    for (int s : sites) {
        bits.push_back(bit_of(s, n_qubits));
    }
    std::sort(bits.begin(), bits.end());

    const std::uint64_t n_base = std::uint64_t{1} << (n_qubits - k);
    CVector buf(local_dim);
    CVector out(local_dim);
    for (std::uint64_t b = 0; b < n_base; ++b) {
        // Insert zero bits at the support positions.
        std::uint64_t base = b;
        for (int bit : bits) {
            const std::uint64_t low = base & ((std::uint64_t{1} << bit) - 1);
            base = ((base >> bit) << (bit + 1)) | low;
        }
        for (Eigen::Index r = 0; r < local_dim; ++r) {
            buf[r] = data[static_cast<std::ptrdiff_t>(base + offsets[static_cast<std::size_t>(r)]) * stride];
        }
        out.noalias() = op * buf;
        for (Eigen::Index r = 0; r < local_dim; ++r) {
            data[static_cast<std::ptrdiff_t>(base + offsets[static_cast<std::size_t>(r)]) * stride] = out[r];
        }
    }
}

void left_multiply_local(CMatrix &rho, int n_qubits, std::span<const int> sites,
                         const CMatrix &op) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        apply_local_operator(rho.col(c).data(), 1, n_qubits, sites, op);
    }
}

void conjugate_local_operator(CMatrix &rho, int n_qubits,
                              std::span<const int> sites, const CMatrix &op) {
    left_multiply_local(rho, n_qubits, sites, op);
    // (rho op^dagger)_{r,c} = sum_c' rho_{r,c'} conj(op_{c,c'}): conj(op) on rows.
    const CMatrix op_conj = op.conjugate();
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        apply_local_operator(rho.data() + r, rho.rows(), n_qubits, sites, op_conj);
    }
}

} // namespace detail

} // namespace asymlab
