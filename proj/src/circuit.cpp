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

#include "asymlab/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "asymlab/errors.hpp"
#include "asymlab/kernels.hpp"

namespace asymlab {

namespace {

constexpr double kUnitaryTolerance = 1e-12;
constexpr double kCompletenessTolerance = 1e-10;

void validate_gate(const Gate &gate, const LatticeGeometry &geometry) {
    const int n = geometry.num_sites();
    if (gate.sites.empty() || gate.sites.size() > 2) {
        throw ValidationError("brickwork gates act on one or two sites");
    }
    for (int s : gate.sites) {
        if (s < 0 || s >= n) {
            throw ValidationError("gate site " + std::to_string(s) +
                                  " out of range");
        }
    }
    if (gate.sites.size() == 2) {
        if (gate.sites[0] == gate.sites[1]) {
            throw ValidationError("two-site gate with repeated site");
        }
        if (geometry.distance(gate.sites[0], gate.sites[1]) != 1) {
            throw ValidationError("two-site gate on non-neighbouring sites " +
                                  std::to_string(gate.sites[0]) + ", " +
                                  std::to_string(gate.sites[1]));
        }
    }
    const Eigen::Index dim = Eigen::Index{1} << gate.sites.size();
    if (gate.unitary.rows() != dim || gate.unitary.cols() != dim) {
        throw ValidationError("gate matrix has wrong dimension");
    }
    const double dev =
        (gate.unitary.adjoint() * gate.unitary - CMatrix::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();
    if (!(dev <= kUnitaryTolerance)) {
        throw ValidationError("gate is not unitary (deviation " +
                              std::to_string(dev) + ")");
    }
}

} // namespace

BrickworkCircuit::BrickworkCircuit(LatticeGeometry geometry,
                                   std::vector<Layer> layers)
    : geometry_(std::move(geometry)), layers_(std::move(layers)) {
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        std::set<int> used;
        for (const auto &gate : layers_[l]) {
            validate_gate(gate, geometry_);
            for (int s : gate.sites) {
                if (!used.insert(s).second) {
                    throw ValidationError("layer " + std::to_string(l) +
                                          " has overlapping gates on site " +
                                          std::to_string(s));
                }
            }
        }
    }
}

BrickworkCircuit BrickworkCircuit::inverse() const {
    std::vector<Layer> inv(layers_.rbegin(), layers_.rend());
    for (auto &layer : inv) {
        for (auto &gate : layer) {
            gate.unitary = gate.unitary.adjoint().eval();
        }
    }
    return BrickworkCircuit(geometry_, std::move(inv));
}

KrausChannel::KrausChannel(std::vector<int> support,
                           std::vector<CMatrix> kraus_ops)
    : support_(std::move(support)), kraus_ops_(std::move(kraus_ops)) {
    if (support_.empty()) {
        throw ValidationError("Kraus channel needs a non-empty support");
    }
    std::set<int> distinct(support_.begin(), support_.end());
    if (distinct.size() != support_.size() || *distinct.begin() < 0) {
        throw ValidationError("Kraus support sites must be distinct and >= 0");
    }
    if (kraus_ops_.empty()) {
        throw ValidationError("Kraus channel needs at least one operator");
    }
    const Eigen::Index dim = Eigen::Index{1} << support_.size();
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const auto &a : kraus_ops_) {
        if (a.rows() != dim || a.cols() != dim) {
            throw ValidationError("Kraus operator has wrong dimension");
        }
        sum += a.adjoint() * a;
    }
    const double dev = (sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (!(dev <= kCompletenessTolerance)) {
        throw ValidationError("Kraus operators violate completeness (deviation " +
                              std::to_string(dev) + ")");
    }
}

StateVector apply_gate(const StateVector &psi, const Gate &gate) {
    CVector amps = psi.amplitudes();
    detail::apply_local_operator(amps.data(), 1, psi.n_qubits(), gate.sites,
                                 gate.unitary);
    return StateVector(psi.n_qubits(), std::move(amps));
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate) {
    CMatrix m = rho.matrix();
    detail::conjugate_local_operator(m, rho.n_qubits(), gate.sites, gate.unitary);
    return DensityMatrix(rho.n_qubits(), std::move(m));
}

StateVector apply_circuit(const StateVector &psi,
                          const BrickworkCircuit &circuit) {
    if (psi.n_qubits() != circuit.n_qubits()) {
        throw ArgumentError("circuit and state qubit counts differ");
    }
    CVector amps = psi.amplitudes();
    for (const auto &layer : circuit.layers()) {
        for (const auto &gate : layer) {
            detail::apply_local_operator(amps.data(), 1, psi.n_qubits(),
                                         gate.sites, gate.unitary);
        }
    }
    return StateVector(psi.n_qubits(), std::move(amps));
}

DensityMatrix apply_circuit(const DensityMatrix &rho,
                            const BrickworkCircuit &circuit) {
    if (rho.n_qubits() != circuit.n_qubits()) {
        throw ArgumentError("circuit and state qubit counts differ");
    }
    CMatrix m = rho.matrix();
    for (const auto &layer : circuit.layers()) {
        for (const auto &gate : layer) {
            detail::conjugate_local_operator(m, rho.n_qubits(), gate.sites,
                                             gate.unitary);
        }
    }
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(rho.n_qubits(), std::move(m));
}

State apply_circuit(const State &state, const BrickworkCircuit &circuit) {
    return std::visit([&](const auto &s) -> State { return apply_circuit(s, circuit); },
                      state);
}

StateVector apply_uniform(const StateVector &psi, const Eigen::Matrix2cd &u) {
    CVector amps = psi.amplitudes();
    const CMatrix op = u;
    for (int site = 0; site < psi.n_qubits(); ++site) {
        const int s[1] = {site};
        detail::apply_local_operator(amps.data(), 1, psi.n_qubits(), s, op);
    }
    amps /= amps.norm();
    return StateVector(psi.n_qubits(), std::move(amps));
}

DensityMatrix apply_uniform(const DensityMatrix &rho, const Eigen::Matrix2cd &u) {
    CMatrix m = rho.matrix();
    const CMatrix op = u;
    for (int site = 0; site < rho.n_qubits(); ++site) {
        const int s[1] = {site};
        detail::conjugate_local_operator(m, rho.n_qubits(), s, op);
    }
    m = 0.5 * (m + m.adjoint()).eval();
    m /= m.trace().real();
    return DensityMatrix(rho.n_qubits(), std::move(m));
}

State apply_uniform(const State &state, const Eigen::Matrix2cd &u) {
    return std::visit([&](const auto &s) -> State { return apply_uniform(s, u); },
                      state);
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &channel) {
    for (int s : channel.support()) {
        if (s >= rho.n_qubits()) {
            throw ArgumentError("channel support outside the register");
        }
    }
    CMatrix out = CMatrix::Zero(rho.dimension(), rho.dimension());
    for (const auto &a : channel.kraus_ops()) {
        CMatrix term = rho.matrix();
        detail::conjugate_local_operator(term, rho.n_qubits(), channel.support(), a);
        out += term;
    }
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(rho.n_qubits(), std::move(out));
}

CMatrix random_unitary(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(r, c) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const cplx d = r(i, i);
        const double a = std::abs(d);
        if (a > 0) {
            q.col(i) *= d / a;
        }
    }
    return q;
}

std::vector<std::pair<int, int>> brickwork_pairs(const LatticeGeometry &geometry,
                                                 int layer_index) {
    const int d = geometry.dimension();
    const int m = geometry.linear_size();
    const int axis = (layer_index / 2) % d;
    const int parity = layer_index % 2;
    std::vector<std::pair<int, int>> pairs;
    if (m < 2) {
        return pairs;
    }
    for (int site = 0; site < geometry.num_sites(); ++site) {
        auto coords = geometry.coordinates(site);
        const int c = coords[static_cast<std::size_t>(axis)];
        int partner_c = -1;
        if (c % 2 == parity && c + 1 < m) {
            partner_c = c + 1;
        } else if (parity == 1 && m % 2 == 0 && m > 2 && c == m - 1) {
            partner_c = 0;
        }
        if (partner_c < 0) {
            continue;
        }
        coords[static_cast<std::size_t>(axis)] = partner_c;
        pairs.emplace_back(site, geometry.site_index(coords));
    }
    return pairs;
}

BrickworkCircuit random_brickwork(const LatticeGeometry &geometry, int depth,
                                  std::uint64_t seed) {
    if (depth < 0) {
        throw ArgumentError("circuit depth must be non-negative");
    }
    std::mt19937_64 rng(seed);
    std::vector<Layer> layers;
    layers.reserve(static_cast<std::size_t>(depth));
    for (int l = 0; l < depth; ++l) {
        Layer layer;
        for (const auto &[a, b] : brickwork_pairs(geometry, l)) {
            layer.push_back(Gate{{a, b}, random_unitary(4, rng)});
        }
        layers.push_back(std::move(layer));
    }
    return BrickworkCircuit(geometry, std::move(layers));
}

namespace gates {

Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    return h * M_SQRT1_2;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

CMatrix cnot() {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

CMatrix swap() {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

} // namespace gates

namespace channels {

KrausChannel depolarizing(int site, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("depolarizing probability outside [0, 1]");
    }
    const double a0 = std::sqrt(1.0 - 0.75 * p);
    const double a = std::sqrt(0.25 * p);
    std::vector<CMatrix> ops = {CMatrix(a0 * gates::identity()),
                                CMatrix(a * gates::pauli_x()),
                                CMatrix(a * gates::pauli_y()),
                                CMatrix(a * gates::pauli_z())};
    return KrausChannel({site}, std::move(ops));
}

KrausChannel dephasing(int site, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("dephasing probability outside [0, 1]");
    }
    std::vector<CMatrix> ops = {CMatrix(std::sqrt(1.0 - p) * gates::identity()),
                                CMatrix(std::sqrt(p) * gates::pauli_z())};
    return KrausChannel({site}, std::move(ops));
}

KrausChannel full_dephasing(int site) {
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    CMatrix p1 = CMatrix::Zero(2, 2);
    p1(1, 1) = 1;
    return KrausChannel({site}, {p0, p1});
}

} // namespace channels

} // namespace asymlab
