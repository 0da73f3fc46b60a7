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

#include "asymlab/clustering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "asymlab/errors.hpp"
#include "asymlab/kernels.hpp"
#include "asymlab/observables.hpp"
#include "asymlab/u1.hpp"

namespace asymlab {

namespace {

constexpr double kTrivialTolerance = 1e-12;
constexpr double kCorrelatorSlack = 1e-9;

double operator_norm(const Eigen::Matrix2cd &o) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(o);
    return svd.singularValues()(0);
}

/// (<O_i O_j> - <O_i><O_j>) from the two-site reduced state, index 2 q_i + q_j.
double connected_from_rdm(const Eigen::Matrix4cd &rho, const Eigen::Matrix2cd &a,
                          const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd ab;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            ab(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
        }
    }
    Eigen::Matrix2cd rho_i = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd rho_j = Eigen::Matrix2cd::Zero();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            rho_i(r, c) = rho(2 * r, 2 * c) + rho(2 * r + 1, 2 * c + 1);
            rho_j(r, c) = rho(r, c) + rho(2 + r, 2 + c);
        }
    }
    const cplx joint = (rho * ab).trace();
    const cplx ea = (rho_i * a).trace();
    const cplx eb = (rho_j * b).trace();
    return (joint - ea * eb).real();
}

Eigen::Matrix4cd pair_rdm(const State &state, int i, int j) {
    return reduced_density_matrix(state, {i, j});
}

Eigen::Matrix2cd charge_density() {
    Eigen::Matrix2cd q = Eigen::Matrix2cd::Zero();
    q(0, 0) = 1.0;
    return q;
}

} // namespace

double connected_correlator(const State &state, int i, const Eigen::Matrix2cd &o_i, int j,
                            const Eigen::Matrix2cd &o_j) {
    if (i == j) {
        throw ArgumentError("connected correlator needs distinct sites, got " +
                            std::to_string(i) + " twice");
    }
    const double value = connected_from_rdm(pair_rdm(state, i, j), o_i, o_j);
    const double cap = 2.0 * operator_norm(o_i) * operator_norm(o_j);
    if (std::abs(value) > cap + kCorrelatorSlack) {
        throw InvalidStateError("connected correlator " + std::to_string(value) +
                                " exceeds 2 |O_i| |O_j| = " + std::to_string(cap));
    }
    return value;
}

nlohmann::json ClusterReport::to_json() const {
    nlohmann::json jp = nlohmann::json::array();
    for (const auto &p : pairs) {
        jp.push_back({{"i", p.i},
                      {"j", p.j},
                      {"distance", p.distance},
                      {"charge_connected", p.charge},
                      {"max_pauli_connected", p.max_pauli}});
    }
    return {{"range", range},
            {"tolerance", tolerance},
            {"max_violation", max_violation},
            {"effective_range", effective_range},
            {"clusters", clusters()},
            {"pairs", jp}};
}

void ClusterReport::write_csv(std::ostream &out) const {
    const auto old = out.precision(17);
    out << "i,j,distance,charge_connected,max_pauli_connected\n";
    for (const auto &p : pairs) {
        out << p.i << ',' << p.j << ',' << p.distance << ',' << p.charge << ','
            << p.max_pauli << '\n';
    }
    out.precision(old);
}

ClusterReport verify_cluster_property(const State &state, int range,
                                      const LatticeGeometry &g, double tol) {
    const int n = num_qubits(state);
    if (g.num_sites() != n) {
        throw ArgumentError("geometry has " + std::to_string(g.num_sites()) +
                            " sites but the state has " + std::to_string(n));
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("cluster tolerance must be positive");
    }
    if (range < 0) {
        throw ArgumentError("cluster range must be non-negative");
    }
    const std::array<Eigen::Matrix2cd, 3> paulis{gates::pauli_x(), gates::pauli_y(),
                                                 gates::pauli_z()};
    const Eigen::Matrix2cd q = charge_density();
    ClusterReport report;
    report.range = range;
    report.tolerance = tol;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Eigen::Matrix4cd rho = pair_rdm(state, i, j);
            PairCorrelation pc;
            pc.i = i;
            pc.j = j;
            pc.distance = g.distance(i, j);
            pc.charge = connected_from_rdm(rho, q, q);
            for (const auto &a : paulis) {
                for (const auto &b : paulis) {
                    pc.max_pauli = std::max(pc.max_pauli, std::abs(connected_from_rdm(rho, a, b)));
                }
            }
            const double worst = std::max(pc.max_pauli, std::abs(pc.charge));
            if (worst > tol) {
                report.effective_range = std::max(report.effective_range, pc.distance);
            }
            if (pc.distance > range) {
                report.max_violation = std::max(report.max_violation, worst);
            }
            report.pairs.push_back(pc);
        }
    }
    return report;
}

namespace {

struct LocalOperator {
    std::vector<int> sites; // position 0 is the most significant local bit
    CMatrix matrix;

    int position(int site) const {
        const auto it = std::find(sites.begin(), sites.end(), site);
        return it == sites.end() ? -1 : static_cast<int>(it - sites.begin());
    }

    void extend(int site) {
        if (static_cast<int>(sites.size()) >= kMaxSpreadingSupport) {
            throw ResourceError("operator support exceeds " +
                                std::to_string(kMaxSpreadingSupport) + " sites");
        }
        const Eigen::Index d = matrix.rows();
        CMatrix bigger = CMatrix::Zero(2 * d, 2 * d);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                bigger(2 * r, 2 * c) = matrix(r, c);
                bigger(2 * r + 1, 2 * c + 1) = matrix(r, c);
            }
        }
        matrix = std::move(bigger);
        sites.push_back(site);
    }

    /// ||A - 1_p (x) Tr_p(A)/2||_F / sqrt(dim).
    double weight_on(int pos) const {
        const int k = static_cast<int>(sites.size());
        const int bit = k - 1 - pos;
        const Eigen::Index mask = Eigen::Index{1} << bit;
        double acc = 0.0;
        for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
            for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
                cplx proj{0, 0};
                if (((r ^ c) & mask) == 0) {
                    proj = 0.5 * (matrix(r & ~mask, c & ~mask) + matrix(r | mask, c | mask));
                }
                acc += std::norm(matrix(r, c) - proj);
            }
        }
        return std::sqrt(acc / static_cast<double>(matrix.rows()));
    }
};

} // namespace

int operator_spreading_range(const BrickworkCircuit &c) {
    const auto &g = c.geometry();
    const int n = c.n_qubits();
    const std::array<Eigen::Matrix2cd, 3> paulis{gates::pauli_x(), gates::pauli_y(),
                                                 gates::pauli_z()};
    int spread = 0;
    for (int j = 0; j < n; ++j) {
        for (const auto &p : paulis) {
            LocalOperator op{{j}, p};
            for (auto layer = c.layers().rbegin(); layer != c.layers().rend(); ++layer) {
                for (const auto &gate : *layer) {
                    const bool touches = std::any_of(gate.sites.begin(), gate.sites.end(),
                                                     [&](int s) { return op.position(s) >= 0; });
                    if (!touches) {
                        continue;
                    }
                    for (int s : gate.sites) {
                        if (op.position(s) < 0) {
                            op.extend(s);
                        }
                    }
                    std::vector<int> local;
                    for (int s : gate.sites) {
                        local.push_back(op.position(s));
                    }
                    detail::conjugate_local_operator(op.matrix, static_cast<int>(op.sites.size()),
                                                     local, gate.unitary.adjoint());
                }
            }
            for (std::size_t pos = 0; pos < op.sites.size(); ++pos) {
                if (op.weight_on(static_cast<int>(pos)) > kTrivialTolerance) {
                    spread = std::max(spread, g.distance(j, op.sites[pos]));
                }
            }
        }
    }
    return spread;
}

BoundCheck variance_bound_check(const State &state, int range, const LatticeGeometry &g) {
    if (g.num_sites() != num_qubits(state)) {
        throw ArgumentError("geometry does not match the state");
    }
    const double var = charge_distribution(state).variance();
    return {"variance", var, clustering_variance_bound(g, range), false};
}

} // namespace asymlab
