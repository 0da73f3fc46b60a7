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

#include "asymlab/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "asymlab/circuit.hpp"
#include "asymlab/entropy.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/numeric.hpp"
#include "asymlab/observables.hpp"

namespace asymlab {

namespace {

constexpr double kTransverseTolerance = 1e-6;
constexpr double kZeroMagnetization = 1e-12;

double standard_normalization(int twice_s) { return 1.0 / (twice_s + 1.0); }

void check_compatible(int n_qubits, const SchurBasis &basis) {
    if (n_qubits != basis.n_qubits()) {
        throw ArgumentError("state has " + std::to_string(n_qubits) +
                            " qubits but the Schur basis has " +
                            std::to_string(basis.n_qubits()));
    }
}

/// Block w of B^T rho B.
CMatrix rotated_block(const CMatrix &rho, const SchurBasis &basis, int w) {
    const auto &s = basis.strings(w);
    const Eigen::Index d = static_cast<Eigen::Index>(s.size());
    CMatrix sub(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            sub(r, c) = rho(static_cast<Eigen::Index>(s[static_cast<std::size_t>(r)]),
                            static_cast<Eigen::Index>(s[static_cast<std::size_t>(c)]));
        }
    }
    const Eigen::MatrixXcd b = basis.block(w).cast<cplx>();
    return b.transpose() * sub * b;
}

/// Reduced multiplicity-space operators R_s = sum_m block_(s,m), indexed by 2s.
std::vector<CMatrix> multiplicity_blocks(const State &state, const SchurBasis &basis) {
    const int n = basis.n_qubits();
    std::vector<CMatrix> r(static_cast<std::size_t>(n + 1));
    for (int t = 0; t <= n; ++t) {
        const auto ns = static_cast<Eigen::Index>(basis.multiplicity(t));
        r[static_cast<std::size_t>(t)] = CMatrix::Zero(ns, ns);
    }
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        const CVector y = basis.to_schur(psi->amplitudes());
        Eigen::Index col0 = 0;
        for (int w = 0; w <= n; ++w) {
            for (int t = n; t >= 0; t -= 2) {
                const Eigen::Index off = basis.block_offset(w, t);
                if (off < 0) {
                    continue;
                }
                const auto ns = static_cast<Eigen::Index>(basis.multiplicity(t));
                const CVector v = y.segment(col0 + off, ns);
                r[static_cast<std::size_t>(t)].noalias() += v * v.adjoint();
            }
            col0 += basis.block(w).cols();
        }
        return r;
    }
    const auto &rho = std::get<DensityMatrix>(state).matrix();
    for (int w = 0; w <= n; ++w) {
        const CMatrix rb = rotated_block(rho, basis, w);
        for (int t = n; t >= 0; t -= 2) {
            const Eigen::Index off = basis.block_offset(w, t);
            if (off < 0) {
                continue;
            }
            const auto ns = static_cast<Eigen::Index>(basis.multiplicity(t));
            r[static_cast<std::size_t>(t)] += rb.block(off, off, ns, ns);
        }
    }
    return r;
}

} // namespace

SectorTable sector_distribution(const State &state, const SchurBasis &basis) {
    const int n = num_qubits(state);
    check_compatible(n, basis);
    SectorTable t;
    t.n_qubits = n;
    const int smax = n / 2;
    t.p_s.assign(static_cast<std::size_t>(smax + 1), 0.0);
    t.p_sm.resize(static_cast<std::size_t>(smax + 1));
    for (int s = 0; s <= smax; ++s) {
        t.p_sm[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(2 * s + 1), 0.0);
        t.multiplicities.push_back(basis.multiplicity(2 * s));
    }
    auto accumulate = [&](int w, const auto &diag_of) {
        const int twice_m = n - 2 * w;
        for (int tw = n; tw >= std::abs(twice_m); tw -= 2) {
            const Eigen::Index off = basis.block_offset(w, tw);
            const auto ns = static_cast<Eigen::Index>(basis.multiplicity(tw));
            double acc = 0.0;
            for (Eigen::Index a = 0; a < ns; ++a) {
                acc += diag_of(off + a);
            }
            const int s = tw / 2;
            t.p_sm[static_cast<std::size_t>(s)][static_cast<std::size_t>(s + twice_m / 2)] = acc;
        }
    };
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        const CVector y = basis.to_schur(psi->amplitudes());
        Eigen::Index col0 = 0;
        for (int w = 0; w <= n; ++w) {
            accumulate(w, [&](Eigen::Index i) { return std::norm(y[col0 + i]); });
            col0 += basis.block(w).cols();
        }
    } else {
        const auto &rho = std::get<DensityMatrix>(state).matrix();
        for (int w = 0; w <= n; ++w) {
            const CMatrix rb = rotated_block(rho, basis, w);
            accumulate(w, [&](Eigen::Index i) { return rb(i, i).real(); });
        }
    }
    for (int s = 0; s <= smax; ++s) {
        auto &row = t.p_sm[static_cast<std::size_t>(s)];
        for (double &p : row) {
            p = std::max(p, 0.0);
        }
        t.p_s[static_cast<std::size_t>(s)] = numeric::pairwise_sum(row);
    }
    return t;
}

CMatrix su2_twirl_matrix(const CMatrix &rho, const SchurBasis &basis,
                         TwirlNormalization normalization) {
    if (rho.rows() != basis.dimension() || rho.cols() != basis.dimension()) {
        throw ArgumentError("matrix dimension does not match the Schur basis");
    }
    if (normalization == nullptr) {
        normalization = standard_normalization;
    }
    const int n = basis.n_qubits();
    std::vector<CMatrix> r(static_cast<std::size_t>(n + 1));
    std::vector<CMatrix> rotated;
    for (int t = 0; t <= n; ++t) {
        const auto ns = static_cast<Eigen::Index>(basis.multiplicity(t));
        r[static_cast<std::size_t>(t)] = CMatrix::Zero(ns, ns);
    }
    for (int w = 0; w <= n; ++w) {
        rotated.push_back(rotated_block(rho, basis, w));
        for (int t = n; t >= 0; t -= 2) {
            const Eigen::Index off = basis.block_offset(w, t);
            if (off < 0) {
                continue;
            }
            const auto ns = static_cast<Eigen::Index>(basis.multiplicity(t));
            r[static_cast<std::size_t>(t)] += rotated.back().block(off, off, ns, ns);
        }
    }
    for (int t = 0; t <= n; ++t) {
        r[static_cast<std::size_t>(t)] *= normalization(t);
    }
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (int w = 0; w <= n; ++w) {
        const auto &b = basis.block(w);
        CMatrix d = CMatrix::Zero(b.cols(), b.cols());
        for (int t = n; t >= 0; t -= 2) {
            const Eigen::Index off = basis.block_offset(w, t);
            if (off < 0) {
                continue;
            }
            const auto ns = static_cast<Eigen::Index>(basis.multiplicity(t));
            d.block(off, off, ns, ns) = r[static_cast<std::size_t>(t)];
        }
        const Eigen::MatrixXcd bc = b.cast<cplx>();
        const CMatrix g = bc * d * bc.transpose();
        const auto &s = basis.strings(w);
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            for (Eigen::Index j = 0; j < g.cols(); ++j) {
                out(static_cast<Eigen::Index>(s[static_cast<std::size_t>(i)]),
                    static_cast<Eigen::Index>(s[static_cast<std::size_t>(j)])) = g(i, j);
            }
        }
    }
    return out;
}

DensityMatrix su2_twirl(const DensityMatrix &rho, const SchurBasis &basis) {
    check_compatible(rho.n_qubits(), basis);
    return DensityMatrix(rho.n_qubits(), su2_twirl_matrix(rho.matrix(), basis));
}

double su2_twirled_entropy(const State &state, const SchurBasis &basis) {
    check_compatible(num_qubits(state), basis);
    const auto r = multiplicity_blocks(state, basis);
    double total = 0.0;
    for (int t = 0; t <= basis.n_qubits(); ++t) {
        const auto &block = r[static_cast<std::size_t>(t)];
        if (block.rows() == 0) {
            continue;
        }
        const double p = block.trace().real();
        total += hermitian_block_entropy(block);
        if (p > kProbabilityFloor) {
            total += p * std::log(t + 1.0);
        }
    }
    return total;
}

double su2_shannon_rhs(const SectorTable &t) {
    std::vector<double> terms;
    for (std::size_t s = 0; s < t.p_s.size(); ++s) {
        terms.push_back(t.p_s[s] * std::log(2.0 * static_cast<double>(s) + 1.0));
        for (double p : t.p_sm[s]) {
            terms.push_back(p > kProbabilityFloor ? -p * std::log(p) : 0.0);
        }
    }
    return numeric::pairwise_sum(terms);
}

double su2_general_bound(int n_qubits) {
    double acc = 0.0;
    for (int t = n_qubits % 2; t <= n_qubits; t += 2) {
        const double dim = t + 1.0;
        acc += dim * std::min(static_cast<double>(schur_multiplicity(n_qubits, t)), dim);
    }
    return std::log(acc);
}

AsymmetryReport su2_asymmetry(const State &state, const SchurBasis &basis) {
    const int n = num_qubits(state);
    check_compatible(n, basis);
    if (!is_pure_representation(state)) {
        require_density_capacity(n, "su2_asymmetry");
    }
    const SectorTable table = sector_distribution(state, basis);
    AsymmetryReport report;
    report.group = SymmetryGroup::su2;
    report.n_qubits = n;
    report.shannon = su2_shannon_rhs(table);
    report.delta_s = su2_twirled_entropy(state, basis) - von_neumann_entropy(state);
    report.bounds.push_back({"shannon_rhs", report.delta_s, report.shannon, false});
    report.bounds.push_back({"general", report.delta_s, su2_general_bound(n), false});
    return report;
}

Eigen::Vector3d magnetization(const State &state) {
    const int n = num_qubits(state);
    return {real_expectation(state, observables::spin(n, Pauli::X)),
            real_expectation(state, observables::spin(n, Pauli::Y)),
            real_expectation(state, observables::spin(n, Pauli::Z))};
}

GaugeRotation zero_transverse_rotation(const State &state) {
    const Eigen::Vector3d v = magnetization(state);
    const double norm = v.norm();
    if (norm < kZeroMagnetization) {
        return {state, gates::identity()};
    }
    const Eigen::Vector3d vhat = v / norm;
    Eigen::Vector3d axis = vhat.cross(Eigen::Vector3d::UnitZ());
    double theta = std::acos(std::clamp(vhat.z(), -1.0, 1.0));
    if (axis.norm() < kZeroMagnetization) {
        if (vhat.z() > 0) {
            return {state, gates::identity()};
        }
        axis = Eigen::Vector3d::UnitX();
        theta = std::numbers::pi;
    }
    axis.normalize();
    // u = exp(-i theta n.sigma / 2)
    const Eigen::Matrix2cd nsigma = axis.x() * gates::pauli_x() + axis.y() * gates::pauli_y() +
                                    axis.z() * gates::pauli_z();
    const Eigen::Matrix2cd u = std::cos(theta / 2) * gates::identity() -
                               cplx(0.0, std::sin(theta / 2)) * nsigma;
    return {apply_uniform(state, u), u};
}

double casimir_constant(const LatticeGeometry &g, int range) {
    return 1.5 * g.neighborhood_cardinality(range);
}

CasimirReport casimir_constraint_check(const State &state, int range,
                                       const LatticeGeometry &g) {
    const int n = num_qubits(state);
    if (g.num_sites() != n) {
        throw ArgumentError("geometry has " + std::to_string(g.num_sites()) +
                            " sites but the state has " + std::to_string(n));
    }
    const Eigen::Vector3d v = magnetization(state);
    CasimirReport report;
    report.transverse = std::hypot(v.x(), v.y());
    if (report.transverse > kTransverseTolerance) {
        throw PreconditionError("state is not gauge-fixed: transverse magnetization " +
                                std::to_string(report.transverse));
    }
    const double s2 = real_expectation(state, observables::casimir(n));
    const double sz2 = real_expectation(state, observables::spin_squared_component(n, Pauli::Z));
    report.casimir_lhs = s2 - sz2;
    report.precursor_lhs = s2 - v.squaredNorm();
    report.bound = casimir_constant(g, range) * n;
    return report;
}

} // namespace asymlab
