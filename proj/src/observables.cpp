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

#include "asymlab/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "asymlab/errors.hpp"
#include "asymlab/kernels.hpp"

namespace asymlab {

namespace {

/// P|i> = phase(i) |i ^ flip>.
struct CompiledString {
    cplx coefficient;
    std::uint64_t flip = 0;
    std::uint64_t z_mask = 0; // sites contributing a (-1)^bit sign
    int y_count = 0;          // factors of i from Y = i X Z
};

CompiledString compile(const PauliString &ps, int n_qubits) {
    CompiledString out{ps.coefficient};
    std::set<int> seen;
    for (const auto &[site, p] : ps.factors) {
        if (site < 0 || site >= n_qubits) {
            throw ArgumentError("Pauli factor on site " + std::to_string(site) +
                                " outside the register");
        }
        if (!seen.insert(site).second) {
            throw ArgumentError("Pauli string repeats site " + std::to_string(site));
        }
        const std::uint64_t bit = std::uint64_t{1} << detail::bit_of(site, n_qubits);
        switch (p) {
        case Pauli::I:
            break;
        case Pauli::X:
            out.flip |= bit;
            break;
        case Pauli::Y:
            // Y|b> = i (-1)^b |1-b>
            out.flip |= bit;
            out.z_mask |= bit;
            ++out.y_count;
            break;
        case Pauli::Z:
            out.z_mask |= bit;
            break;
        }
    }
    return out;
}

cplx i_power(int k) {
    switch (k % 4) {
    case 0:
        return {1, 0};
    case 1:
        return {0, 1};
    case 2:
        return {-1, 0};
    default:
        return {0, -1};
    }
}

inline double parity_sign(std::uint64_t x) {
    return (std::popcount(x) & 1) ? -1.0 : 1.0;
}

} // namespace

cplx expectation(const StateVector &psi, const Observable &obs) {
    const auto &a = psi.amplitudes();
    const std::uint64_t dim = static_cast<std::uint64_t>(a.size());
    cplx total{0, 0};
    for (const auto &ps : obs) {
        const CompiledString cs = compile(ps, psi.n_qubits());
        const cplx ip = i_power(cs.y_count);
        // <psi|P|psi> = sum_i conj(a[i^f]) phase(i) a[i]
        cplx acc{0, 0};
        for (std::uint64_t i = 0; i < dim; ++i) {
            acc += std::conj(a[static_cast<Eigen::Index>(i ^ cs.flip)]) *
                   parity_sign(i & cs.z_mask) * a[static_cast<Eigen::Index>(i)];
        }
        total += cs.coefficient * ip * acc;
    }
    return total;
}

cplx expectation(const DensityMatrix &rho, const Observable &obs) {
    const auto &m = rho.matrix();
    const std::uint64_t dim = static_cast<std::uint64_t>(m.rows());
    cplx total{0, 0};
    for (const auto &ps : obs) {
        const CompiledString cs = compile(ps, rho.n_qubits());
        const cplx ip = i_power(cs.y_count);
        // Tr(rho P) = sum_i <i|rho P|i> = sum_i phase(i) rho(i, i^f)
        cplx acc{0, 0};
        for (std::uint64_t i = 0; i < dim; ++i) {
            acc += parity_sign(i & cs.z_mask) *
                   m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ cs.flip));
        }
        total += cs.coefficient * ip * acc;
    }
    return total;
}

cplx expectation(const State &state, const Observable &obs) {
    return std::visit([&](const auto &s) { return expectation(s, obs); }, state);
}

double real_expectation(const State &state, const Observable &obs) {
    const cplx v = expectation(state, obs);
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real()))) {
        throw ValidationError("expectation has imaginary residue " +
                              std::to_string(v.imag()));
    }
    return v.real();
}

namespace observables {

Observable pauli(int site, Pauli p) { return {PauliString{{1.0, 0.0}, {{site, p}}}}; }

Observable charge(int n_qubits) {
    Observable q;
    q.push_back(PauliString{{0.5 * n_qubits, 0.0}, {}});
    for (int j = 0; j < n_qubits; ++j) {
        q.push_back(PauliString{{0.5, 0.0}, {{j, Pauli::Z}}});
    }
    return q;
}

Observable spin(int n_qubits, Pauli alpha) {
    Observable s;
    for (int j = 0; j < n_qubits; ++j) {
        s.push_back(PauliString{{0.5, 0.0}, {{j, alpha}}});
    }
    return s;
}

Observable spin_squared_component(int n_qubits, Pauli alpha) {
    // (sum_j sigma_j / 2)^2 = N/4 + (1/2) sum_{i<j} sigma_i sigma_j
    Observable s;
    s.push_back(PauliString{{0.25 * n_qubits, 0.0}, {}});
    for (int i = 0; i < n_qubits; ++i) {
        for (int j = i + 1; j < n_qubits; ++j) {
            s.push_back(PauliString{{0.5, 0.0}, {{i, alpha}, {j, alpha}}});
        }
    }
    return s;
}

Observable casimir(int n_qubits) {
    Observable s;
    for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) {
        auto part = spin_squared_component(n_qubits, a);
        s.insert(s.end(), part.begin(), part.end());
    }
    return s;
}

} // namespace observables

CMatrix to_matrix(const Observable &obs, int n_qubits) {
    require_density_capacity(n_qubits, "to_matrix");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &ps : obs) {
        const CompiledString cs = compile(ps, n_qubits);
        const cplx ip = i_power(cs.y_count);
        for (std::uint64_t i = 0; i < dim; ++i) {
            m(static_cast<Eigen::Index>(i ^ cs.flip), static_cast<Eigen::Index>(i)) +=
                cs.coefficient * ip * parity_sign(i & cs.z_mask);
        }
    }
    return m;
}

CMatrix reduced_density_matrix(const State &state, const std::vector<int> &sites) {
    const int n = num_qubits(state);
    const int k = static_cast<int>(sites.size());
    std::set<int> distinct(sites.begin(), sites.end());
    if (static_cast<int>(distinct.size()) != k || k == 0) {
        throw ArgumentError("reduced_density_matrix needs distinct sites");
    }
    for (int s : sites) {
        if (s < 0 || s >= n) {
            throw ArgumentError("site out of range in reduced_density_matrix");
        }
    }
    const Eigen::Index local_dim = Eigen::Index{1} << k;
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::uint64_t support_mask = 0;
    for (int s : sites) {
        support_mask |= std::uint64_t{1} << detail::bit_of(s, n);
    }
    auto local_index = [&](std::uint64_t i) {
        Eigen::Index r = 0;
        for (int t = 0; t < k; ++t) {
            r = (r << 1) | static_cast<Eigen::Index>(
                               (i >> detail::bit_of(sites[static_cast<std::size_t>(t)], n)) & 1);
        }
        return r;
    };
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(local_dim));
    for (Eigen::Index r = 0; r < local_dim; ++r) {
        std::uint64_t off = 0;
        for (int t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1) {
                off |= std::uint64_t{1} << detail::bit_of(sites[static_cast<std::size_t>(t)], n);
            }
        }
        offsets[static_cast<std::size_t>(r)] = off;
    }
    CMatrix out = CMatrix::Zero(local_dim, local_dim);
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        const auto &a = psi->amplitudes();
        // Group amplitudes by environment configuration.
        const std::uint64_t env_count = dim >> k;
        std::vector<int> bits;
        for (int s : sites) {
            bits.push_back(detail::bit_of(s, n));
        }
        std::sort(bits.begin(), bits.end());
        CVector v(local_dim);
        for (std::uint64_t e = 0; e < env_count; ++e) {
            std::uint64_t base = e;
            for (int bit : bits) {
                const std::uint64_t low = base & ((std::uint64_t{1} << bit) - 1);
                base = ((base >> bit) << (bit + 1)) | low;
            }
            for (Eigen::Index r = 0; r < local_dim; ++r) {
                v[r] = a[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(r)])];
            }
            out.noalias() += v * v.adjoint();
        }
    } else {
        const auto &m = std::get<DensityMatrix>(state).matrix();
        for (std::uint64_t i = 0; i < dim; ++i) {
            const std::uint64_t env = i & ~support_mask;
            const Eigen::Index r = local_index(i);
            for (Eigen::Index c = 0; c < local_dim; ++c) {
                out(r, c) += m(static_cast<Eigen::Index>(i),
                               static_cast<Eigen::Index>(env | offsets[static_cast<std::size_t>(c)]));
            }
        }
    }
    return out;
}

} // namespace asymlab
