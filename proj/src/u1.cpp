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

#include "asymlab/u1.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "asymlab/entropy.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/numeric.hpp"

namespace asymlab {

namespace {

constexpr double kNegativeClamp = 1e-12;
constexpr double kSumTolerance = 1e-10;

/// Basis indices of each charge sector, ascending.
std::vector<std::vector<Eigen::Index>> sector_indices(int n_qubits) {
    std::vector<std::vector<Eigen::Index>> sectors(static_cast<std::size_t>(n_qubits + 1));
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    for (std::uint64_t i = 0; i < dim; ++i) {
        sectors[static_cast<std::size_t>(basis_charge(i, n_qubits))].push_back(
            static_cast<Eigen::Index>(i));
    }
    return sectors;
}

} // namespace

ChargeDistribution::ChargeDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw ArgumentError("charge distribution must have at least one entry");
    }
    for (double &p : probs_) {
        if (!std::isfinite(p) || p < -kNegativeClamp) {
            throw ValidationError("charge probability " + std::to_string(p) +
                                  " is negative or non-finite");
        }
        if (p < 0.0) {
            p = 0.0;
        }
    }
    const double total = numeric::pairwise_sum(probs_);
    if (!(std::abs(total - 1.0) <= kSumTolerance)) {
        throw ValidationError("charge probabilities sum to " + std::to_string(total));
    }
    std::vector<double> terms(probs_.size());
    for (std::size_t q = 0; q < probs_.size(); ++q) {
        terms[q] = probs_[q] * static_cast<double>(q);
    }
    mean_ = numeric::pairwise_sum(terms);
    for (std::size_t q = 0; q < probs_.size(); ++q) {
        const double d = static_cast<double>(q) - mean_;
        terms[q] = probs_[q] * d * d;
    }
    variance_ = numeric::pairwise_sum(terms);
}

int basis_charge(std::uint64_t index, int n_qubits) {
    return n_qubits - std::popcount(index);
}

ChargeDistribution charge_distribution(const State &state) {
    const int n = num_qubits(state);
    std::vector<double> probs(static_cast<std::size_t>(n + 1), 0.0);
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        const auto &a = psi->amplitudes();
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            probs[static_cast<std::size_t>(basis_charge(static_cast<std::uint64_t>(i), n))] +=
                std::norm(a[i]);
        }
    } else {
        const auto &m = std::get<DensityMatrix>(state).matrix();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            probs[static_cast<std::size_t>(basis_charge(static_cast<std::uint64_t>(i), n))] +=
                m(i, i).real();
        }
    }
    return ChargeDistribution(std::move(probs));
}

double shannon_entropy(const ChargeDistribution &d) {
    std::vector<double> terms;
    terms.reserve(d.probs().size());
    for (double p : d.probs()) {
        terms.push_back(p > kProbabilityFloor ? -p * std::log(p) : 0.0);
    }
    return numeric::pairwise_sum(terms);
}

DensityMatrix u1_twirl(const DensityMatrix &rho) {
    const int n = rho.n_qubits();
    CMatrix out = rho.matrix();
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        const int qi = basis_charge(static_cast<std::uint64_t>(i), n);
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            if (basis_charge(static_cast<std::uint64_t>(j), n) != qi) {
                out(i, j) = 0.0;
            }
        }
    }
    return DensityMatrix(n, std::move(out));
}

double u1_twirled_entropy(const DensityMatrix &rho) {
    const auto sectors = sector_indices(rho.n_qubits());
    double total = 0.0;
    for (const auto &idx : sectors) {
        const Eigen::Index d = static_cast<Eigen::Index>(idx.size());
        CMatrix block(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                block(r, c) = rho.matrix()(idx[static_cast<std::size_t>(r)],
                                           idx[static_cast<std::size_t>(c)]);
            }
        }
        total += hermitian_block_entropy(block);
    }
    return total;
}

double massey_bound(double variance) {
    if (!(variance > 0.0) || !std::isfinite(variance)) {
        throw DomainError("Massey bound requires 0 < sigma^2 < inf, got " +
                          std::to_string(variance));
    }
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e *
                          (variance + 1.0 / 12.0));
}

double clustering_variance_bound(const LatticeGeometry &g, int range) {
    return 2.0 * g.neighborhood_cardinality(range) * g.num_sites();
}

double clustering_asymmetry_bound(const LatticeGeometry &g, int range) {
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e *
                          (clustering_variance_bound(g, range) + 1.0 / 12.0));
}

namespace {

void append_u1_bounds(AsymmetryReport &report, const ChargeDistribution &d,
                      const std::optional<ClusteringHypothesis> &hypothesis) {
    const int n = d.max_charge();
    report.bounds.push_back({"shannon", report.delta_s, report.shannon, false});
    report.bounds.push_back(
        {"log_n_plus_1", report.delta_s, std::log(static_cast<double>(n) + 1.0), false});
    if (d.variance() > 0.0) {
        report.bounds.push_back({"massey", report.shannon, massey_bound(d.variance()), true});
    }
    if (hypothesis) {
        if (hypothesis->geometry.num_sites() != n) {
            throw ArgumentError("geometry has " +
                                std::to_string(hypothesis->geometry.num_sites()) +
                                " sites but the state has " + std::to_string(n));
        }
        report.bounds.push_back(
            {"clustering", report.delta_s,
             clustering_asymmetry_bound(hypothesis->geometry, hypothesis->range), false});
    }
}

} // namespace

AsymmetryReport u1_asymmetry(const State &state,
                             const std::optional<ClusteringHypothesis> &hypothesis) {
    const ChargeDistribution d = charge_distribution(state);
    AsymmetryReport report;
    report.group = SymmetryGroup::u1;
    report.n_qubits = num_qubits(state);
    report.shannon = shannon_entropy(d);
    report.variance = d.variance();
    if (is_pure_representation(state)) {
        report.delta_s = report.shannon;
    } else {
        const auto &rho = std::get<DensityMatrix>(state);
        require_density_capacity(rho.n_qubits(), "u1_asymmetry");
        report.delta_s = u1_twirled_entropy(rho) - von_neumann_entropy(rho);
    }
    append_u1_bounds(report, d, hypothesis);
    return report;
}

AsymmetryReport u1_report_from_distribution(
    const ChargeDistribution &d, const std::optional<ClusteringHypothesis> &hypothesis) {
    AsymmetryReport report;
    report.group = SymmetryGroup::u1;
    report.n_qubits = d.max_charge();
    report.shannon = shannon_entropy(d);
    report.variance = d.variance();
    report.delta_s = report.shannon;
    append_u1_bounds(report, d, hypothesis);
    return report;
}

std::complex<double> generating_function(const ChargeDistribution &d, double alpha) {
    std::vector<double> re(d.probs().size());
    std::vector<double> im(d.probs().size());
    for (std::size_t q = 0; q < d.probs().size(); ++q) {
        re[q] = d.probs()[q] * std::cos(alpha * static_cast<double>(q));
        im[q] = d.probs()[q] * std::sin(alpha * static_cast<double>(q));
    }
    return {numeric::pairwise_sum(re), numeric::pairwise_sum(im)};
}

std::complex<double> generating_function(const State &state, double alpha) {
    return generating_function(charge_distribution(state), alpha);
}

std::vector<double>
invert_generating_function(const std::function<std::complex<double>(double)> &gf,
                           int max_charge) {
    if (max_charge < 0) {
        throw ArgumentError("max_charge must be non-negative");
    }
    const int m = max_charge + 1;
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        samples[static_cast<std::size_t>(k)] = gf(2.0 * std::numbers::pi * k / m);
    }
    std::vector<double> probs(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) {
        std::complex<double> acc{0, 0};
        for (int k = 0; k < m; ++k) {
            const double phase =
                -2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(k) * q) % m) / m;
            acc += samples[static_cast<std::size_t>(k)] *
                   std::complex<double>(std::cos(phase), std::sin(phase));
        }
        probs[static_cast<std::size_t>(q)] = acc.real() / m;
    }
    return probs;
}

} // namespace asymlab
