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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "asymlab/circuit.hpp"
#include "asymlab/closed_forms.hpp"
#include "asymlab/entropy.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/u1.hpp"
#include "oracles.hpp"

using namespace asymlab;

namespace {

const Eigen::Vector2cd kPlus(M_SQRT1_2, M_SQRT1_2);

std::vector<double> probs(const State &s) { return charge_distribution(s).probs(); }

// Haar unitary on each charge sector, embedded densely.
CMatrix charge_conserving_unitary(int n, std::mt19937_64 &rng) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix u = CMatrix::Zero(dim, dim);
    for (int q = 0; q <= n; ++q) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (basis_charge(static_cast<std::uint64_t>(i), n) == q) {
                idx.push_back(i);
            }
        }
        const CMatrix block = random_unitary(static_cast<Eigen::Index>(idx.size()), rng);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) {
                u(idx[r], idx[c]) = block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return u;
}

double delta_s(const DensityMatrix &rho) { return u1_asymmetry(State(rho)).delta_s; }

} // namespace

TEST_CASE("charge distributions") {
    CHECK(probs(StateVector::basis_state(4, 0)) == std::vector<double>{0, 0, 0, 0, 1});
    CHECK(basis_charge(0b0101, 4) == 2);
    CHECK(basis_charge(0, 3) == 3);
    const std::vector<LocalState> plus(2, kPlus);
    const auto p = probs(product_state(plus));
    CHECK(std::abs(p[0] - 0.25) < 1e-15);
    CHECK(std::abs(p[1] - 0.5) < 1e-15);
    CHECK(std::abs(p[2] - 0.25) < 1e-15);
    const auto kink = probs(kink_state(4));
    CHECK(kink[0] == 0.0);
    for (int q = 1; q <= 4; ++q) {
        CHECK(std::abs(kink[static_cast<std::size_t>(q)] - 0.25) < 1e-15);
    }
    const auto rho = random_density_matrix(3, 1);
    const auto want = oracle::charge_distribution(rho.matrix(), 3);
    for (int q = 0; q <= 3; ++q) {
        CHECK(std::abs(charge_distribution(rho)[q] - want[static_cast<std::size_t>(q)]) < 1e-15);
    }
}

TEST_CASE("ChargeDistribution validation and moments") {
    CHECK_THROWS_AS(ChargeDistribution({0.5, 0.6}), ValidationError);
    CHECK_THROWS_AS(ChargeDistribution({1.1, -0.1}), ValidationError);
    CHECK_THROWS_AS(ChargeDistribution({}), ArgumentError);
    const ChargeDistribution clamped({1.0 + 1e-13, -1e-13});
    CHECK(clamped[1] == 0.0);
    const ChargeDistribution d({0.25, 0.5, 0.25});
    CHECK(d.mean() == doctest::Approx(1.0));
    CHECK(d.variance() == doctest::Approx(0.5));
}

TEST_CASE("Shannon entropy of charge laws") {
    CHECK(shannon_entropy(ChargeDistribution({0.0, 1.0, 0.0})) == 0.0);
    CHECK(std::abs(shannon_entropy(flat_distribution(4)) - std::log(5.0)) < 1e-15);
    const ChargeDistribution binom({1 / 16.0, 4 / 16.0, 6 / 16.0, 4 / 16.0, 1 / 16.0});
    CHECK(std::abs(shannon_entropy(binom) - oracle::shannon(binom.probs())) < 1e-15);
    CHECK(std::abs(shannon_entropy(binom) - 1.4075) < 1e-4);
}

TEST_CASE("U(1) twirl") {
    const DensityMatrix plus(1, CMatrix::Constant(2, 2, 0.5));
    CHECK((u1_twirl(plus).matrix() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-15);
    const auto symmetric = u1_twirl(random_density_matrix(3, 2));
    CHECK((u1_twirl(symmetric).matrix() - symmetric.matrix()).norm() < 1e-15);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto rho = random_density_matrix(3, seed);
        CHECK((u1_twirl(rho).matrix() - oracle::charge_dephase(rho.matrix(), 3)).norm() < 1e-15);
        CHECK(std::abs(u1_twirled_entropy(rho) - oracle::entropy(oracle::charge_dephase(rho.matrix(), 3))) <
              1e-10);
    }
}

TEST_CASE("U(1) asymmetry examples") {
    CHECK(u1_asymmetry(StateVector::basis_state(5, 0)).delta_s == 0.0);
    for (int n : {2, 4, 7, 10}) {
        const auto r = u1_asymmetry(kink_state(n));
        CHECK(std::abs(r.delta_s - std::log(static_cast<double>(n))) < 1e-12);
        CHECK(r.bound("log_n_plus_1")->passed());
        const auto flat = u1_report_from_distribution(flat_distribution(n));
        CHECK(std::abs(flat.delta_s - std::log(n + 1.0)) < 1e-12);
        CHECK(std::abs(flat.bound("log_n_plus_1")->margin()) < 1e-12);
    }
    const CVector pp = oracle::kron_vectors({kPlus, kPlus});
    const CMatrix rho = 0.5 * pp * pp.adjoint() + 0.5 * CMatrix::Identity(4, 4) / 4.0;
    const auto r = u1_asymmetry(DensityMatrix(2, rho));
    const double want = oracle::entropy(oracle::charge_dephase(rho, 2)) - oracle::entropy(rho);
    CHECK(std::abs(r.delta_s - want) < 1e-12);
    CHECK(r.all_passed());
}

TEST_CASE("Massey and clustering bounds") {
    CHECK(std::abs(massey_bound(0.25) - 0.8696) < 1e-4);
    CHECK(std::log(2.0) < massey_bound(0.25));
    CHECK(std::abs(massey_bound(1.0 / 12.0) - 0.5 * std::log(std::numbers::pi * std::numbers::e / 3.0)) <
          1e-15);
    CHECK_THROWS_AS((void)massey_bound(0.0), DomainError);
    CHECK_THROWS_AS((void)massey_bound(-1.0), DomainError);
    CHECK(clustering_variance_bound(LatticeGeometry(1, 10), 0) == 20.0);
    CHECK(clustering_variance_bound(LatticeGeometry(1, 10), 2) == 100.0);
    CHECK(clustering_variance_bound(LatticeGeometry(2, 3), 1) == 90.0);
    CHECK(std::abs(clustering_asymmetry_bound(LatticeGeometry(1, 10), 2) -
                   0.5 * std::log(2 * std::numbers::pi * std::numbers::e * (100.0 + 1.0 / 12.0))) < 1e-15);
    CHECK_THROWS_AS((void)u1_asymmetry(random_state(3, 0), ClusteringHypothesis{LatticeGeometry(1, 4), 1}),
                    ArgumentError);
}

TEST_CASE("generating function") {
    const auto psi = random_state(4, 3);
    CHECK(std::abs(generating_function(State(psi), 0.0) - 1.0) < 1e-14);
    const cplx i(0.0, 1.0);
    for (int k = 1; k <= 50; ++k) {
        const double a = 0.123 * k;
        const int n = 6;
        // Charges run over 1..N, which adds a factor e^{i a} to the geometric sum.
        const cplx kink = std::exp(i * a) * (std::exp(i * a * double(n)) - 1.0) /
                          (double(n) * (std::exp(i * a) - 1.0));
        CHECK(std::abs(generating_function(kink_distribution(n), a) - kink) < 1e-13);
        CHECK(std::abs(generating_function(State(kink_state(n)), a) - kink) < 1e-13);
        const std::vector<LocalState> plus(static_cast<std::size_t>(n), kPlus);
        CHECK(std::abs(generating_function(product_state(plus), a) - std::pow((1.0 + std::exp(i * a)) / 2.0, n)) <
              1e-13);
    }
    const auto d = charge_distribution(psi);
    const auto gf = [&](double a) { return generating_function(d, a); };
    const auto back = invert_generating_function(gf, 4);
    const auto ref = oracle::dft_inverse(gf, 4);
    for (int q = 0; q <= 4; ++q) {
        CHECK(std::abs(back[static_cast<std::size_t>(q)] - d[q]) < 1e-14);
        CHECK(std::abs(ref[static_cast<std::size_t>(q)] - d[q]) < 1e-14);
    }
}

TEST_CASE("pure states saturate the Shannon bound") {
    for (int k = 0; k < 200; ++k) {
        const int n = 1 + k % 6;
        const auto psi = random_state(n, 1000 + k);
        const double h = shannon_entropy(charge_distribution(psi));
        const double mixed_path = delta_s(to_density_matrix(psi));
        REQUIRE(std::abs(mixed_path - h) < 1e-9);
        CHECK(std::abs(u1_asymmetry(psi).delta_s - h) < 1e-15);
    }
}

TEST_CASE("bounds hold on random states") {
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + k % 6;
        const State s = k % 2 == 0 ? State(random_state(n, 2000 + k)) : State(random_density_matrix(n, 2000 + k));
        const auto r = u1_asymmetry(s);
        CHECK(r.delta_s >= -1e-12);
        CHECK(r.delta_s <= std::log(n + 1.0) + 1e-9);
        CHECK(r.delta_s <= r.shannon + 1e-9);
        const auto d = charge_distribution(s);
        if (d.variance() > 0) {
            CHECK(shannon_entropy(d) < massey_bound(d.variance()));
        }
        CHECK(r.all_passed());
    }
}

TEST_CASE("circuit outputs obey the clustering chain") {
    for (int d = 1; d <= 2; ++d) {
        const LatticeGeometry g(d, d == 1 ? 10 : 3);
        for (int depth = 1; depth <= 3; ++depth) {
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                const auto c = random_brickwork(g, depth, 31 * seed + depth);
                const auto psi = apply_circuit(random_product_state(g.num_sites(), seed), c);
                const int range = 2 * lightcone_range(depth);
                const auto r = u1_asymmetry(psi, ClusteringHypothesis{g, range});
                const auto dist = charge_distribution(psi);
                CHECK(dist.variance() <= clustering_variance_bound(g, range) + 1e-9);
                CHECK(r.delta_s <= clustering_asymmetry_bound(g, range) + 1e-9);
                CHECK(r.bound("clustering")->passed());
                CHECK(r.all_passed());
            }
        }
    }
}

TEST_CASE("zero asymmetry exactly on symmetric states") {
    for (int k = 0; k < 40; ++k) {
        const int n = 1 + k % 4;
        const auto rho = random_density_matrix(n, 3000 + k);
        const auto sym = u1_twirl(rho);
        CHECK(std::abs(delta_s(sym)) < 1e-10);
        const double offdiag = (rho.matrix() - u1_twirl(rho).matrix()).norm();
        CHECK(offdiag > 1e-10);
        CHECK(delta_s(rho) > 1e-10);
    }
}

TEST_CASE("asymmetry is monotone under symmetric operations") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 40; ++k) {
        const int n = 1 + k % 5;
        const auto rho = random_density_matrix(n, 4000 + k);
        const double before = delta_s(rho);
        const CMatrix u = charge_conserving_unitary(n, rng);
        const DensityMatrix rotated(n, u * rho.matrix() * u.adjoint());
        CHECK(delta_s(rotated) <= before + 1e-9);
        const auto dephased = apply_channel(rho, channels::dephasing(k % n, 0.1 + 0.02 * k));
        CHECK(delta_s(dephased) <= before + 1e-9);
    }
}
