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
#include <random>
#include <sstream>

#include <doctest.h>

#include "asymlab/circuit.hpp"
#include "asymlab/closed_forms.hpp"
#include "asymlab/clustering.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/u1.hpp"

using namespace asymlab;

namespace {

const Eigen::Matrix2cd kCharge = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
const Eigen::Vector2cd kPlus(M_SQRT1_2, M_SQRT1_2);

Eigen::Matrix2cd random_unit_norm_hermitian(std::mt19937_64 &rng) {
    const CMatrix g = random_unitary(2, rng);
    Eigen::Matrix2cd h = g + g.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    return h / es.eigenvalues().cwiseAbs().maxCoeff();
}

StateVector bell_layer(int n) {
    Layer layer;
    for (int s = 0; s + 1 < n; s += 2) {
        layer.push_back({{s}, gates::hadamard()});
    }
    Layer cnots;
    for (int s = 0; s + 1 < n; s += 2) {
        cnots.push_back({{s, s + 1}, gates::cnot()});
    }
    return apply_circuit(StateVector::basis_state(n, 0), BrickworkCircuit(LatticeGeometry(1, n), {layer, cnots}));
}

} // namespace

TEST_CASE("connected correlators") {
    const std::vector<LocalState> locals{kPlus, Eigen::Vector2cd(0.6, 0.8), kPlus, Eigen::Vector2cd(1.0, 0.0)};
    const State product = product_state(locals);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) {
                CHECK(std::abs(connected_correlator(product, i, kCharge, j, kCharge)) < 1e-12);
            }
        }
    }
    CHECK(std::abs(connected_correlator(ghz_state(6), 0, kCharge, 5, kCharge) - 0.25) < 1e-14);
    const State bell = bell_layer(4);
    CHECK(std::abs(std::abs(connected_correlator(bell, 0, kCharge, 1, kCharge)) - 0.25) < 1e-14);
    CHECK(std::abs(connected_correlator(bell, 1, kCharge, 2, kCharge)) < 1e-14);
    CHECK_THROWS_AS((void)connected_correlator(bell, 1, kCharge, 1, kCharge), ArgumentError);
}

TEST_CASE("connected correlators of unit-norm observables are at most 2") {
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const State s = seed % 2 == 0 ? State(random_state(4, seed)) : State(random_density_matrix(4, seed));
        const auto a = random_unit_norm_hermitian(rng);
        const auto b = random_unit_norm_hermitian(rng);
        CHECK(std::abs(connected_correlator(s, 0, a, 2, b)) <= 2.0);
    }
}

TEST_CASE("cluster scans") {
    const LatticeGeometry ring(1, 8);
    const auto product = verify_cluster_property(random_product_state(8, 2), 0, ring);
    CHECK(product.effective_range == 0);
    CHECK(product.clusters());
    CHECK(product.pairs.size() == 28);

    const auto ghz = verify_cluster_property(ghz_state(8), 0, ring);
    CHECK(ghz.effective_range == ring.diameter());
    CHECK_FALSE(ghz.clusters());
    CHECK(ghz.max_violation > 0.2);

    const auto kink = verify_cluster_property(kink_state(8), 1, ring);
    CHECK_FALSE(kink.clusters());
    const auto dicke = verify_cluster_property(dicke_state(8, 4, DickeAxis::x), 1, ring);
    CHECK_FALSE(dicke.clusters());
    CHECK(dicke.effective_range == ring.diameter());

    const auto j = ghz.to_json();
    CHECK(j.at("effective_range") == ring.diameter());
    CHECK(j.at("clusters") == false);
    std::ostringstream csv;
    ghz.write_csv(csv);
    const std::string text = csv.str();
    CHECK(text.rfind("i,j,distance,charge_connected,max_pauli_connected\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 29);
}

TEST_CASE("operator spreading") {
    const LatticeGeometry ring(1, 8);
    CHECK(operator_spreading_range(BrickworkCircuit(ring, {})) == 0);
    const Layer swaps{{{0, 1}, gates::swap()}, {{2, 3}, gates::swap()}, {{4, 5}, gates::swap()},
                      {{6, 7}, gates::swap()}};
    CHECK(operator_spreading_range(BrickworkCircuit(ring, {swaps})) == 1);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(operator_spreading_range(random_brickwork(ring, 2, seed)) <= 2);
    }
}

TEST_CASE("variance bound check") {
    const std::vector<LocalState> plus(10, kPlus);
    const auto ok = variance_bound_check(product_state(plus), 0, LatticeGeometry(1, 10));
    CHECK(std::abs(ok.lhs - 2.5) < 1e-12);
    CHECK(ok.rhs == 20.0);
    CHECK(ok.passed());
    CHECK(variance_bound_check(kink_state(10), 10, LatticeGeometry(1, 10)).passed());
    const auto ghz = variance_bound_check(ghz_state(10), 0, LatticeGeometry(1, 10));
    CHECK(std::abs(ghz.lhs - 25.0) < 1e-12);
    CHECK_FALSE(ghz.passed());
}

TEST_CASE("brickwork outputs cluster within the light cone") {
    int cases = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const bool square = seed % 5 == 0;
        const LatticeGeometry g = square ? LatticeGeometry(2, 3) : LatticeGeometry(1, 6 + 2 * static_cast<int>(seed % 5));
        const int depth = 1 + static_cast<int>(seed % 3);
        const auto c = random_brickwork(g, depth, 7000 + seed);
        const auto psi = apply_circuit(random_product_state(g.num_sites(), 8000 + seed), c);
        const int lambda = operator_spreading_range(c);
        CHECK(lambda <= lightcone_range(depth));
        const int range = 2 * lightcone_range(depth);
        const auto report = verify_cluster_property(psi, range, g);
        CHECK(report.effective_range <= 2 * lambda);
        CHECK(report.max_violation <= 1e-10);
        CHECK(variance_bound_check(psi, range, g).passed());
        CHECK(u1_asymmetry(psi, ClusteringHypothesis{g, range}).all_passed());
        ++cases;
    }
    CHECK(cases == 50);
}
