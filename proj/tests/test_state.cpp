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
#include <cstdlib>

#include <doctest.h>

#include "asymlab/errors.hpp"
#include "asymlab/state.hpp"
#include "oracles.hpp"

using namespace asymlab;

namespace {

const Eigen::Vector2cd kZero(1.0, 0.0);
const Eigen::Vector2cd kPlus(M_SQRT1_2, M_SQRT1_2);

class ScopedCap {
  public:
    explicit ScopedCap(const char *value) { setenv("ASYMLAB_MAX_QUBITS", value, 1); }
    ~ScopedCap() { unsetenv("ASYMLAB_MAX_QUBITS"); }
};

} // namespace

TEST_CASE("product states") {
    const std::vector<LocalState> zeros(3, kZero);
    const auto psi = std::get<StateVector>(product_state(zeros));
    CVector expected = CVector::Zero(8);
    expected[0] = 1.0;
    CHECK((psi.amplitudes() - expected).norm() < 1e-15);

    const std::vector<LocalState> plus(2, kPlus);
    CHECK((std::get<StateVector>(product_state(plus)).amplitudes() - CVector::Constant(4, 0.5)).norm() <
          1e-15);

    const std::vector<double> x{0.2, 0.7};
    const auto b = bernoulli_product_state(x);
    const double want[] = {std::sqrt(0.14), std::sqrt(0.06), std::sqrt(0.56), std::sqrt(0.24)};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(b[i] - want[i]) < 1e-15);
    }
    const auto dense = oracle::kron_vectors({Eigen::Vector2cd(std::sqrt(0.2), std::sqrt(0.8)),
                                             Eigen::Vector2cd(std::sqrt(0.7), std::sqrt(0.3))});
    CHECK((b.amplitudes() - dense).norm() < 1e-15);
}

TEST_CASE("mixed local states promote to a density matrix") {
    Eigen::Matrix2cd half = Eigen::Matrix2cd::Identity() / 2.0;
    const std::vector<LocalState> locals{kZero, half};
    const State s = product_state(locals);
    REQUIRE(std::holds_alternative<DensityMatrix>(s));
    const auto &rho = std::get<DensityMatrix>(s);
    CHECK(std::abs(rho.purity() - 0.5) < 1e-15);
    CHECK(std::abs(rho.matrix()(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(rho.matrix()(1, 1) - 0.5) < 1e-15);
}

TEST_CASE("structural validation") {
    CHECK_THROWS_AS(StateVector(2, CVector::Ones(4)), ValidationError);
    CHECK_THROWS_AS(StateVector(2, CVector::Ones(3)), ArgumentError);
    CMatrix not_hermitian = CMatrix::Identity(2, 2) / 2.0;
    not_hermitian(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix(1, not_hermitian), ValidationError);
    CHECK_THROWS_AS(DensityMatrix(1, CMatrix::Identity(2, 2)), ValidationError);
    CHECK_THROWS_AS((void)StateVector::basis_state(2, 4), ArgumentError);
    const std::vector<LocalState> bad{Eigen::Vector2cd(1.0, 1.0)};
    CHECK_THROWS_AS((void)product_state(bad), ValidationError);
    Eigen::Matrix2cd negative;
    negative << 1.2, 0, 0, -0.2;
    const std::vector<LocalState> bad_dm{negative};
    CHECK_THROWS_AS((void)product_state(bad_dm), InvalidStateError);
    const std::vector<double> out_of_range{1.5};
    CHECK_THROWS_AS((void)bernoulli_product_state(out_of_range), ArgumentError);
}

TEST_CASE("GHZ state") {
    const auto g = ghz_state(3);
    CHECK(std::abs(g[0] - M_SQRT1_2) < 1e-15);
    CHECK(std::abs(g[7] - M_SQRT1_2) < 1e-15);
    CHECK(std::abs(g.amplitudes().norm() - 1.0) < 1e-15);
}

TEST_CASE("random states are reproducible and normalized") {
    const auto a = random_state(1, 7);
    const auto b = random_state(1, 7);
    CHECK(a.amplitudes() == b.amplitudes());
    CHECK(random_state(1, 8).amplitudes() != a.amplitudes());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(std::abs(random_state(3, seed).amplitudes().norm() - 1.0) < 1e-12);
        CHECK(std::abs(random_product_state(3, seed).amplitudes().norm() - 1.0) < 1e-12);
    }
    const auto rho = random_density_matrix(2, 3);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    CHECK(rho.purity() < 1.0);
}

TEST_CASE("Haar ensemble has zero mean magnetization") {
    const CMatrix z0 = oracle::site_operator(2, 0, oracle::pauli('Z'));
    const int samples = 1000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
        const CVector v = random_state(2, 9000 + s).amplitudes();
        const double m = (v.adjoint() * z0 * v)(0, 0).real();
        sum += m;
        sum_sq += m * m;
    }
    const double mean = sum / samples;
    const double sd = std::sqrt((sum_sq / samples - mean * mean) / samples);
    CHECK(std::abs(mean) < 5.0 * sd);
}

TEST_CASE("capacity caps") {
    CHECK(capacity_limits().max_statevector_qubits == 24);
    CHECK(capacity_limits().max_density_qubits == 12);
    CHECK_THROWS_AS((void)random_state(25, 0), ResourceError);
    CHECK_THROWS_AS((void)random_density_matrix(13, 0), ResourceError);
    {
        ScopedCap cap("4");
        CHECK(capacity_limits().max_statevector_qubits == 4);
        CHECK(capacity_limits().max_density_qubits == 4);
        CHECK_THROWS_AS((void)random_state(5, 0), ResourceError);
        CHECK_THROWS_AS((void)ghz_state(5), ResourceError);
    }
    {
        ScopedCap cap("garbage");
        CHECK(capacity_limits().max_statevector_qubits == 24);
    }
}

TEST_CASE("conversions") {
    const State s = ghz_state(2);
    CHECK(num_qubits(s) == 2);
    CHECK(is_pure_representation(s));
    const auto rho = to_density_matrix(s);
    CHECK(std::abs(rho.purity() - 1.0) < 1e-14);
    CHECK(std::abs(rho.matrix()(0, 3) - 0.5) < 1e-15);
}
