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
#include <filesystem>
#include <random>

#include <doctest.h>

#include "asymlab/circuit.hpp"
#include "asymlab/entropy.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/observables.hpp"
#include "asymlab/schur.hpp"
#include "asymlab/su2.hpp"
#include "oracles.hpp"

using namespace asymlab;

namespace {

const Eigen::Vector2cd kPlus(M_SQRT1_2, M_SQRT1_2);

CVector singlet() {
    CVector v = CVector::Zero(4);
    v[1] = M_SQRT1_2;
    v[2] = -M_SQRT1_2;
    return v;
}

const SchurBasis &basis(int n) { return *build_schur_basis(n); }

CMatrix twirl(const CMatrix &rho, int n) { return su2_twirl_matrix(rho, basis(n)); }

double su2_delta(const State &s) { return su2_asymmetry(s, basis(num_qubits(s))).delta_s; }

Eigen::Matrix2cd random_su2(std::mt19937_64 &rng) {
    Eigen::Matrix2cd u = random_unitary(2, rng);
    return u / std::sqrt(u.determinant());
}

} // namespace

TEST_CASE("two-qubit Schur basis") {
    const auto &b = basis(2);
    CHECK(b.multiplicity(2) == 1);
    CHECK(b.multiplicity(0) == 1);
    CHECK(b.multiplicity(1) == 0);
    REQUIRE(b.block_labels(1).size() == 2);
    CHECK(b.block_labels(1)[0] == SchurLabel{2, 0, 0});
    CHECK(b.block_labels(1)[1] == SchurLabel{0, 0, 0});
    const Eigen::Vector2d s = b.block(1).col(1);
    CHECK(std::abs(std::abs(s[0]) - M_SQRT1_2) < 1e-15);
    CHECK(std::abs(s[0] + s[1]) < 1e-15);
    CHECK(b.strings(1) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("multiplicities") {
    CHECK(schur_multiplicity(4, 0) == 2);
    CHECK(schur_multiplicity(4, 2) == 3);
    CHECK(schur_multiplicity(4, 4) == 1);
    for (int n = 2; n <= 30; n += 2) {
        std::int64_t total = 0;
        for (int ts = 0; ts <= n; ts += 2) {
            total += (ts + 1) * schur_multiplicity(n, ts);
        }
        CHECK(total == (std::int64_t{1} << n));
    }
    const auto &b = basis(4);
    CHECK(2 * 1 + 3 * 3 + 5 * 1 == 16);
    CHECK(b.multiplicity(0) == 2);
    CHECK(b.multiplicity(2) == 3);
    CHECK(b.multiplicity(4) == 1);
}

TEST_CASE("odd or oversized N is rejected") {
    CHECK_THROWS_AS(SchurBasis(3), DomainError);
    CHECK_THROWS_AS(SchurBasis(0), DomainError);
    CHECK_THROWS_AS(SchurBasis(14), ResourceError);
}

TEST_CASE("Schur basis is orthogonal and reproduces S^2 and S^z") {
    for (int n = 2; n <= 12; n += 2) {
        const auto &b = basis(n);
        double worst = 0.0;
        for (int w = 0; w <= n; ++w) {
            const auto &blk = b.block(w);
            const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(blk.cols(), blk.cols());
            worst = std::max(worst, (blk.transpose() * blk - id).cwiseAbs().maxCoeff());
            worst = std::max(worst, (blk * blk.transpose() - id).cwiseAbs().maxCoeff());
        }
        CHECK(worst <= 1e-10);
    }
    for (int n = 2; n <= 6; n += 2) {
        const Eigen::MatrixXd u = basis(n).dense();
        CMatrix s2 = CMatrix::Zero(u.rows(), u.rows());
        for (char a : {'X', 'Y', 'Z'}) {
            const CMatrix s = oracle::spin(n, a);
            s2 += s * s;
        }
        const CMatrix in_schur = u.transpose().cast<cplx>() * s2 * u.cast<cplx>();
        const CMatrix sz = u.transpose().cast<cplx>() * oracle::spin(n, 'Z') * u.cast<cplx>();
        const auto labels = basis(n).labels();
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            const double s = labels[static_cast<std::size_t>(c)].s();
            CHECK(std::abs(in_schur(c, c) - s * (s + 1)) < 1e-12);
            CHECK(std::abs(sz(c, c) - labels[static_cast<std::size_t>(c)].m()) < 1e-12);
        }
        CHECK((in_schur - CMatrix(in_schur.diagonal().asDiagonal())).norm() < 1e-12);
    }
}

TEST_CASE("basis cache and files") {
    CHECK(build_schur_basis(4) == build_schur_basis(4));
    const auto dir = std::filesystem::temp_directory_path() / "asymlab_schur_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto file = dir / "basis.bin";
    basis(6).save(file);
    const auto loaded = SchurBasis::load(file);
    CHECK(loaded.n_qubits() == 6);
    CHECK((loaded.dense() - basis(6).dense()).norm() == 0.0);
    CHECK(loaded.labels() == basis(6).labels());
    CHECK(std::filesystem::exists(dir / "basis.json"));
    const auto cached = build_schur_basis(8, dir);
    CHECK(std::filesystem::exists(dir / "schur_N8.bin"));
    CHECK(cached->n_qubits() == 8);
    std::filesystem::remove_all(dir);
}

TEST_CASE("sector distribution") {
    const auto t = sector_distribution(StateVector(2, singlet()), basis(2));
    CHECK(std::abs(t.p(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(t.p_s[0] - 1.0) < 1e-15);
    const auto up = sector_distribution(StateVector::basis_state(2, 0), basis(2));
    CHECK(std::abs(up.p(1, 1) - 1.0) < 1e-15);
    const std::vector<LocalState> plus(4, kPlus);
    const State plus4 = product_state(plus);
    const auto tab = sector_distribution(plus4, basis(4));
    const CVector v = std::get<StateVector>(plus4).amplitudes();
    for (const auto &w : oracle::sector_weights(v * v.adjoint(), 4)) {
        CHECK(std::abs(tab.p(w.twice_s / 2, w.twice_m / 2) - w.p) < 1e-12);
    }
    const auto rho = random_density_matrix(4, 5);
    const auto tab_rho = sector_distribution(rho, basis(4));
    for (const auto &w : oracle::sector_weights(rho.matrix(), 4)) {
        CHECK(std::abs(tab_rho.p(w.twice_s / 2, w.twice_m / 2) - w.p) < 1e-12);
    }
}

TEST_CASE("SU(2) twirl examples") {
    const CMatrix s = singlet() * singlet().adjoint();
    CHECK((twirl(s, 2) - s).norm() < 1e-15);
    CMatrix up = CMatrix::Zero(4, 4);
    up(0, 0) = 1.0;
    CMatrix triplet = CMatrix::Identity(4, 4) - s;
    CHECK((twirl(up, 2) - triplet / 3.0).norm() < 1e-15);
    CHECK((oracle::haar_twirl(up, 2, 7) - triplet / 3.0).norm() < 1e-6);
    CHECK(std::abs(su2_delta(StateVector::basis_state(2, 0)) - std::log(3.0)) < 1e-12);
    CHECK(std::abs(std::log(3.0) - 1.0986) < 1e-4);
}

TEST_CASE("SU(2) twirl agrees with Haar quadrature") {
    for (int n : {2, 4}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const CMatrix rho = seed == 0 ? CMatrix(to_density_matrix(random_state(n, 7)).matrix())
                                          : random_density_matrix(n, seed).matrix();
            const CMatrix coarse = oracle::haar_twirl(rho, n, 2 * n + 3);
            const CMatrix fine = oracle::haar_twirl(rho, n, 2 * n + 5);
            REQUIRE((coarse - fine).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((twirl(rho, n) - fine).cwiseAbs().maxCoeff() < 1e-6);
        }
    }
}

TEST_CASE("SU(2) twirl is idempotent, trace preserving and covariant") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 6; n += 2) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto rho = random_density_matrix(n, 40 + seed);
            const CMatrix once = twirl(rho.matrix(), n);
            CHECK((twirl(once, n) - once).cwiseAbs().maxCoeff() < 1e-10);
            CHECK(std::abs(once.trace().real() - 1.0) < 1e-10);
            const CMatrix big_u = oracle::uniform_operator(n, random_su2(rng));
            const CMatrix lhs = twirl(big_u * rho.matrix() * big_u.adjoint(), n);
            const CMatrix rhs = big_u * once * big_u.adjoint();
            CHECK((lhs - once).cwiseAbs().maxCoeff() < 1e-8);
            CHECK((rhs - once).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
}

TEST_CASE("SU(2) asymmetry") {
    CHECK(std::abs(su2_delta(StateVector(2, singlet()))) < 1e-12);
    for (int n : {2, 4, 6, 8}) {
        CHECK(std::abs(su2_delta(StateVector::basis_state(n, 0)) - std::log(n + 1.0)) < 1e-10);
    }
    for (int k = 0; k < 200; ++k) {
        const auto psi = random_state(4, 500 + k);
        const auto r = su2_asymmetry(psi, basis(4));
        const auto t = sector_distribution(psi, basis(4));
        REQUIRE(r.delta_s <= su2_shannon_rhs(t) + 1e-9);
        CHECK(r.delta_s >= -1e-10);
        CHECK(r.all_passed());
    }
    CHECK(std::abs(su2_general_bound(2) - std::log(4.0)) < 1e-15);
    CHECK(std::abs(su2_general_bound(4) - std::log(1 * 1 + 3 * 3 + 5 * 1.0)) < 1e-15);
}

TEST_CASE("SU(2) asymmetry vanishes exactly on invariant states") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = seed % 2 == 0 ? 2 : 4;
        const auto rho = random_density_matrix(n, 600 + seed);
        const auto sym = su2_twirl(rho, basis(n));
        CHECK(std::abs(su2_delta(sym)) < 1e-10);
        CHECK(su2_delta(rho) > 1e-10);
    }
}

TEST_CASE("Shannon functional") {
    SectorTable t;
    t.n_qubits = 2;
    t.p_s = {1.0, 0.0};
    t.p_sm = {{1.0}, {0.0, 0.0, 0.0}};
    t.multiplicities = {1, 1};
    CHECK(su2_shannon_rhs(t) == 0.0);
    t.p_s = {0.0, 1.0};
    t.p_sm = {{0.0}, {1 / 3.0, 1 / 3.0, 1 / 3.0}};
    CHECK(std::abs(su2_shannon_rhs(t) - 2.0 * std::log(3.0)) < 1e-15);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 2 + 2 * static_cast<int>(seed % 3);
        const auto tab = sector_distribution(random_density_matrix(n, seed), basis(n));
        CHECK(su2_shannon_rhs(tab) <= std::log(n + 1.0) + 2.0 * std::log(n / 2.0 + 1.0) + 1e-12);
    }
}

TEST_CASE("gauge rotation") {
    const auto up = zero_transverse_rotation(StateVector::basis_state(4, 0));
    CHECK((up.u - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
    const auto zero_m = zero_transverse_rotation(StateVector(2, singlet()));
    CHECK((zero_m.u - Eigen::Matrix2cd::Identity()).norm() < 1e-15);

    const std::vector<LocalState> plus(4, kPlus);
    const auto r = zero_transverse_rotation(product_state(plus));
    const Eigen::Vector3d m = magnetization(r.state);
    CHECK(std::abs(m.x()) < 1e-12);
    CHECK(std::abs(m.y()) < 1e-12);
    CHECK(std::abs(m.z() - 2.0) < 1e-12);

    const std::vector<LocalState> down(2, Eigen::Vector2cd(0.0, 1.0));
    const auto flipped = zero_transverse_rotation(product_state(down));
    CHECK(std::abs(magnetization(flipped.state).z() - 1.0) < 1e-12);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 2 + 2 * static_cast<int>(seed % 3);
        const State s = seed % 2 == 0 ? State(random_state(n, seed)) : State(random_density_matrix(n, seed));
        const auto g = zero_transverse_rotation(s);
        const Eigen::Vector3d mg = magnetization(g.state);
        CHECK(std::abs(mg.x()) <= 1e-9);
        CHECK(std::abs(mg.y()) <= 1e-9);
        CHECK(mg.z() >= 0.0);
        CHECK((g.u.adjoint() * g.u - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
        CHECK(std::abs(su2_delta(g.state) - su2_delta(s)) < 1e-9);
    }
}

TEST_CASE("Casimir constraint") {
    const LatticeGeometry ring4(1, 4);
    const auto product = casimir_constraint_check(StateVector::basis_state(4, 0), 0, ring4);
    CHECK(std::abs(product.casimir_lhs - 2.0) < 1e-12);
    CHECK(product.bound == doctest::Approx(6.0));
    CHECK(product.passed());
    CHECK(casimir_constant(LatticeGeometry(1, 10), 2) == 7.5);

    const LatticeGeometry ring8(1, 8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto psi = apply_circuit(random_product_state(8, seed), random_brickwork(ring8, 1, seed));
        const auto fixed = zero_transverse_rotation(psi);
        CHECK(casimir_constraint_check(fixed.state, 2, ring8).passed());
    }

    const auto ghz = casimir_constraint_check(ghz_state(8), 0, ring8);
    CHECK(ghz.casimir_passed());
    CHECK_FALSE(ghz.precursor_passed());
    CHECK_FALSE(ghz.passed());
    CHECK(std::abs(ghz.precursor_lhs - 20.0) < 1e-12);

    const std::vector<LocalState> plus(4, kPlus);
    CHECK_THROWS_AS((void)casimir_constraint_check(product_state(plus), 0, ring4), PreconditionError);
    CHECK_THROWS_AS((void)casimir_constraint_check(ghz_state(8), 0, ring4), ArgumentError);
}
