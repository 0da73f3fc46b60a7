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

#include "asymlab/suite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "asymlab/circuit.hpp"
#include "asymlab/closed_forms.hpp"
#include "asymlab/clustering.hpp"
#include "asymlab/entropy.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/numeric.hpp"
#include "asymlab/observables.hpp"
#include "asymlab/u1.hpp"

namespace asymlab {

namespace {

constexpr double kMatrixTolerance = 1e-10;
constexpr double kEntropyTolerance = 1e-9;
constexpr double kCovarianceTolerance = 1e-8;
constexpr double kIdempotenceTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-10;
constexpr double kHaarTolerance = 1e-6;

class Tally {
  public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    /// Record one sample with slack `margin` (>= 0 passes, > 0 if strict).
    void observe(double margin, const std::string &inputs, bool strict = false) {
        ++result_.samples;
        const bool ok = strict ? margin > 0.0 : margin >= 0.0;
        const double key = std::isnan(margin) ? -std::numeric_limits<double>::infinity() : margin;
        if (result_.samples == 1 || key < worst_) {
            worst_ = key;
            result_.margin = margin;
            result_.inputs = inputs;
        }
        result_.passed = result_.passed && ok;
    }

    /// Deviation `dev` against tolerance `tol`.
    void within(double dev, double tol, const std::string &inputs) {
        observe(tol - dev, inputs);
    }

    void fail(const std::string &why) {
        ++result_.samples;
        result_.passed = false;
        result_.margin = -std::numeric_limits<double>::infinity();
        result_.inputs = why;
        worst_ = result_.margin;
    }

    [[nodiscard]] CheckResult finish() const { return result_; }

  private:
    CheckResult result_;
    double worst_ = 0.0;
};

void run_check(SuiteResult &suite, const std::string &name,
               const std::function<void(Tally &)> &body) {
    Tally t(name);
    try {
        body(t);
    } catch (const std::exception &e) {
        t.fail(std::string("exception: ") + e.what());
    }
    suite.checks.push_back(t.finish());
}

std::string describe(const std::string &what, int n, std::uint64_t seed) {
    return what + " N=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

double max_abs(const CMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Random unitary that commutes with the charge: block diagonal over sectors.
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
        const CMatrix b = random_unitary(static_cast<Eigen::Index>(idx.size()), rng);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) {
                u(idx[r], idx[c]) = b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return u;
}

Eigen::Matrix2cd random_su2(std::mt19937_64 &rng) {
    CMatrix u = random_unitary(2, rng);
    return Eigen::Matrix2cd(u / std::sqrt(u.determinant()));
}

/// Dense u^{(x)n}.
CMatrix tensor_power(const Eigen::Matrix2cd &u, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        CMatrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * u;
            }
        }
        out = std::move(next);
    }
    return out;
}

struct CircuitCase {
    LatticeGeometry geometry;
    int depth;
    std::uint64_t seed;
};

std::vector<CircuitCase> circuit_cases(std::uint64_t seed, int count) {
    const LatticeGeometry shapes[] = {LatticeGeometry(1, 6), LatticeGeometry(1, 8),
                                      LatticeGeometry(1, 10), LatticeGeometry(2, 3)};
    std::vector<CircuitCase> out;
    for (int c = 0; c < count; ++c) {
        out.push_back({shapes[c % 4], 1 + c % 3, seed * 1000 + static_cast<std::uint64_t>(c)});
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

// ---------------------------------------------------------------- bound suite

void lattice_checks(SuiteResult &s) {
    run_check(s, "lattice.metric", [](Tally &t) {
        for (int d = 1; d <= 2; ++d) {
            for (int m = 1; m <= 6; ++m) {
                LatticeGeometry g(d, m);
                const int n = g.num_sites();
                double worst = 0.0;
                for (int i = 0; i < n; ++i) {
                    worst = std::max(worst, static_cast<double>(g.distance(i, i)));
                    for (int j = 0; j < n; ++j) {
                        worst = std::max(worst, std::abs(g.distance(i, j) - g.distance(j, i)) * 1.0);
                        for (int k = 0; k < n; ++k) {
                            worst = std::max(worst, static_cast<double>(g.distance(i, k) -
                                                                        g.distance(i, j) -
                                                                        g.distance(j, k)));
                        }
                    }
                }
                t.observe(-worst, "d=" + std::to_string(d) + " M=" + std::to_string(m));
            }
        }
    });
    run_check(s, "lattice.neighborhood", [](Tally &t) {
        for (int d = 1; d <= 2; ++d) {
            for (int m = 1; m <= 6; ++m) {
                LatticeGeometry g(d, m);
                int prev = 0;
                for (int r = 0; r <= g.diameter() + 2; ++r) {
                    const int z = g.neighborhood_cardinality(r);
                    double bad = z < prev ? 1.0 : 0.0;
                    for (int x = 0; x < g.num_sites(); ++x) {
                        if (static_cast<int>(g.ball(x, r).size()) != z) {
                            bad = 1.0;
                        }
                    }
                    if (r >= g.diameter() && z != g.num_sites()) {
                        bad = 1.0;
                    }
                    prev = z;
                    t.observe(-bad, "d=" + std::to_string(d) + " M=" + std::to_string(m) +
                                        " radius=" + std::to_string(r));
                }
            }
        }
    });
}

void core_checks(SuiteResult &s, std::uint64_t seed) {
    run_check(s, "core.unitarity", [seed](Tally &t) {
        for (const auto &cc : circuit_cases(seed, 8)) {
            if (cc.geometry.num_sites() > 8) {
                continue;
            }
            const auto circuit = random_brickwork(cc.geometry, cc.depth, cc.seed);
            const auto rho = random_density_matrix(cc.geometry.num_sites(), cc.seed);
            const auto out = apply_circuit(rho, circuit);
            const double dev = std::max(std::abs(out.matrix().trace().real() - 1.0),
                                        std::abs(out.purity() - rho.purity()));
            t.within(dev, kMatrixTolerance, describe("brickwork", cc.geometry.num_sites(), cc.seed));
        }
    });
    run_check(s, "core.channel_trace", [seed](Tally &t) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int k = 0; k < 10; ++k) {
            const int n = 2 + k % 3;
            auto rho = random_density_matrix(n, seed + static_cast<std::uint64_t>(k));
            const int site = k % n;
            const double p = unif(rng);
            const auto ch = k % 2 == 0 ? channels::depolarizing(site, p) : channels::dephasing(site, p);
            const auto out = apply_channel(rho, ch);
            t.within(std::abs(out.matrix().trace().real() - 1.0), kMatrixTolerance,
                     describe("channel p=" + fmt(p), n, seed + static_cast<std::uint64_t>(k)));
        }
    });
    run_check(s, "core.entropy_unitary_invariance", [seed](Tally &t) {
        std::mt19937_64 rng(seed + 1);
        for (int k = 0; k < 10; ++k) {
            const int n = 1 + k % 5;
            const auto rho = random_density_matrix(n, seed + 100 + static_cast<std::uint64_t>(k));
            const CMatrix u = random_unitary(rho.dimension(), rng);
            const DensityMatrix out(n, u * rho.matrix() * u.adjoint());
            t.within(std::abs(von_neumann_entropy(out) - von_neumann_entropy(rho)),
                     kEntropyTolerance, describe("random unitary", n, seed));
        }
    });
    run_check(s, "core.measurement_average", [seed](Tally &t) {
        for (int k = 0; k < 10; ++k) {
            const int n = 1 + k % 5;
            const auto rho = random_density_matrix(n, seed + 200 + static_cast<std::uint64_t>(k));
            // sum_q p_q S(rho_q / p_q) = S(G[rho]) - H(p_q)
            const double avg = u1_twirled_entropy(rho) - shannon_entropy(charge_distribution(rho));
            t.observe(von_neumann_entropy(rho) - avg + kEntropyTolerance,
                      describe("random mixed", n, seed + 200 + static_cast<std::uint64_t>(k)));
        }
    });
}

void u1_checks(SuiteResult &s, std::uint64_t seed) {
    run_check(s, "u1.pure_saturation", [seed](Tally &t) {
        for (int k = 0; k < 50; ++k) {
            const int n = 1 + k % 6;
            const auto sd = seed + 300 + static_cast<std::uint64_t>(k);
            const auto psi = random_state(n, sd);
            const auto mixed_path = u1_asymmetry(State(to_density_matrix(psi)));
            const double h = shannon_entropy(charge_distribution(psi));
            t.within(std::abs(mixed_path.delta_s - h), kEntropyTolerance, describe("random pure", n, sd));
        }
    });
    run_check(s, "u1.bounds", [seed](Tally &t) {
        for (int k = 0; k < 40; ++k) {
            const int n = 1 + k % 5;
            const auto sd = seed + 400 + static_cast<std::uint64_t>(k);
            const State st = k % 2 == 0 ? State(random_state(n, sd)) : State(random_density_matrix(n, sd));
            const auto r = u1_asymmetry(st);
            t.observe(r.delta_s + kBoundSlack, describe("nonnegativity", n, sd));
            for (const auto &b : r.bounds) {
                t.observe(b.strict ? b.margin() : b.margin() + kBoundSlack,
                          describe(b.name, n, sd), b.strict);
            }
        }
    });
    run_check(s, "u1.clustering_chain", [seed](Tally &t) {
        for (const auto &cc : circuit_cases(seed + 500, 12)) {
            const int n = cc.geometry.num_sites();
            const auto circuit = random_brickwork(cc.geometry, cc.depth, cc.seed);
            const auto psi = apply_circuit(random_product_state(n, cc.seed + 7), circuit);
            const int lambda = 2 * lightcone_range(cc.depth);
            const auto r = u1_asymmetry(psi, ClusteringHypothesis{cc.geometry, lambda});
            const auto vb = variance_bound_check(psi, lambda, cc.geometry);
            const std::string in = describe("brickwork D=" + std::to_string(cc.depth) +
                                                " d=" + std::to_string(cc.geometry.dimension()),
                                            n, cc.seed);
            t.observe(vb.margin() + kBoundSlack, in + " variance");
            t.observe(r.bound("clustering")->margin() + kBoundSlack, in + " asymmetry");
            if (const auto *m = r.bound("massey")) {
                t.observe(m->margin(), in + " massey", true);
            }
        }
    });
    run_check(s, "u1.twirl_fixed_point", [seed](Tally &t) {
        for (int k = 0; k < 20; ++k) {
            const int n = 1 + k % 4;
            const auto sd = seed + 600 + static_cast<std::uint64_t>(k);
            const auto rho = random_density_matrix(n, sd);
            const auto g1 = u1_twirl(rho);
            const auto g2 = u1_twirl(g1);
            t.within(max_abs(g2.matrix() - g1.matrix()), kIdempotenceTolerance, describe("idempotence", n, sd));
            t.within(std::abs(u1_asymmetry(State(g1)).delta_s), kEntropyTolerance, describe("twirled has zero asymmetry", n, sd));
            const double ds = u1_asymmetry(State(rho)).delta_s;
            const double off = max_abs(rho.matrix() - g1.matrix());
            // Zero asymmetry exactly when the twirl fixes the state.
            const bool consistent = (ds > kEntropyTolerance) == (off > kMatrixTolerance);
            t.observe(consistent ? 0.0 : -1.0, describe("iff dS=" + fmt(ds) + " offdiag=" + fmt(off), n, sd));
        }
    });
    run_check(s, "u1.monotonicity", [seed](Tally &t) {
        std::mt19937_64 rng(seed + 700);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int k = 0; k < 20; ++k) {
            const int n = 1 + k % 5;
            const auto sd = seed + 700 + static_cast<std::uint64_t>(k);
            const auto rho = random_density_matrix(n, sd);
            const double before = u1_asymmetry(State(rho)).delta_s;
            const CMatrix u = charge_conserving_unitary(n, rng);
            const DensityMatrix unitary_out(n, u * rho.matrix() * u.adjoint());
            t.observe(before - u1_asymmetry(State(unitary_out)).delta_s + kEntropyTolerance,
                      describe("charge-conserving unitary", n, sd));
            const auto dephased = apply_channel(rho, channels::dephasing(k % n, unif(rng)));
            t.observe(before - u1_asymmetry(State(dephased)).delta_s + kEntropyTolerance,
                      describe("dephasing", n, sd));
        }
    });
}

void su2_checks(SuiteResult &s, std::uint64_t seed, const SuiteHooks &hooks) {
    run_check(s, "su2.multiplicities", [](Tally &t) {
        for (int n = 2; n <= 12; n += 2) {
            std::int64_t total = 0;
            for (int tw = 0; tw <= n; tw += 2) {
                total += (tw + 1) * schur_multiplicity(n, tw);
            }
            t.observe(total == (std::int64_t{1} << n) ? 0.0 : -1.0, "N=" + std::to_string(n));
        }
    });
    run_check(s, "su2.schur_unitarity", [](Tally &t) {
        for (int n = 2; n <= 8; n += 2) {
            const auto u = build_schur_basis(n)->dense();
            const double dev =
                (u.transpose() * u - Eigen::MatrixXd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
            t.within(dev, kMatrixTolerance, "N=" + std::to_string(n));
        }
    });
    run_check(s, "su2.twirl_trace_idempotence", [seed, &hooks](Tally &t) {
        for (int n = 2; n <= 6; n += 2) {
            const auto basis = build_schur_basis(n);
            for (int k = 0; k < 3; ++k) {
                const auto sd = seed + 800 + static_cast<std::uint64_t>(10 * n + k);
                const auto rho = random_density_matrix(n, sd);
                const CMatrix g1 = su2_twirl_matrix(rho.matrix(), *basis, hooks.twirl_normalization);
                const CMatrix g2 = su2_twirl_matrix(g1, *basis, hooks.twirl_normalization);
                t.within(std::abs(g1.trace().real() - 1.0), kMatrixTolerance, describe("trace", n, sd));
                t.within(max_abs(g2 - g1), kMatrixTolerance, describe("idempotence", n, sd));
            }
        }
    });
    run_check(s, "su2.covariance", [seed, &hooks](Tally &t) {
        std::mt19937_64 rng(seed + 900);
        for (int n = 2; n <= 6; n += 2) {
            const auto basis = build_schur_basis(n);
            for (int k = 0; k < 3; ++k) {
                const auto sd = seed + 900 + static_cast<std::uint64_t>(10 * n + k);
                const auto rho = random_density_matrix(n, sd);
                const CMatrix big_u = tensor_power(random_su2(rng), n);
                const CMatrix lhs = su2_twirl_matrix(big_u * rho.matrix() * big_u.adjoint(), *basis,
                                                     hooks.twirl_normalization);
                const CMatrix g = su2_twirl_matrix(rho.matrix(), *basis, hooks.twirl_normalization);
                t.within(max_abs(lhs - big_u * g * big_u.adjoint()), kCovarianceTolerance,
                         describe("u^N", n, sd));
                t.within(max_abs(lhs - g), kCovarianceTolerance, describe("invariance", n, sd));
            }
        }
    });
    run_check(s, "su2.bounds", [seed](Tally &t) {
        for (int k = 0; k < 30; ++k) {
            const int n = 2 + 2 * (k % 3);
            const auto sd = seed + 1000 + static_cast<std::uint64_t>(k);
            State st = random_state(n, sd);
            if (k % 3 == 1) {
                st = random_density_matrix(n, sd);
            } else if (k % 3 == 2) {
                const LatticeGeometry g(1, n);
                st = apply_circuit(random_product_state(n, sd), random_brickwork(g, 1 + k % 3, sd));
            }
            const auto r = su2_asymmetry(st, *build_schur_basis(n));
            t.observe(r.delta_s + kBoundSlack, describe("nonnegativity", n, sd));
            for (const auto &b : r.bounds) {
                t.observe(b.margin() + kBoundSlack, describe(b.name, n, sd));
            }
        }
    });
    run_check(s, "su2.gauge_and_casimir", [seed](Tally &t) {
        for (int k = 0; k < 6; ++k) {
            const int n = k < 3 ? 6 : 8;
            const int depth = 1 + k % 2;
            const auto sd = seed + 1100 + static_cast<std::uint64_t>(k);
            const LatticeGeometry g(1, n);
            const auto psi =
                apply_circuit(random_product_state(n, sd), random_brickwork(g, depth, sd));
            const auto gauge = zero_transverse_rotation(psi);
            const Eigen::Vector3d v = magnetization(gauge.state);
            const std::string in = describe("brickwork D=" + std::to_string(depth), n, sd);
            t.within(std::hypot(v.x(), v.y()), 1e-9, in + " transverse");
            t.observe(v.z() + 1e-12, in + " Sz >= 0");
            const auto basis = build_schur_basis(n);
            t.within(std::abs(su2_asymmetry(psi, *basis).delta_s -
                              su2_asymmetry(gauge.state, *basis).delta_s),
                     kEntropyTolerance, in + " rotation invariance");
            const auto c = casimir_constraint_check(gauge.state, 2 * lightcone_range(depth), g);
            t.observe(c.bound - c.casimir_lhs + kBoundSlack, in + " casimir");
            t.observe(c.bound - c.precursor_lhs + kBoundSlack, in + " precursor");
        }
    });
}

void closed_form_checks(SuiteResult &s, std::uint64_t seed) {
    run_check(s, "closed.kink_and_flat", [](Tally &t) {
        for (int n : {1, 4, 10, 1000, 1000000}) {
            t.within(std::abs(shannon_entropy(kink_distribution(n)) - std::log(n)), 1e-12,
                     "kink N=" + std::to_string(n));
            t.within(std::abs(shannon_entropy(flat_distribution(n)) - std::log(n + 1.0)), 1e-12,
                     "flat N=" + std::to_string(n));
        }
    });
    run_check(s, "closed.dicke_half", [](Tally &t) {
        for (int m : {1, 2, 5, 50, 500}) {
            const auto d = dicke_half_distribution(m);
            double asym = 0.0;
            double odd = 0.0;
            for (int q = 0; q <= 2 * m; ++q) {
                asym = std::max(asym, std::abs(d[q] - d[2 * m - q]));
                if (q % 2 == 1) {
                    odd = std::max(odd, d[q]);
                }
            }
            t.within(asym, 1e-12, "symmetry M=" + std::to_string(m));
            t.within(odd, 1e-12, "odd charges M=" + std::to_string(m));
            const auto kr = rotated_dicke_distribution(2 * m, m);
            double dev = 0.0;
            for (int q = 0; q <= 2 * m; ++q) {
                dev = std::max(dev, std::abs(kr[q] - d[q]));
            }
            t.within(dev, kOracleTolerance, "Krawtchouk path M=" + std::to_string(m));
        }
    });
    run_check(s, "closed.krawtchouk_orthogonality", [](Tally &t) {
        const int n = 8;
        for (int k = 0; k <= n; ++k) {
            const auto rk = krawtchouk_row(k, n);
            for (int l = 0; l <= n; ++l) {
                const auto rl = krawtchouk_row(l, n);
                double sum = 0.0;
                for (int i = 0; i <= n; ++i) {
                    sum += std::exp(numeric::log_binomial(n, i)) * rk[static_cast<std::size_t>(i)] *
                           rl[static_cast<std::size_t>(i)];
                }
                const double expect = k == l ? std::ldexp(1.0, n) / std::exp(numeric::log_binomial(n, k)) : 0.0;
                t.within(std::abs(sum - expect), 1e-9 * std::max(1.0, expect),
                         "N=8 k=" + std::to_string(k) + " l=" + std::to_string(l));
            }
        }
    });
    run_check(s, "closed.poisson_fourier", [seed](Tally &t) {
        std::mt19937_64 rng(seed + 1200);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int k = 0; k < 10; ++k) {
            const int n = 1 + 3 * k;
            std::vector<double> x(static_cast<std::size_t>(n));
            for (double &v : x) {
                v = unif(rng);
            }
            const auto d = poisson_binomial(x);
            const auto inv = invert_generating_function(
                [&](double a) {
                    cplx z{1, 0};
                    for (double v : x) {
                        z *= cplx(1.0 - v, 0.0) + v * std::exp(cplx(0.0, a));
                    }
                    return z;
                },
                n);
            double dev = 0.0;
            for (int q = 0; q <= n; ++q) {
                dev = std::max(dev, std::abs(inv[static_cast<std::size_t>(q)] - d[q]));
            }
            t.within(dev, kOracleTolerance, "N=" + std::to_string(n));
        }
    });
    run_check(s, "closed.shepp_olkin", [seed](Tally &t) {
        std::mt19937_64 rng(seed + 1300);
        std::uniform_real_distribution<double> unif(-0.5, 0.5);
        const std::vector<double> half(8, 0.5);
        const double h0 = shannon_entropy(poisson_binomial(half));
        for (int k = 0; k < 500; ++k) {
            std::vector<double> x = half;
            const double scale = std::pow(10.0, -3.0 * (k % 4) / 3.0);
            for (double &v : x) {
                v = std::clamp(0.5 + scale * unif(rng), 0.0, 1.0);
            }
            t.observe(h0 - shannon_entropy(poisson_binomial(x)) + kBoundSlack,
                      "perturbation scale " + fmt(scale));
        }
    });
}

void clustering_checks(SuiteResult &s, std::uint64_t seed) {
    run_check(s, "clustering.lightcone", [seed](Tally &t) {
        for (const auto &cc : circuit_cases(seed + 1400, 8)) {
            const int n = cc.geometry.num_sites();
            const auto circuit = random_brickwork(cc.geometry, cc.depth, cc.seed);
            const int spread = operator_spreading_range(circuit);
            const auto psi = apply_circuit(random_product_state(n, cc.seed + 3), circuit);
            const auto rep = verify_cluster_property(psi, 2 * cc.depth, cc.geometry);
            const std::string in = describe("brickwork D=" + std::to_string(cc.depth) + " d=" +
                                                std::to_string(cc.geometry.dimension()),
                                            n, cc.seed);
            t.observe(lightcone_range(cc.depth) - spread, in + " spreading");
            t.observe(2 * spread - rep.effective_range, in + " effective range");
            t.within(rep.max_violation, kClusterTolerance, in + " violation");
            for (const auto &p : rep.pairs) {
                t.observe(2.0 - p.max_pauli, in + " correlator cap");
            }
        }
    });
}

// --------------------------------------------------------------- oracle suite

std::int64_t exact_binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Haar average of u^N rho u^N-dagger over Euler angles with weight sin(beta).
CMatrix haar_twirl(const CMatrix &rho, int n) {
    constexpr int kAngles = 12;
    constexpr int kBeta = 30;
    const auto &nodes = boost::math::quadrature::gauss<double, kBeta>::abscissa();
    const auto &weights = boost::math::quadrature::gauss<double, kBeta>::weights();
    auto rz = [](double a) {
        Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
        r(0, 0) = std::exp(cplx(0, -a / 2));
        r(1, 1) = std::exp(cplx(0, a / 2));
        return r;
    };
    auto ry = [](double b) {
        Eigen::Matrix2cd r;
        r << std::cos(b / 2), -std::sin(b / 2), std::sin(b / 2), std::cos(b / 2);
        return r;
    };
    CMatrix acc = CMatrix::Zero(rho.rows(), rho.cols());
    // Gauss nodes on [-1, 1] are symmetric; expand them to the full rule.
    std::vector<std::pair<double, double>> rule;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        rule.emplace_back(nodes[i], weights[i]);
        if (nodes[i] != 0.0) {
            rule.emplace_back(-nodes[i], weights[i]);
        }
    }
    for (const auto &[x, w] : rule) {
        const double beta = 0.5 * std::numbers::pi * (x + 1.0);
        const double wb = w * 0.5 * std::numbers::pi * std::sin(beta) / 2.0;
        for (int ia = 0; ia < kAngles; ++ia) {
            for (int ig = 0; ig < kAngles; ++ig) {
                const double a = 2.0 * std::numbers::pi * ia / kAngles;
                const double g = 2.0 * std::numbers::pi * ig / kAngles;
                const CMatrix u = tensor_power(rz(a) * ry(beta) * rz(g), n);
                acc += (wb / (kAngles * kAngles)) * (u * rho * u.adjoint());
            }
        }
    }
    return acc;
}

void oracle_checks(SuiteResult &s, std::uint64_t seed, const SuiteHooks &hooks) {
    run_check(s, "oracle.lattice_bfs", [](Tally &t) {
        for (int d = 1; d <= 2; ++d) {
            for (int m = 2; m <= 5; ++m) {
                LatticeGeometry g(d, m);
                const int n = g.num_sites();
                std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
                for (const auto &[a, b] : g.edges()) {
                    adj[static_cast<std::size_t>(a)].push_back(b);
                    adj[static_cast<std::size_t>(b)].push_back(a);
                }
                int bad = 0;
                for (int src = 0; src < n; ++src) {
                    std::vector<int> dist(static_cast<std::size_t>(n), -1);
                    std::deque<int> queue{src};
                    dist[static_cast<std::size_t>(src)] = 0;
                    while (!queue.empty()) {
                        const int x = queue.front();
                        queue.pop_front();
                        for (int y : adj[static_cast<std::size_t>(x)]) {
                            if (dist[static_cast<std::size_t>(y)] < 0) {
                                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                                queue.push_back(y);
                            }
                        }
                    }
                    for (int j = 0; j < n; ++j) {
                        bad += dist[static_cast<std::size_t>(j)] != g.distance(src, j);
                    }
                }
                t.observe(-bad, "d=" + std::to_string(d) + " M=" + std::to_string(m));
            }
        }
    });
    run_check(s, "oracle.krawtchouk_exact", [](Tally &t) {
        for (int n = 1; n <= 20; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto row = krawtchouk_row(k, n);
                for (int i = 0; i <= n; ++i) {
                    std::int64_t sum = 0;
                    for (int j = 0; j <= i; ++j) {
                        const std::int64_t term = exact_binomial(n - k, i - j) * exact_binomial(k, j);
                        sum += (j % 2 == 0) ? term : -term;
                    }
                    const double exact = static_cast<double>(sum) / static_cast<double>(exact_binomial(n, i));
                    t.within(std::abs(row[static_cast<std::size_t>(i)] - exact),
                             1e-9 * std::max(std::abs(exact), 1e-3),
                             "i=" + std::to_string(i) + " k=" + std::to_string(k) + " N=" + std::to_string(n));
                }
            }
        }
    });
    run_check(s, "oracle.closed_forms_vs_statevector", [](Tally &t) {
        for (int n = 1; n <= 12; ++n) {
            const auto kink = charge_distribution(kink_state(n));
            const auto kd = kink_distribution(n);
            double dev = 0.0;
            for (int q = 0; q <= n; ++q) {
                dev = std::max(dev, std::abs(kink[q] - kd[q]));
            }
            t.within(dev, 1e-12, "kink N=" + std::to_string(n));
            for (int k : {0, n / 3, n / 2}) {
                const auto sv = charge_distribution(dicke_state(n, k, DickeAxis::x));
                const auto cf = rotated_dicke_distribution(n, k);
                double d2 = 0.0;
                for (int q = 0; q <= n; ++q) {
                    d2 = std::max(d2, std::abs(sv[q] - cf[q]));
                }
                t.within(d2, kOracleTolerance, "rotated Dicke k=" + std::to_string(k) + " N=" + std::to_string(n));
            }
            if (n % 2 == 0) {
                const auto sv = charge_distribution(dicke_state(n, n / 2, DickeAxis::x));
                double d3 = 0.0;
                for (int q = 0; q <= n; ++q) {
                    d3 = std::max(d3, std::abs(sv[q] - dicke_half_charge_prob(n / 2, q)));
                }
                t.within(d3, kOracleTolerance, "half-filled Dicke N=" + std::to_string(n));
            }
        }
    });
    run_check(s, "oracle.u1_twirl_projectors", [seed](Tally &t) {
        for (int n = 1; n <= 4; ++n) {
            const auto sd = seed + 1500 + static_cast<std::uint64_t>(n);
            const auto rho = random_density_matrix(n, sd);
            const Eigen::Index dim = rho.dimension();
            CMatrix expect = CMatrix::Zero(dim, dim);
            for (int q = 0; q <= n; ++q) {
                CMatrix p = CMatrix::Zero(dim, dim);
                for (Eigen::Index i = 0; i < dim; ++i) {
                    if (n - std::popcount(static_cast<std::uint64_t>(i)) == q) {
                        p(i, i) = 1.0;
                    }
                }
                expect += p * rho.matrix() * p;
            }
            t.within(max_abs(u1_twirl(rho).matrix() - expect), 1e-12, describe("projector sum", n, sd));
        }
    });
    run_check(s, "oracle.sector_distribution_dense", [](Tally &t) {
        for (int n = 2; n <= 6; n += 2) {
            const auto basis = build_schur_basis(n);
            const auto u = basis->dense().cast<cplx>().eval();
            const CMatrix s2 = to_matrix(observables::casimir(n), n);
            const CMatrix sz = to_matrix(observables::spin(n, Pauli::Z), n);
            const auto labels = basis->labels();
            const CMatrix s2r = u.adjoint() * s2 * u;
            const CMatrix szr = u.adjoint() * sz * u;
            CMatrix expect_s2 = CMatrix::Zero(u.rows(), u.cols());
            CMatrix expect_sz = CMatrix::Zero(u.rows(), u.cols());
            for (std::size_t c = 0; c < labels.size(); ++c) {
                const double sv = labels[c].s();
                expect_s2(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c)) = sv * (sv + 1);
                expect_sz(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c)) = labels[c].m();
            }
            t.within(max_abs(s2r - expect_s2), kOracleTolerance, "S^2 diagonal N=" + std::to_string(n));
            t.within(max_abs(szr - expect_sz), kOracleTolerance, "S^z diagonal N=" + std::to_string(n));
        }
    });
    run_check(s, "oracle.su2_twirl_haar", [seed, &hooks](Tally &t) {
        for (int n = 2; n <= 4; n += 2) {
            const auto basis = build_schur_basis(n);
            for (int k = 0; k < 2; ++k) {
                const auto sd = seed + 1600 + static_cast<std::uint64_t>(10 * n + k);
                const auto rho = random_density_matrix(n, sd);
                const CMatrix fast = su2_twirl_matrix(rho.matrix(), *basis, hooks.twirl_normalization);
                t.within(max_abs(fast - haar_twirl(rho.matrix(), n)), kHaarTolerance,
                         describe("Euler quadrature", n, sd));
            }
        }
    });
}

} // namespace

std::size_t SuiteResult::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.passed; }));
}

nlohmann::json SuiteResult::to_json() const {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto &c : checks) {
        jc.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"margin", std::isfinite(c.margin) ? nlohmann::json(c.margin) : nlohmann::json(nullptr)},
                      {"samples", c.samples},
                      {"worst_inputs", c.inputs}});
    }
    return {{"suite", suite}, {"seed", seed}, {"failed", failures()}, {"checks", jc}};
}

void SuiteResult::print(std::ostream &out) const {
    for (const auto &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << c.name
            << " margin=" << std::setw(14) << std::setprecision(6) << c.margin + 0.0
            << " n=" << std::setw(5) << c.samples << " worst: " << c.inputs << '\n';
    }
    out << suite << ": " << checks.size() - failures() << "/" << checks.size() << " passed\n";
}

SuiteResult run_bound_suite(std::uint64_t seed, const SuiteHooks &hooks) {
    SuiteResult s;
    s.suite = "bound-suite";
    s.seed = seed;
    lattice_checks(s);
    core_checks(s, seed);
    u1_checks(s, seed);
    su2_checks(s, seed, hooks);
    closed_form_checks(s, seed);
    clustering_checks(s, seed);
    return s;
}

SuiteResult run_oracle_suite(std::uint64_t seed, const SuiteHooks &hooks) {
    SuiteResult s;
    s.suite = "oracle-suite";
    s.seed = seed;
    oracle_checks(s, seed, hooks);
    return s;
}

} // namespace asymlab
