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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace oracle {

namespace {

std::vector<int> coords_of(int site, int dimension, int linear_size) {
    std::vector<int> c(static_cast<std::size_t>(dimension));
    for (int a = dimension - 1; a >= 0; --a) {
        c[static_cast<std::size_t>(a)] = site % linear_size;
        site /= linear_size;
    }
    return c;
}

int site_of(const std::vector<int> &c, int linear_size) {
    int s = 0;
    for (int x : c) {
        s = s * linear_size + x;
    }
    return s;
}

std::vector<int> bfs_from(int dimension, int linear_size, int source) {
    int n = 1;
    for (int a = 0; a < dimension; ++a) {
        n *= linear_size;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        for (int a = 0; a < dimension; ++a) {
            for (int step : {1, -1}) {
                auto c = coords_of(s, dimension, linear_size);
                auto &x = c[static_cast<std::size_t>(a)];
                x = ((x + step) % linear_size + linear_size) % linear_size;
                const int t = site_of(c, linear_size);
                if (t != s) {
                    adj[static_cast<std::size_t>(s)].push_back(t);
                }
            }
        }
    }
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> todo;
    dist[static_cast<std::size_t>(source)] = 0;
    todo.push(source);
    while (!todo.empty()) {
        const int s = todo.front();
        todo.pop();
        for (int t : adj[static_cast<std::size_t>(s)]) {
            if (dist[static_cast<std::size_t>(t)] < 0) {
                dist[static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(s)] + 1;
                todo.push(t);
            }
        }
    }
    return dist;
}

Eigen::Matrix2cd euler(double a, double b, double g) {
    const cplx i(0.0, 1.0);
    Eigen::Matrix2cd rz_a = Eigen::Matrix2cd::Zero();
    rz_a(0, 0) = std::exp(-i * a / 2.0);
    rz_a(1, 1) = std::exp(i * a / 2.0);
    Eigen::Matrix2cd rz_g = Eigen::Matrix2cd::Zero();
    rz_g(0, 0) = std::exp(-i * g / 2.0);
    rz_g(1, 1) = std::exp(i * g / 2.0);
    Eigen::Matrix2cd ry;
    ry << std::cos(b / 2), -std::sin(b / 2), std::sin(b / 2), std::cos(b / 2);
    return rz_a * ry * rz_g;
}

} // namespace

int bfs_distance(int dimension, int linear_size, int i, int j) {
    return bfs_from(dimension, linear_size, i).at(static_cast<std::size_t>(j));
}

int ball_size(int dimension, int linear_size, int site, int radius) {
    int count = 0;
    for (int d : bfs_from(dimension, linear_size, site)) {
        count += d <= radius ? 1 : 0;
    }
    return count;
}

Eigen::Matrix2cd pauli(char which) {
    const cplx i(0.0, 1.0);
    Eigen::Matrix2cd m;
    switch (which) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, -i, i, 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw std::invalid_argument("pauli");
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

Eigen::VectorXcd kron_vectors(const std::vector<Eigen::Vector2cd> &locals) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
    for (const auto &v : locals) {
        out = kron(out, Eigen::MatrixXcd(v));
    }
    return out.col(0);
}

Eigen::MatrixXcd site_operator(int n, int site, const Eigen::Matrix2cd &op) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
    for (int s = 0; s < n; ++s) {
        out = kron(out, s == site ? op : pauli('I'));
    }
    return out;
}

Eigen::MatrixXcd uniform_operator(int n, const Eigen::Matrix2cd &u) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
    for (int s = 0; s < n; ++s) {
        out = kron(out, u);
    }
    return out;
}

Eigen::MatrixXcd spin(int n, char alpha) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int s = 0; s < n; ++s) {
        out += 0.5 * site_operator(n, s, pauli(alpha));
    }
    return out;
}

Eigen::MatrixXcd charge(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int s = 0; s < n; ++s) {
        out += 0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + site_operator(n, s, pauli('Z')));
    }
    return out;
}

Eigen::VectorXcd dicke_z(int n, int k) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        int ones = 0;
        for (int b = 0; b < n; ++b) {
            ones += static_cast<int>((idx >> b) & 1);
        }
        if (ones == k) {
            v[idx] = 1.0;
        }
    }
    return v / v.norm();
}

Eigen::VectorXcd kink(int n) {
    // Term j (1-based) has sites 1..j-1 in |1> and sites j..n in |0>.
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    for (int j = 1; j <= n; ++j) {
        std::vector<Eigen::Vector2cd> locals;
        for (int s = 1; s <= n; ++s) {
            locals.emplace_back(s < j ? Eigen::Vector2cd(0, 1) : Eigen::Vector2cd(1, 0));
        }
        v += kron_vectors(locals);
    }
    return v / std::sqrt(static_cast<double>(n));
}

std::vector<double> charge_distribution(const Eigen::MatrixXcd &rho, int n) {
    const Eigen::MatrixXcd q = charge(n);
    std::vector<double> p(static_cast<std::size_t>(n + 1), 0.0);
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        p[static_cast<std::size_t>(std::lround(q(i, i).real()))] += rho(i, i).real();
    }
    return p;
}

double entropy(const Eigen::MatrixXcd &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()[i];
        if (l > 1e-15) {
            s -= l * std::log(l);
        }
    }
    return s;
}

double shannon(const std::vector<double> &p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 1e-15) {
            s -= x * std::log(x);
        }
    }
    return s;
}

Eigen::MatrixXcd charge_dephase(const Eigen::MatrixXcd &rho, int n) {
    const Eigen::MatrixXcd q = charge(n);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (int c = 0; c <= n; ++c) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
        for (Eigen::Index i = 0; i < q.rows(); ++i) {
            if (std::lround(q(i, i).real()) == c) {
                p(i, i) = 1.0;
            }
        }
        out += p * rho * p;
    }
    return out;
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd &rho, int n, const std::vector<int> &keep) {
    const int k = static_cast<int>(keep.size());
    const Eigen::Index local = Eigen::Index{1} << k;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(local, local);
    auto bit = [n](Eigen::Index idx, int site) { return (idx >> (n - 1 - site)) & 1; };
    auto local_index = [&](Eigen::Index idx) {
        Eigen::Index l = 0;
        for (int s : keep) {
            l = 2 * l + bit(idx, s);
        }
        return l;
    };
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            bool same_rest = true;
            for (int s = 0; s < n && same_rest; ++s) {
                if (std::find(keep.begin(), keep.end(), s) == keep.end() && bit(r, s) != bit(c, s)) {
                    same_rest = false;
                }
            }
            if (same_rest) {
                out(local_index(r), local_index(c)) += rho(r, c);
            }
        }
    }
    return out;
}

Eigen::Matrix4cd depolarize_first_qubit(const Eigen::Matrix4cd &rho, double p) {
    Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int b2 = 0; b2 < 2; ++b2) {
                reduced(b, b2) += rho(2 * a + b, 2 * a + b2);
            }
        }
    }
    Eigen::Matrix4cd out = (1.0 - p) * rho;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int b2 = 0; b2 < 2; ++b2) {
                out(2 * a + b, 2 * a + b2) += p * 0.5 * reduced(b, b2);
            }
        }
    }
    return out;
}

Eigen::MatrixXcd haar_twirl(const Eigen::MatrixXcd &rho, int n, int angle_points) {
    using Rule = boost::math::quadrature::gauss<double, 20>;
    std::vector<std::pair<double, double>> nodes; // (cos beta, weight / 2)
    const auto &x = Rule::abscissa();
    const auto &w = Rule::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
        nodes.emplace_back(x[i], w[i] / 2.0);
        if (x[i] != 0.0) {
            nodes.emplace_back(-x[i], w[i] / 2.0);
        }
    }
    const double step = 2.0 * std::numbers::pi / angle_points;
    const double angle_weight = 1.0 / angle_points;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (int ia = 0; ia < angle_points; ++ia) {
        for (int ig = 0; ig < angle_points; ++ig) {
            for (const auto &[c, wb] : nodes) {
                const Eigen::MatrixXcd u =
                    uniform_operator(n, euler(ia * step, std::acos(c), ig * step));
                out += (angle_weight * angle_weight * wb) * (u * rho * u.adjoint());
            }
        }
    }
    return out;
}

std::vector<SectorWeight> sector_weights(const Eigen::MatrixXcd &rho, int n) {
    Eigen::MatrixXcd s2 = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (char a : {'X', 'Y', 'Z'}) {
        const Eigen::MatrixXcd s = spin(n, a);
        s2 += s * s;
    }
    std::map<std::pair<int, int>, double> acc;
    for (int w = 0; w <= n; ++w) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < rho.rows(); ++i) {
            int ones = 0;
            for (int b = 0; b < n; ++b) {
                ones += static_cast<int>((i >> b) & 1);
            }
            if (ones == w) {
                idx.push_back(i);
            }
        }
        const auto d = static_cast<Eigen::Index>(idx.size());
        Eigen::MatrixXcd block(d, d);
        Eigen::MatrixXcd rblock(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                block(r, c) = s2(idx[r], idx[c]);
                rblock(r, c) = rho(idx[r], idx[c]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
        for (Eigen::Index e = 0; e < d; ++e) {
            // s(s+1) = lambda  =>  2s = sqrt(1 + 4 lambda) - 1
            const int twice_s =
                static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * es.eigenvalues()[e]) - 1.0));
            const Eigen::VectorXcd v = es.eigenvectors().col(e);
            acc[{twice_s, n - 2 * w}] += (v.adjoint() * rblock * v)(0, 0).real();
        }
    }
    std::vector<SectorWeight> out;
    for (const auto &[key, p] : acc) {
        out.push_back({key.first, key.second, p});
    }
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

Rational krawtchouk(int i, int k, int n) {
    BigInt sum = 0;
    for (int j = 0; j <= i; ++j) {
        const BigInt term = binomial(n - k, i - j) * binomial(k, j);
        sum += j % 2 == 0 ? term : BigInt(-term);
    }
    return Rational(sum, binomial(n, i));
}

Rational dicke_half_prob(int m, int q) {
    if (q % 2 != 0) {
        return 0;
    }
    const BigInt c = binomial(m, q / 2);
    const BigInt two_pow = BigInt(1) << (2 * m);
    return Rational(binomial(2 * m, m) * c * c, two_pow * binomial(2 * m, q));
}

std::vector<double> bernoulli_sum_enumerated(const std::vector<double> &x) {
    const int n = static_cast<int>(x.size());
    std::vector<double> p(static_cast<std::size_t>(n + 1), 0.0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double w = 1.0;
        int count = 0;
        for (int i = 0; i < n; ++i) {
            const bool on = (mask >> i) & 1;
            w *= on ? x[static_cast<std::size_t>(i)] : 1.0 - x[static_cast<std::size_t>(i)];
            count += on ? 1 : 0;
        }
        p[static_cast<std::size_t>(count)] += w;
    }
    return p;
}

std::vector<double> dft_inverse(const std::function<cplx(double)> &gf, int n) {
    const int points = n + 1;
    std::vector<cplx> samples;
    for (int k = 0; k < points; ++k) {
        samples.push_back(gf(2.0 * std::numbers::pi * k / points));
    }
    std::vector<double> p;
    for (int q = 0; q < points; ++q) {
        cplx acc = 0.0;
        for (int k = 0; k < points; ++k) {
            acc += samples[static_cast<std::size_t>(k)] *
                   std::polar(1.0, -2.0 * std::numbers::pi * k * q / points);
        }
        p.push_back(acc.real() / points);
    }
    return p;
}

} // namespace oracle
