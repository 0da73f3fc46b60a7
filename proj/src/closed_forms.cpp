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

#include "asymlab/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "asymlab/circuit.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/numeric.hpp"

namespace asymlab {

namespace {

constexpr double kRescaleThreshold = 1e100;
constexpr double kNormalizationTolerance = 1e-8;
constexpr double kRecurrenceDrift = 1e-6;

void check_indices(int i, int k, int n) {
    if (n < 0 || i < 0 || i > n || k < 0 || k > n) {
        throw ArgumentError("Krawtchouk indices out of range: i=" + std::to_string(i) +
                            ", k=" + std::to_string(k) + ", N=" + std::to_string(n));
    }
}

/// a_i = sqrt(C(N,i)) K_i(k) as (mantissa, log scale) pairs, i = 0..N.
std::vector<std::pair<double, double>> normalized_krawtchouk(int k, int n) {
    std::vector<std::pair<double, double>> a(static_cast<std::size_t>(n + 1));
    const double nd = n;
    const double x = nd - 2.0 * k;
    const int half = n / 2;
    double prev = 0.0;
    double cur = 1.0;
    double scale = 0.0;
    a[0] = {cur, scale};
    for (int i = 0; i < half; ++i) {
        const double next =
            (x * cur - std::sqrt(static_cast<double>(i) * (nd - i + 1.0)) * prev) /
            std::sqrt((i + 1.0) * (nd - i));
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleThreshold) {
            prev /= kRescaleThreshold;
            cur /= kRescaleThreshold;
            scale += std::log(kRescaleThreshold);
        }
        a[static_cast<std::size_t>(i + 1)] = {cur, scale};
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (int i = half + 1; i <= n; ++i) {
        const auto &[m, s] = a[static_cast<std::size_t>(n - i)];
        a[static_cast<std::size_t>(i)] = {sign * m, s};
    }
    return a;
}

double log_abs(const std::pair<double, double> &v) {
    return std::log(std::abs(v.first)) + v.second;
}

/// Rounding in the recurrence grows linearly with N; absorb it here.
ChargeDistribution renormalized(std::vector<double> p) {
    const double z = numeric::pairwise_sum(p);
    if (!(std::abs(z - 1.0) <= kRecurrenceDrift)) {
        throw ValidationError("closed-form charge probabilities sum to " + std::to_string(z));
    }
    for (double &v : p) {
        v /= z;
    }
    return ChargeDistribution(std::move(p));
}

} // namespace

std::vector<double> krawtchouk_row(int k, int n) {
    check_indices(0, k, n);
    const auto a = normalized_krawtchouk(k, n);
    std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
    for (int i = 0; i <= n; ++i) {
        const auto &v = a[static_cast<std::size_t>(i)];
        if (v.first != 0.0) {
            out[static_cast<std::size_t>(i)] =
                std::copysign(std::exp(log_abs(v) - 0.5 * numeric::log_binomial(n, i)), v.first);
        }
    }
    return out;
}

double krawtchouk(int i, int k, int n) {
    check_indices(i, k, n);
    return krawtchouk_row(k, n)[static_cast<std::size_t>(i)];
}

std::vector<double> rotated_dicke_coefficients(int n, int k) {
    check_indices(0, k, n);
    const auto a = normalized_krawtchouk(k, n);
    const double base = -0.5 * n * std::log(2.0) + 0.5 * numeric::log_binomial(n, k);
    std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
    for (int i = 0; i <= n; ++i) {
        const auto &v = a[static_cast<std::size_t>(i)];
        if (v.first != 0.0) {
            c[static_cast<std::size_t>(i)] = std::copysign(std::exp(base + log_abs(v)), v.first);
        }
    }
    return c;
}

ChargeDistribution rotated_dicke_distribution(int n, int k) {
    check_indices(0, k, n);
    const auto a = normalized_krawtchouk(k, n);
    const double base = -n * std::log(2.0) + numeric::log_binomial(n, k);
    std::vector<double> p(static_cast<std::size_t>(n + 1), 0.0);
    for (int i = 0; i <= n; ++i) {
        const auto &v = a[static_cast<std::size_t>(i)];
        // i ones carry charge N - i.
        if (v.first != 0.0) {
            p[static_cast<std::size_t>(n - i)] = std::exp(base + 2.0 * log_abs(v));
        }
    }
    return renormalized(std::move(p));
}

StateVector dicke_state(int n, int k, DickeAxis axis) {
    if (n < 1 || k < 0 || k > n) {
        throw ArgumentError("Dicke state needs 0 <= k <= N, N >= 1");
    }
    require_statevector_capacity(n, "dicke_state");
    if (axis == DickeAxis::x) {
        return apply_uniform(dicke_state(n, k, DickeAxis::z), gates::hadamard());
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim));
    const double amp = std::exp(-0.5 * numeric::log_binomial(n, k));
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (std::popcount(x) == k) {
            amps[static_cast<Eigen::Index>(x)] = amp;
        }
    }
    return StateVector(n, std::move(amps));
}

double dicke_half_charge_prob(int m, int q) {
    if (m < 0 || q < 0 || q > 2 * m) {
        throw ArgumentError("dicke_half_charge_prob needs 0 <= q <= 2M");
    }
    if (q % 2 != 0) {
        return 0.0;
    }
    if (m == 0) {
        return 1.0;
    }
    // Expanding each binomial by Stirling's formula, the O(M) entropy terms
    // cancel and only the remainders survive.
    using numeric::stirling_error;
    const double j = q / 2;
    const double rest = m - j;
    if (j == 0 || rest == 0) {
        return std::exp(-0.5 * std::log(std::numbers::pi * m) + stirling_error(2.0 * m) -
                        2.0 * stirling_error(m));
    }
    return std::exp(-std::log(std::numbers::pi) - 0.5 * std::log(j * rest) + stirling_error(2.0 * j) +
                    stirling_error(2.0 * rest) - 2.0 * stirling_error(j) - 2.0 * stirling_error(rest));
}

ChargeDistribution dicke_half_distribution(int m) {
    std::vector<double> p(static_cast<std::size_t>(2 * m + 1));
    for (int q = 0; q <= 2 * m; ++q) {
        p[static_cast<std::size_t>(q)] = dicke_half_charge_prob(m, q);
    }
    return ChargeDistribution(std::move(p));
}

StateVector kink_state(int n) {
    if (n < 1) {
        throw ArgumentError("kink state needs N >= 1");
    }
    require_statevector_capacity(n, "kink_state");
    CVector amps = CVector::Zero(Eigen::Index{1} << n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 1; j <= n; ++j) {
        // Sites 0..j-2 hold |1>, i.e. the top j-1 bits.
        const std::uint64_t ones = (std::uint64_t{1} << (j - 1)) - 1;
        amps[static_cast<Eigen::Index>(ones << (n - j + 1))] = amp;
    }
    return StateVector(n, std::move(amps));
}

ChargeDistribution kink_distribution(int n) {
    if (n < 1) {
        throw ArgumentError("kink distribution needs N >= 1");
    }
    std::vector<double> p(static_cast<std::size_t>(n + 1), 1.0 / n);
    p[0] = 0.0;
    return ChargeDistribution(std::move(p));
}

ChargeDistribution flat_distribution(int n) {
    if (n < 0) {
        throw ArgumentError("flat distribution needs N >= 0");
    }
    return ChargeDistribution(
        std::vector<double>(static_cast<std::size_t>(n + 1), 1.0 / (n + 1.0)));
}

ChargeDistribution poisson_binomial(std::span<const double> x) {
    std::vector<double> p{1.0};
    p.reserve(x.size() + 1);
    for (double xi : x) {
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw DomainError("Bernoulli parameter " + std::to_string(xi) +
                              " outside [0, 1]");
        }
        p.push_back(0.0);
        for (std::size_t q = p.size() - 1; q > 0; --q) {
            p[q] = p[q] * (1.0 - xi) + p[q - 1] * xi;
        }
        p[0] *= 1.0 - xi;
    }
    return ChargeDistribution(std::move(p));
}

ContinuousChargeDensity::ContinuousChargeDensity(Kind kind, std::vector<double> masses)
    : kind_(kind), masses_(std::move(masses)) {
    validate();
}

ContinuousChargeDensity ContinuousChargeDensity::flat() {
    return ContinuousChargeDensity(Kind::flat);
}

ContinuousChargeDensity ContinuousChargeDensity::arcsine() {
    return ContinuousChargeDensity(Kind::arcsine);
}

ContinuousChargeDensity ContinuousChargeDensity::from_histogram(std::vector<double> masses) {
    if (masses.empty()) {
        throw ArgumentError("histogram density needs at least one bin");
    }
    for (double m : masses) {
        if (!(m >= 0.0) || !std::isfinite(m)) {
            throw ValidationError("histogram masses must be finite and non-negative");
        }
    }
    return ContinuousChargeDensity(Kind::custom_table, std::move(masses));
}

double ContinuousChargeDensity::operator()(double u) const {
    if (u < 0.0 || u > 1.0) {
        return 0.0;
    }
    switch (kind_) {
    case Kind::flat:
        return 1.0;
    case Kind::arcsine:
        return 1.0 / (std::numbers::pi * std::sqrt(u * (1.0 - u)));
    case Kind::custom_table: {
        const std::size_t bins = masses_.size();
        const auto b = std::min(static_cast<std::size_t>(u * static_cast<double>(bins)), bins - 1);
        return masses_[b] * static_cast<double>(bins);
    }
    }
    return 0.0;
}

namespace {

/// int_0^1 f(u, p(u)) du via u = sin^2(theta), du = sin(2 theta) d theta.
template <class F>
double integrate_substituted(const ContinuousChargeDensity &d, F f) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double u = s * s;
        const double jac = std::sin(2.0 * theta);
        if (jac <= 0.0) {
            return 0.0;
        }
        if (d.kind() == ContinuousChargeDensity::Kind::arcsine) {
            // p(u) du = (2/pi) d theta exactly; avoid forming p at the edges.
            const double p = 2.0 / (std::numbers::pi * jac);
            return f(p) * jac;
        }
        return f(d(u)) * jac;
    };
    return integrator.integrate(integrand, 0.0, std::numbers::pi / 2);
}

} // namespace

double ContinuousChargeDensity::normalization() const {
    if (kind_ == Kind::custom_table) {
        return numeric::pairwise_sum(masses_);
    }
    return integrate_substituted(*this, [](double p) { return p; });
}

void ContinuousChargeDensity::validate() const {
    const double z = normalization();
    if (!(std::abs(z - 1.0) <= kNormalizationTolerance)) {
        throw ValidationError("charge density integrates to " + std::to_string(z) +
                              ", not 1");
    }
}

double ContinuousChargeDensity::differential_entropy() const {
    if (kind_ == Kind::custom_table) {
        const double bins = static_cast<double>(masses_.size());
        std::vector<double> terms;
        terms.reserve(masses_.size());
        for (double m : masses_) {
            terms.push_back(m > kProbabilityFloor ? -m * std::log(m * bins) : 0.0);
        }
        return numeric::pairwise_sum(terms);
    }
    return integrate_substituted(*this, [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; });
}

double continuous_asymmetry_estimate(const ContinuousChargeDensity &d, double n) {
    if (!(n >= 1.0)) {
        throw ArgumentError("continuous estimate needs N >= 1");
    }
    return std::log(n) + d.differential_entropy();
}

AsymptoticFit asymptotic_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw ArgumentError("asymptotic fit needs at least 3 points");
    }
    std::set<double> distinct;
    for (const auto &[n, ds] : points) {
        if (!(n > 0.0) || !std::isfinite(ds)) {
            throw ArgumentError("asymptotic fit needs N > 0 and finite values");
        }
        distinct.insert(n);
    }
    if (distinct.size() != points.size()) {
        throw DomainError("asymptotic fit needs distinct N values");
    }
    const double count = static_cast<double>(points.size());
    double sx = 0.0;
    double sy = 0.0;
    for (const auto &[n, ds] : points) {
        sx += std::log(n);
        sy += ds;
    }
    const double mx = sx / count;
    const double my = sy / count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &[n, ds] : points) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (ds - my);
    }
    AsymptoticFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (const auto &[n, ds] : points) {
        fit.residual =
            std::max(fit.residual, std::abs(ds - (fit.slope * std::log(n) + fit.intercept)));
    }
    return fit;
}

} // namespace asymlab
