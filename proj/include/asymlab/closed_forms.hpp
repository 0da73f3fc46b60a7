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

#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "asymlab/state.hpp"
#include "asymlab/u1.hpp"

namespace asymlab {

/**
 * Symmetric Krawtchouk polynomial
 * K_i(k; 1/2, N) = C(N,i)^{-1} sum_j (-1)^j C(N-k, i-j) C(k, j).
 *
 * Evaluated by the three-term recurrence in i on the normalized values
 * sqrt(C(N,i)) K_i(k), with a running log scale, forward to N/2 and then
 * by the reflection K_{N-i}(k) = (-1)^k K_i(k).
 */
[[nodiscard]] double krawtchouk(int i, int k, int n);

/// K_i(k) for i = 0..N.
[[nodiscard]] std::vector<double> krawtchouk_row(int k, int n);

/// Coefficients c_i of H^{(x)N} |D^z_k> in the basis |D^z_i>, i = 0..N.
[[nodiscard]] std::vector<double> rotated_dicke_coefficients(int n, int k);

/// Charge distribution of H^{(x)N} |D^z_k>, from log-space closed form.
[[nodiscard]] ChargeDistribution rotated_dicke_distribution(int n, int k);

enum class DickeAxis { z, x };

/// |D_k>: equal superposition of the basis strings with k ones.
[[nodiscard]] StateVector dicke_state(int n, int k, DickeAxis axis = DickeAxis::z);

/// p(q) for H^{(x)2M} |D^z_M>; zero for odd q.
[[nodiscard]] double dicke_half_charge_prob(int m, int q);
[[nodiscard]] ChargeDistribution dicke_half_distribution(int m);

/// (1/sqrt N) sum_{j=1..N} |1...1 0...0> with sites j..N (1-based) in |0>.
[[nodiscard]] StateVector kink_state(int n);
/// p_q = 1/N for q = 1..N, p_0 = 0.
[[nodiscard]] ChargeDistribution kink_distribution(int n);
/// Uniform over the N + 1 charges 0..N.
[[nodiscard]] ChargeDistribution flat_distribution(int n);

/// Exact law of sum_i X_i with X_i ~ Bernoulli(x_i), by O(N^2) convolution.
[[nodiscard]] ChargeDistribution poisson_binomial(std::span<const double> x);

class ContinuousChargeDensity {
  public:
    enum class Kind { flat, arcsine, custom_table };

    [[nodiscard]] static ContinuousChargeDensity flat();
    /// 1 / (pi sqrt(u (1 - u))).
    [[nodiscard]] static ContinuousChargeDensity arcsine();
    /// Piecewise constant: bin b of width 1/size carries probability masses[b].
    [[nodiscard]] static ContinuousChargeDensity from_histogram(std::vector<double> masses);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double operator()(double u) const;
    [[nodiscard]] double normalization() const;
    /// -int_0^1 p ln p du.
    [[nodiscard]] double differential_entropy() const;

  private:
    explicit ContinuousChargeDensity(Kind kind, std::vector<double> masses = {});
    void validate() const;

    Kind kind_;
    std::vector<double> masses_;
};

/// ln N - int p ln p.
[[nodiscard]] double continuous_asymmetry_estimate(const ContinuousChargeDensity &d, double n);

struct AsymptoticFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};

/// Least squares Delta S ~ a ln N + b; residual is the max absolute deviation.
[[nodiscard]] AsymptoticFit asymptotic_fit(std::span<const std::pair<double, double>> points);

} // namespace asymlab
