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

#include "asymlab/numeric.hpp"

#include <cmath>
#include <limits>

namespace asymlab::numeric {

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 32;
    if (values.size() <= kBlock) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double stirling_error(double n) {
    constexpr double kHalfLog2Pi = 0.91893853320467274178;
    if (n <= 15.0) {
        return std::lgamma(n + 1.0) - ((n + 0.5) * std::log(n) - n + kHalfLog2Pi);
    }
    const double r = 1.0 / n;
    const double r2 = r * r;
    return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (1.0 / 1680 - r2 / 1188))));
}

double log_binomial(double n, double k) {
    if (k < 0 || k > n) {
        return -std::numeric_limits<double>::infinity();
    }
    if (k == 0 || k == n) {
        return 0.0;
    }
    if (n < 30.0) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    }
    constexpr double kLog2Pi = 1.83787706640934548356;
    const double rest = n - k;
    const double entropy = -k * std::log(k / n) - rest * std::log1p(-k / n);
    return entropy + 0.5 * (std::log(n / (k * rest)) - kLog2Pi) + stirling_error(n) -
           stirling_error(k) - stirling_error(rest);
}

} // namespace asymlab::numeric
