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

#include "asymlab/schur.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <string>

#include <json.hpp>

#include "asymlab/errors.hpp"

namespace asymlab {

namespace {

constexpr char kMagic[8] = {'A', 'S', 'Y', 'M', 'S', 'C', 'H', 'R'};

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Multiplicities n_t for k coupled spins, indexed by 2s.
std::vector<std::int64_t> multiplicities_for(int k) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(k + 1), 0);
    for (int t = k % 2; t <= k; t += 2) {
        n[static_cast<std::size_t>(t)] = binomial(k, (k - t) / 2) - binomial(k, (k - t) / 2 - 1);
    }
    return n;
}

/// Column labels (2s, 2m, alpha) of block w for k spins: s descending, then alpha.
std::vector<SchurLabel> labels_for(int k, int w, const std::vector<std::int64_t> &mult) {
    const int twice_m = k - 2 * w;
    std::vector<SchurLabel> out;
    for (int t = k; t >= std::abs(twice_m); t -= 2) {
        for (std::int64_t a = 0; a < mult[static_cast<std::size_t>(t)]; ++a) {
            out.push_back({t, twice_m, static_cast<int>(a)});
        }
    }
    return out;
}

Eigen::Index offset_in_block(int k, int w, int t, const std::vector<std::int64_t> &mult) {
    const int twice_m = k - 2 * w;
    if (w < 0 || w > k || t < std::abs(twice_m) || t > k || (t - k) % 2 != 0) {
        return -1;
    }
    Eigen::Index off = 0;
    for (int u = k; u > t; u -= 2) {
        off += mult[static_cast<std::size_t>(u)];
    }
    return off;
}

/// Rank of each k-bit string among strings of equal weight, ascending.
std::vector<Eigen::Index> rank_table(int k) {
    const std::uint64_t dim = std::uint64_t{1} << k;
    std::vector<Eigen::Index> rank(dim);
    std::vector<Eigen::Index> next(static_cast<std::size_t>(k + 1), 0);
    for (std::uint64_t x = 0; x < dim; ++x) {
        rank[x] = next[static_cast<std::size_t>(std::popcount(x))]++;
    }
    return rank;
}

} // namespace

std::int64_t schur_multiplicity(int n_qubits, int twice_s) {
    if (n_qubits < 0) {
        throw ArgumentError("negative qubit count");
    }
    if (twice_s < 0 || twice_s > n_qubits || (n_qubits - twice_s) % 2 != 0) {
        return 0;
    }
    const int j = (n_qubits - twice_s) / 2;
    return binomial(n_qubits, j) - binomial(n_qubits, j - 1);
}

void SchurBasis::index_strings() {
    const int n = n_qubits_;
    strings_.assign(static_cast<std::size_t>(n + 1), {});
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < dim; ++x) {
        strings_[static_cast<std::size_t>(std::popcount(x))].push_back(x);
    }
    multiplicities_ = multiplicities_for(n);
    block_labels_.clear();
    for (int w = 0; w <= n; ++w) {
        block_labels_.push_back(labels_for(n, w, multiplicities_));
    }
}

SchurBasis::SchurBasis(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw DomainError("Schur basis supports even N >= 2 only, got " +
                          std::to_string(n_qubits));
    }
    require_density_capacity(n_qubits, "build_schur_basis");

    // k = 0: a single empty string with s = 0.
    std::vector<Eigen::MatrixXd> cur{Eigen::MatrixXd::Ones(1, 1)};
    std::vector<std::int64_t> cur_mult{1};
    for (int k = 0; k < n_qubits; ++k) {
        const int k1 = k + 1;
        const auto new_mult = multiplicities_for(k1);
        const auto new_rank = rank_table(k1);
        const auto old_rank = rank_table(k);
        std::vector<std::vector<std::uint64_t>> old_strings(static_cast<std::size_t>(k + 1));
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
            old_strings[static_cast<std::size_t>(std::popcount(x))].push_back(x);
        }
        std::vector<Eigen::MatrixXd> next(static_cast<std::size_t>(k1 + 1));
        for (int w = 0; w <= k1; ++w) {
            const auto labels = labels_for(k1, w, new_mult);
            const Eigen::Index dim = static_cast<Eigen::Index>(binomial(k1, w));
            Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
            const int tm = k1 - 2 * w;
            for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(labels.size()); ++col) {
                const int big_t = labels[static_cast<std::size_t>(col)].twice_s;
                int alpha = labels[static_cast<std::size_t>(col)].alpha;
                const std::int64_t from_below =
                    big_t >= 1 ? cur_mult[static_cast<std::size_t>(big_t - 1)] : 0;
                int t = 0;
                double c_up = 0.0;
                double c_down = 0.0;
                if (alpha < from_below) {
                    t = big_t - 1;
                    c_up = std::sqrt((t + tm + 1) / (2.0 * (t + 1)));
                    c_down = std::sqrt((t - tm + 1) / (2.0 * (t + 1)));
                } else {
                    alpha -= static_cast<int>(from_below);
                    t = big_t + 1;
                    c_up = -std::sqrt((t - tm + 1) / (2.0 * (t + 1)));
                    c_down = std::sqrt((t + tm + 1) / (2.0 * (t + 1)));
                }
                // Up: new bit 0, old weight w. Down: new bit 1, old weight w - 1.
                for (int bit = 0; bit <= 1; ++bit) {
                    const int ow = w - bit;
                    const double c = bit == 0 ? c_up : c_down;
                    const Eigen::Index off = offset_in_block(k, ow, t, cur_mult);
                    if (c == 0.0 || off < 0) {
                        continue;
                    }
                    const auto &ob = cur[static_cast<std::size_t>(ow)];
                    const auto &os = old_strings[static_cast<std::size_t>(ow)];
                    for (std::size_t r = 0; r < os.size(); ++r) {
                        const std::uint64_t x = (os[r] << 1) | static_cast<std::uint64_t>(bit);
                        b(new_rank[x], col) += c * ob(old_rank[os[r]], off + alpha);
                    }
                }
            }
            next[static_cast<std::size_t>(w)] = std::move(b);
        }
        cur = std::move(next);
        cur_mult = new_mult;
    }
    blocks_ = std::move(cur);
    index_strings();
}

std::vector<SchurLabel> SchurBasis::labels() const {
    std::vector<SchurLabel> out;
    for (const auto &bl : block_labels_) {
        out.insert(out.end(), bl.begin(), bl.end());
    }
    return out;
}

std::int64_t SchurBasis::multiplicity(int twice_s) const {
    if (twice_s < 0 || twice_s > n_qubits_) {
        return 0;
    }
    return multiplicities_[static_cast<std::size_t>(twice_s)];
}

Eigen::Index SchurBasis::block_offset(int weight, int twice_s) const {
    return offset_in_block(n_qubits_, weight, twice_s, multiplicities_);
}

Eigen::MatrixXd SchurBasis::dense() const {
    const Eigen::Index dim = dimension();
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::Index col0 = 0;
    for (int w = 0; w <= n_qubits_; ++w) {
        const auto &b = block(w);
        const auto &s = strings(w);
        for (Eigen::Index r = 0; r < b.rows(); ++r) {
            u.row(static_cast<Eigen::Index>(s[static_cast<std::size_t>(r)]))
                .segment(col0, b.cols()) = b.row(r);
        }
        col0 += b.cols();
    }
    return u;
}

CVector SchurBasis::to_schur(const CVector &psi) const {
    if (psi.size() != dimension()) {
        throw ArgumentError("vector dimension does not match the Schur basis");
    }
    CVector out(psi.size());
    Eigen::Index col0 = 0;
    for (int w = 0; w <= n_qubits_; ++w) {
        const auto &b = block(w);
        const auto &s = strings(w);
        CVector v(b.rows());
        for (Eigen::Index r = 0; r < b.rows(); ++r) {
            v[r] = psi[static_cast<Eigen::Index>(s[static_cast<std::size_t>(r)])];
        }
        out.segment(col0, b.cols()) = b.transpose().cast<cplx>() * v;
        col0 += b.cols();
    }
    return out;
}

void SchurBasis::save(const std::filesystem::path &matrix_file) const {
    std::ofstream out(matrix_file, std::ios::binary);
    if (!out) {
        throw ResourceError("cannot write " + matrix_file.string());
    }
    out.write(kMagic, sizeof kMagic);
    const std::int32_t n = n_qubits_;
    out.write(reinterpret_cast<const char *>(&n), sizeof n);
    for (const auto &b : blocks_) {
        const std::int64_t dim = b.rows();
        out.write(reinterpret_cast<const char *>(&dim), sizeof dim);
        out.write(reinterpret_cast<const char *>(b.data()),
                  static_cast<std::streamsize>(sizeof(double) * b.size()));
    }
    if (!out) {
        throw ResourceError("short write to " + matrix_file.string());
    }

    nlohmann::json labels = nlohmann::json::array();
    for (const auto &l : this->labels()) {
        labels.push_back({l.s(), l.m(), l.alpha});
    }
    auto sidecar = matrix_file;
    sidecar.replace_extension(".json");
    std::ofstream js(sidecar);
    js << nlohmann::json{{"N", n_qubits_}, {"labels", labels}}.dump() << '\n';
}

SchurBasis SchurBasis::load(const std::filesystem::path &matrix_file) {
    std::ifstream in(matrix_file, std::ios::binary);
    if (!in) {
        throw ResourceError("cannot open " + matrix_file.string());
    }
    char magic[sizeof kMagic];
    std::int32_t n = 0;
    in.read(magic, sizeof magic);
    in.read(reinterpret_cast<char *>(&n), sizeof n);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0 || n < 2 || n % 2 != 0 ||
        n > 30) {
        throw ValidationError(matrix_file.string() + " is not a Schur basis file");
    }
    SchurBasis basis;
    basis.n_qubits_ = n;
    for (int w = 0; w <= n; ++w) {
        std::int64_t dim = 0;
        in.read(reinterpret_cast<char *>(&dim), sizeof dim);
        if (!in || dim != binomial(n, w)) {
            throw ValidationError(matrix_file.string() + ": corrupt block header");
        }
        Eigen::MatrixXd b(dim, dim);
        in.read(reinterpret_cast<char *>(b.data()),
                static_cast<std::streamsize>(sizeof(double) * b.size()));
        if (!in) {
            throw ValidationError(matrix_file.string() + ": truncated block");
        }
        basis.blocks_.push_back(std::move(b));
    }
    basis.index_strings();
    return basis;
}

std::shared_ptr<const SchurBasis> build_schur_basis(int n_qubits,
                                                    const std::filesystem::path &cache_dir) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const SchurBasis>> cache;
    std::lock_guard lock(mutex);
    const auto file = cache_dir / ("schur_N" + std::to_string(n_qubits) + ".bin");
    const bool use_files = !cache_dir.empty();
    if (auto it = cache.find(n_qubits); it != cache.end()) {
        if (use_files && !std::filesystem::exists(file)) {
            std::filesystem::create_directories(cache_dir);
            it->second->save(file);
        }
        return it->second;
    }
    std::shared_ptr<const SchurBasis> basis;
    if (use_files && std::filesystem::exists(file)) {
        auto loaded = SchurBasis::load(file);
        if (loaded.n_qubits() != n_qubits) {
            throw ValidationError(file.string() + " holds N = " + std::to_string(loaded.n_qubits()));
        }
        basis = std::make_shared<const SchurBasis>(std::move(loaded));
    } else {
        basis = std::make_shared<const SchurBasis>(n_qubits);
        if (use_files) {
            std::filesystem::create_directories(cache_dir);
            basis->save(file);
        }
    }
    cache.emplace(n_qubits, basis);
    return basis;
}

} // namespace asymlab
