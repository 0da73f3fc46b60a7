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

#include "asymlab/serialization.hpp"

#include <fstream>
#include <string>

#include "asymlab/errors.hpp"

namespace asymlab {

namespace {

const nlohmann::json &require_key(const nlohmann::json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

} // namespace

nlohmann::json complex_to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx complex_from_json(const nlohmann::json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ValidationError("complex numbers are serialized as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json matrix_to_json(const CMatrix &m) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out.push_back(complex_to_json(m(r, c)));
        }
    }
    return out;
}

CMatrix matrix_from_json(const nlohmann::json &j, Eigen::Index rows, Eigen::Index cols) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows * cols) {
        throw ValidationError("expected " + std::to_string(rows * cols) +
                              " matrix entries");
    }
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(j[static_cast<std::size_t>(r * cols + c)]);
        }
    }
    return m;
}

nlohmann::json circuit_to_json(const BrickworkCircuit &c) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto &layer : c.layers()) {
        nlohmann::json jl = nlohmann::json::array();
        for (const auto &gate : layer) {
            jl.push_back({{"sites", gate.sites}, {"unitary", matrix_to_json(gate.unitary)}});
        }
        layers.push_back(std::move(jl));
    }
    return {{"geometry",
             {{"dimension", c.geometry().dimension()},
              {"linear_size", c.geometry().linear_size()}}},
            {"depth", c.depth()},
            {"layers", std::move(layers)}};
}

BrickworkCircuit circuit_from_json(const nlohmann::json &j,
                                   const std::optional<LatticeGeometry> &geometry) {
    std::optional<LatticeGeometry> g = geometry;
    if (j.contains("geometry")) {
        const auto &jg = j.at("geometry");
        LatticeGeometry from_file(require_key(jg, "dimension").get<int>(),
                                  require_key(jg, "linear_size").get<int>());
        if (g && !(*g == from_file)) {
            throw ValidationError("circuit geometry does not match the requested lattice");
        }
        g = from_file;
    }
    if (!g) {
        throw ValidationError("circuit file has no geometry and none was supplied");
    }
    const auto &jl = require_key(j, "layers");
    if (!jl.is_array()) {
        throw ValidationError("'layers' must be an array");
    }
    std::vector<Layer> layers;
    for (const auto &layer_json : jl) {
        Layer layer;
        for (const auto &gj : layer_json) {
            Gate gate;
            gate.sites = require_key(gj, "sites").get<std::vector<int>>();
            if (gate.sites.empty() || gate.sites.size() > 2) {
                throw ValidationError("gates act on one or two sites");
            }
            for (int s : gate.sites) {
                if (s < 0 || s >= g->num_sites()) {
                    throw ValidationError("gate site " + std::to_string(s) + " out of range");
                }
            }
            const Eigen::Index dim = Eigen::Index{1} << gate.sites.size();
            gate.unitary = matrix_from_json(require_key(gj, "unitary"), dim, dim);
            layer.push_back(std::move(gate));
        }
        layers.push_back(std::move(layer));
    }
    if (j.contains("depth") && j.at("depth").get<int>() != static_cast<int>(layers.size())) {
        throw ValidationError("'depth' disagrees with the number of layers");
    }
    return BrickworkCircuit(*g, std::move(layers));
}

nlohmann::json channel_to_json(const KrausChannel &ch) {
    nlohmann::json kraus = nlohmann::json::array();
    for (const auto &op : ch.kraus_ops()) {
        kraus.push_back(matrix_to_json(op));
    }
    return {{"support", ch.support()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const nlohmann::json &j) {
    auto support = require_key(j, "support").get<std::vector<int>>();
    if (support.empty() || support.size() > 16) {
        throw ValidationError("channel support must have between 1 and 16 sites");
    }
    const Eigen::Index dim = Eigen::Index{1} << support.size();
    std::vector<CMatrix> ops;
    for (const auto &op : require_key(j, "kraus")) {
        ops.push_back(matrix_from_json(op, dim, dim));
    }
    return KrausChannel(std::move(support), std::move(ops));
}

nlohmann::json state_to_json(const State &state) {
    if (const auto *psi = std::get_if<StateVector>(&state)) {
        nlohmann::json amps = nlohmann::json::array();
        for (Eigen::Index i = 0; i < psi->dimension(); ++i) {
            amps.push_back(complex_to_json((*psi)[i]));
        }
        return {{"n_qubits", psi->n_qubits()}, {"amplitudes", std::move(amps)}};
    }
    const auto &rho = std::get<DensityMatrix>(state);
    return {{"n_qubits", rho.n_qubits()}, {"density_matrix", matrix_to_json(rho.matrix())}};
}

State state_from_json(const nlohmann::json &j) {
    const int n = require_key(j, "n_qubits").get<int>();
    if (n < 1 || n > 30) {
        throw ValidationError("n_qubits out of range: " + std::to_string(n));
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (j.contains("amplitudes")) {
        require_statevector_capacity(n, "state file");
        return StateVector(n, matrix_from_json(j.at("amplitudes"), dim, 1));
    }
    if (j.contains("density_matrix")) {
        require_density_capacity(n, "state file");
        return DensityMatrix(n, matrix_from_json(j.at("density_matrix"), dim, dim));
    }
    throw ValidationError("state file needs 'amplitudes' or 'density_matrix'");
}

nlohmann::json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const nlohmann::json &j) {
    std::ofstream out(path);
    if (!out) {
        throw ResourceError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

} // namespace asymlab
