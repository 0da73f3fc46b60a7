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

#include "asymlab/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "asymlab/errors.hpp"
#include "asymlab/serialization.hpp"

namespace asymlab {

namespace {

using nlohmann::json;

void reject_unknown(const json &j, std::initializer_list<const char *> allowed,
                    const std::string &where) {
    if (!j.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &[key, _] : j.items()) {
        if (!ok.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

template <class T>
T get(const json &j, const char *key, const std::string &where) {
    if (!j.contains(key)) {
        throw ConfigError("missing key '" + std::string(key) + "' in " + where);
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError("bad value for '" + std::string(key) + "' in " + where + ": " +
                          e.what());
    }
}

ExperimentKind parse_kind(const std::string &s) {
    static const std::pair<const char *, ExperimentKind> table[] = {
        {"u1-asymmetry", ExperimentKind::u1_asymmetry},
        {"su2-asymmetry", ExperimentKind::su2_asymmetry},
        {"dicke-sweep", ExperimentKind::dicke_sweep},
        {"kink-sweep", ExperimentKind::kink_sweep},
        {"product-sweep", ExperimentKind::product_sweep},
        {"circuit-clustering", ExperimentKind::circuit_clustering},
        {"bound-suite", ExperimentKind::bound_suite},
    };
    for (const auto &[name, kind] : table) {
        if (s == name) {
            return kind;
        }
    }
    throw ConfigError("unknown experiment '" + s + "'");
}

LocalState parse_local(const json &j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const double r = 1.0 / std::sqrt(2.0);
        if (s == "zero") {
            return Eigen::Vector2cd(1.0, 0.0);
        }
        if (s == "one") {
            return Eigen::Vector2cd(0.0, 1.0);
        }
        if (s == "plus") {
            return Eigen::Vector2cd(r, r);
        }
        if (s == "minus") {
            return Eigen::Vector2cd(r, -r);
        }
        throw ConfigError("unknown local state '" + s + "'");
    }
    reject_unknown(j, {"x", "amplitudes", "density"}, "local state");
    if (j.size() != 1) {
        throw ConfigError("local state needs exactly one of x, amplitudes, density");
    }
    try {
        if (j.contains("x")) {
            const double x = j.at("x").get<double>();
            if (!(x >= 0.0 && x <= 1.0)) {
                throw ConfigError("local state x must lie in [0, 1]");
            }
            return Eigen::Vector2cd(std::sqrt(x), std::sqrt(1.0 - x));
        }
        if (j.contains("amplitudes")) {
            const CMatrix v = matrix_from_json(j.at("amplitudes"), 2, 1);
            return Eigen::Vector2cd(v(0, 0), v(1, 0));
        }
        return Eigen::Matrix2cd(matrix_from_json(j.at("density"), 2, 2));
    } catch (const ValidationError &e) {
        throw ConfigError(std::string("local state: ") + e.what());
    }
}

spec::Product parse_product(const json &j) {
    spec::Product p;
    if (j.contains("local") == j.contains("locals")) {
        throw ConfigError("product state needs exactly one of 'local' or 'locals'");
    }
    if (j.contains("local")) {
        p.locals.push_back(parse_local(j.at("local")));
    } else {
        for (const auto &l : j.at("locals")) {
            p.locals.push_back(parse_local(l));
        }
        if (p.locals.empty()) {
            throw ConfigError("'locals' must not be empty");
        }
    }
    return p;
}

bool all_pure(const spec::Product &p) {
    for (const auto &l : p.locals) {
        if (!std::holds_alternative<Eigen::Vector2cd>(l)) {
            return false;
        }
    }
    return true;
}

void require_caps(int n, bool mixed, const std::string &what) {
    if (mixed) {
        require_density_capacity(n, what.c_str());
    } else {
        require_statevector_capacity(n, what.c_str());
    }
}

void require_closed_form(int n) {
    if (n > kMaxClosedFormN) {
        throw ResourceError("N = " + std::to_string(n) + " exceeds the closed-form limit " +
                            std::to_string(kMaxClosedFormN));
    }
}

} // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::u1_asymmetry:
        return "u1-asymmetry";
    case ExperimentKind::su2_asymmetry:
        return "su2-asymmetry";
    case ExperimentKind::dicke_sweep:
        return "dicke-sweep";
    case ExperimentKind::kink_sweep:
        return "kink-sweep";
    case ExperimentKind::product_sweep:
        return "product-sweep";
    case ExperimentKind::circuit_clustering:
        return "circuit-clustering";
    case ExperimentKind::bound_suite:
        return "bound-suite";
    }
    return "unknown";
}

std::uint64_t fnv1a(const std::string &text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string ExperimentConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(source.dump())));
    return buf;
}

std::vector<int> ExperimentConfig::sizes() const {
    if (!sweep.empty()) {
        return sweep;
    }
    if (geometry) {
        return {geometry->num_sites()};
    }
    return {};
}

StateSpec parse_state_spec(const json &j, const std::filesystem::path &base_dir) {
    if (!j.is_object()) {
        throw ConfigError("state spec must be an object");
    }
    const auto kind = get<std::string>(j, "kind", "state");
    if (kind == "product") {
        reject_unknown(j, {"kind", "local", "locals"}, "product state");
        return parse_product(j);
    }
    if (kind == "circuit") {
        reject_unknown(j, {"kind", "file", "depth", "seed", "input"}, "circuit state");
        spec::Circuit c;
        if (j.contains("file") == j.contains("depth")) {
            throw ConfigError("circuit state needs exactly one of 'file' or 'depth'");
        }
        if (j.contains("file")) {
            c.file = base_dir / get<std::string>(j, "file", "circuit state");
        } else {
            c.depth = get<int>(j, "depth", "circuit state");
            if (c.depth < 0) {
                throw ConfigError("circuit depth must be non-negative");
            }
            c.seed = j.value("seed", std::uint64_t{0});
        }
        if (j.contains("input")) {
            const auto &in = j.at("input");
            reject_unknown(in, {"kind", "local", "locals"}, "circuit input");
            if (in.value("kind", std::string("product")) != "product") {
                throw ConfigError("circuit input must be a product state");
            }
            c.input = parse_product(in);
        } else {
            c.input.locals.push_back(Eigen::Vector2cd(1.0, 0.0));
        }
        return c;
    }
    if (kind == "dicke") {
        reject_unknown(j, {"kind", "k", "ratio", "axis"}, "dicke state");
        spec::Dicke d;
        if (j.contains("k") == j.contains("ratio")) {
            throw ConfigError("dicke state needs exactly one of 'k' or 'ratio'");
        }
        if (j.contains("k")) {
            d.k = get<int>(j, "k", "dicke state");
        } else {
            d.ratio = get<double>(j, "ratio", "dicke state");
            if (!(*d.ratio >= 0.0 && *d.ratio <= 1.0)) {
                throw ConfigError("dicke ratio must lie in [0, 1]");
            }
        }
        const auto axis = j.value("axis", std::string("x"));
        if (axis != "x" && axis != "z") {
            throw ConfigError("dicke axis must be 'x' or 'z'");
        }
        d.rotated = axis == "x";
        return d;
    }
    if (kind == "kink") {
        reject_unknown(j, {"kind"}, "kink state");
        return spec::Kink{};
    }
    if (kind == "random") {
        reject_unknown(j, {"kind", "seed", "mixed"}, "random state");
        return spec::Random{j.value("seed", std::uint64_t{0}), j.value("mixed", false)};
    }
    if (kind == "file") {
        reject_unknown(j, {"kind", "path"}, "file state");
        return spec::File{base_dir / get<std::string>(j, "path", "file state")};
    }
    throw ConfigError("unknown state kind '" + kind + "'");
}

spec::Product parse_product_shorthand(const std::string &text) {
    if (!text.empty() && text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ConfigError(std::string("bad input spec: ") + e.what());
        }
        reject_unknown(j, {"kind", "local", "locals"}, "input spec");
        return parse_product(j);
    }
    if (text.rfind("x=", 0) == 0) {
        double x = 0.0;
        try {
            x = std::stod(text.substr(2));
        } catch (const std::exception &) {
            throw ConfigError("bad input spec '" + text + "'");
        }
        return parse_product(json{{"local", {{"x", x}}}});
    }
    return parse_product(json{{"local", text}});
}

std::vector<LocalState> expand_locals(const spec::Product &p, int n_qubits) {
    if (p.locals.size() == 1) {
        return std::vector<LocalState>(static_cast<std::size_t>(n_qubits), p.locals.front());
    }
    if (static_cast<int>(p.locals.size()) != n_qubits) {
        throw ConfigError("product state lists " + std::to_string(p.locals.size()) +
                          " local states for " + std::to_string(n_qubits) + " sites");
    }
    return p.locals;
}

ExperimentConfig parse_config(const json &j, const std::filesystem::path &base_dir) {
    reject_unknown(j,
                   {"experiment", "geometry", "state", "sweep", "seed", "output", "log_base",
                    "range", "tolerance"},
                   "config");
    ExperimentConfig c;
    c.source = j;
    c.experiment = parse_kind(get<std::string>(j, "experiment", "config"));
    if (j.contains("geometry")) {
        const auto &g = j.at("geometry");
        reject_unknown(g, {"dimension", "linear_size"}, "geometry");
        try {
            c.geometry.emplace(get<int>(g, "dimension", "geometry"),
                               get<int>(g, "linear_size", "geometry"));
        } catch (const ArgumentError &e) {
            throw ConfigError(std::string("geometry: ") + e.what());
        }
    }
    if (j.contains("state")) {
        c.state = parse_state_spec(j.at("state"), base_dir);
    }
    if (j.contains("sweep")) {
        c.sweep = get<std::vector<int>>(j, "sweep", "config");
        for (int n : c.sweep) {
            if (n < 1) {
                throw ConfigError("sweep sizes must be positive");
            }
        }
    }
    c.seed = j.value("seed", std::uint64_t{0});
    c.output = j.contains("output") ? std::filesystem::path(get<std::string>(j, "output", "config"))
                                    : std::filesystem::path("asymlab_");
    const auto base = j.value("log_base", std::string("e"));
    if (base == "e") {
        c.log_base = LogBase::e;
    } else if (base == "2") {
        c.log_base = LogBase::two;
    } else {
        throw ConfigError("log_base must be \"e\" or \"2\"");
    }
    if (j.contains("range")) {
        c.range = get<int>(j, "range", "config");
        if (*c.range < 0) {
            throw ConfigError("range must be non-negative");
        }
    }
    c.tolerance = j.value("tolerance", 1e-10);
    if (!(c.tolerance > 0.0)) {
        throw ConfigError("tolerance must be positive");
    }

    // Capability envelope.
    const auto sizes = c.sizes();
    if (c.experiment != ExperimentKind::bound_suite && sizes.empty()) {
        throw ConfigError("config needs a 'sweep' or a 'geometry'");
    }
    const bool has = c.state.has_value();
    switch (c.experiment) {
    case ExperimentKind::bound_suite:
        break;
    case ExperimentKind::kink_sweep:
        if (has && !std::holds_alternative<spec::Kink>(*c.state)) {
            throw ConfigError("kink-sweep takes a kink state");
        }
        std::for_each(sizes.begin(), sizes.end(), require_closed_form);
        break;
    case ExperimentKind::dicke_sweep:
        if (has && !std::holds_alternative<spec::Dicke>(*c.state)) {
            throw ConfigError("dicke-sweep takes a dicke state");
        }
        std::for_each(sizes.begin(), sizes.end(), require_closed_form);
        break;
    case ExperimentKind::product_sweep:
        if (has && !std::holds_alternative<spec::Product>(*c.state)) {
            throw ConfigError("product-sweep takes a product state");
        }
        if (has && !all_pure(std::get<spec::Product>(*c.state))) {
            throw ConfigError("product-sweep takes pure local states");
        }
        std::for_each(sizes.begin(), sizes.end(), require_closed_form);
        break;
    case ExperimentKind::u1_asymmetry:
    case ExperimentKind::su2_asymmetry:
    case ExperimentKind::circuit_clustering: {
        if (!has) {
            throw ConfigError(to_string(c.experiment) + " needs a 'state'");
        }
        const bool su2 = c.experiment == ExperimentKind::su2_asymmetry;
        if (c.experiment == ExperimentKind::circuit_clustering) {
            if (!std::holds_alternative<spec::Circuit>(*c.state)) {
                throw ConfigError("circuit-clustering takes a circuit state");
            }
            if (!c.geometry) {
                throw ConfigError("circuit-clustering needs a 'geometry'");
            }
        }
        for (int n : sizes) {
            if (su2 && n % 2 != 0) {
                throw ConfigError("su2-asymmetry supports even N only, got " +
                                  std::to_string(n));
            }
            const auto &st = *c.state;
            bool mixed = false;
            bool closed_form = false;
            if (const auto *p = std::get_if<spec::Product>(&st)) {
                mixed = !all_pure(*p);
                closed_form = !mixed && !su2;
            } else if (const auto *ci = std::get_if<spec::Circuit>(&st)) {
                mixed = !all_pure(ci->input);
            } else if (const auto *r = std::get_if<spec::Random>(&st)) {
                mixed = r->mixed;
            } else if (std::holds_alternative<spec::Dicke>(st) ||
                       std::holds_alternative<spec::Kink>(st)) {
                closed_form = !su2;
            }
            if (closed_form) {
                require_closed_form(n);
                continue;
            }
            require_caps(n, mixed || su2, to_string(c.experiment));
        }
        break;
    }
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    const json j = read_json_file(path);
    return parse_config(j, path.parent_path());
}

} // namespace asymlab
