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

#include "asymlab/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <new>
#include <numbers>
#include <thread>

#include "asymlab/circuit.hpp"
#include "asymlab/closed_forms.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/schur.hpp"
#include "asymlab/serialization.hpp"
#include "asymlab/su2.hpp"
#include "asymlab/u1.hpp"

namespace asymlab {

namespace {

const std::vector<std::string> kU1Bounds{"log_n_plus_1", "massey", "clustering"};
const std::vector<std::string> kSu2Bounds{"shannon_rhs", "general"};

LatticeGeometry geometry_for(const ExperimentConfig &config, int n) {
    if (config.geometry && config.geometry->num_sites() == n) {
        return *config.geometry;
    }
    const int d = config.geometry ? config.geometry->dimension() : 1;
    const int m = static_cast<int>(std::lround(std::pow(static_cast<double>(n), 1.0 / d)));
    const LatticeGeometry g(d, std::max(m, 1));
    if (g.num_sites() != n) {
        throw ConfigError("N = " + std::to_string(n) + " is not a " + std::to_string(d) +
                          "-dimensional torus size");
    }
    return g;
}

bool pure_locals(const std::vector<LocalState> &locals) {
    return std::all_of(locals.begin(), locals.end(), [](const LocalState &l) {
        return std::holds_alternative<Eigen::Vector2cd>(l);
    });
}

int dicke_k(const spec::Dicke &d, int n) {
    const int k = d.k ? *d.k : static_cast<int>(std::lround(*d.ratio * n));
    if (k < 0 || k > n) {
        throw ConfigError("dicke k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
    }
    return k;
}

struct Prepared {
    std::optional<State> state;
    std::optional<ChargeDistribution> closed_form;
    std::optional<int> depth;
    std::optional<BrickworkCircuit> circuit;
};

Prepared prepare(const ExperimentConfig &config, const StateSpec &spec, int n,
                 const LatticeGeometry &g, bool need_state) {
    Prepared out;
    if (const auto *p = std::get_if<spec::Product>(&spec)) {
        const auto locals = expand_locals(*p, n);
        if (!need_state && pure_locals(locals)) {
            std::vector<double> x;
            for (const auto &l : locals) {
                x.push_back(std::norm(std::get<Eigen::Vector2cd>(l)[0]) /
                            std::get<Eigen::Vector2cd>(l).squaredNorm());
            }
            out.closed_form = poisson_binomial(x);
            return out;
        }
        if (pure_locals(locals)) {
            require_statevector_capacity(n, "product state");
        } else {
            require_density_capacity(n, "product state");
        }
        out.state = product_state(locals);
        return out;
    }
    if (const auto *c = std::get_if<spec::Circuit>(&spec)) {
        if (!c->file.empty()) {
            out.circuit = circuit_from_json(read_json_file(c->file), g);
        } else {
            out.circuit = random_brickwork(g, c->depth, c->seed);
        }
        out.depth = out.circuit->depth();
        const auto locals = expand_locals(c->input, n);
        if (pure_locals(locals)) {
            require_statevector_capacity(n, "circuit state");
        } else {
            require_density_capacity(n, "circuit state");
        }
        out.state = apply_circuit(product_state(locals), *out.circuit);
        return out;
    }
    if (const auto *d = std::get_if<spec::Dicke>(&spec)) {
        const int k = dicke_k(*d, n);
        if (!need_state) {
            if (!d->rotated) {
                std::vector<double> p(static_cast<std::size_t>(n + 1), 0.0);
                p[static_cast<std::size_t>(n - k)] = 1.0;
                out.closed_form = ChargeDistribution(std::move(p));
            } else if (2 * k == n) {
                out.closed_form = dicke_half_distribution(k);
            } else {
                out.closed_form = rotated_dicke_distribution(n, k);
            }
            return out;
        }
        out.state = dicke_state(n, k, d->rotated ? DickeAxis::x : DickeAxis::z);
        return out;
    }
    if (std::holds_alternative<spec::Kink>(spec)) {
        if (!need_state) {
            out.closed_form = kink_distribution(n);
        } else {
            out.state = kink_state(n);
        }
        return out;
    }
    if (const auto *r = std::get_if<spec::Random>(&spec)) {
        const std::uint64_t seed = r->seed + config.seed;
        if (r->mixed) {
            out.state = random_density_matrix(n, seed);
        } else {
            out.state = random_state(n, seed);
        }
        return out;
    }
    const auto &f = std::get<spec::File>(spec);
    out.state = state_from_json(read_json_file(f.path));
    if (num_qubits(*out.state) != n) {
        throw ConfigError(f.path.string() + " holds " + std::to_string(num_qubits(*out.state)) +
                          " qubits, expected " + std::to_string(n));
    }
    return out;
}

StateSpec default_spec(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::dicke_sweep:
        return spec::Dicke{std::nullopt, 0.5, true};
    case ExperimentKind::kink_sweep:
        return spec::Kink{};
    default: {
        const double r = 1.0 / std::sqrt(2.0);
        return spec::Product{{Eigen::Vector2cd(r, r)}};
    }
    }
}

void ensure_parent(const std::filesystem::path &file) {
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
}

std::filesystem::path artifact(const ExperimentConfig &config, const std::string &name) {
    return std::filesystem::path(config.output.string() + name);
}

std::vector<SweepPoint> evaluate_all(const ExperimentConfig &config) {
    const auto sizes = config.sizes();
    std::vector<SweepPoint> points(sizes.size());
    std::vector<std::exception_ptr> errors(sizes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < sizes.size(); i = next++) {
            try {
                points[i] = evaluate_point(config, sizes[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), sizes.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return points;
}

void write_points_csv(const ExperimentConfig &config, const std::vector<SweepPoint> &points,
                      const std::filesystem::path &path) {
    const bool su2 = config.experiment == ExperimentKind::su2_asymmetry;
    const bool clustering = config.experiment == ExperimentKind::circuit_clustering;
    const auto &names = su2 ? kSu2Bounds : kU1Bounds;
    std::ofstream out(path);
    if (!out) {
        throw ResourceError("cannot write " + path.string());
    }
    out << "config_hash,experiment,N,delta_s,exp_delta_s,shannon,variance";
    for (const auto &b : names) {
        out << ",bound_" << b << ",margin_" << b << ",passed_" << b;
    }
    if (clustering) {
        out << ",depth,spreading_range,effective_range,max_violation";
    }
    out << '\n';
    const std::string hash = config.hash();
    const auto conv = [&](double nats) { return convert_nats(nats, config.log_base); };
    for (const auto &p : points) {
        const auto &r = p.report;
        out << hash << ',' << to_string(config.experiment) << ',' << p.n << ','
            << format_number(conv(r.delta_s)) << ',' << format_number(std::exp(r.delta_s)) << ','
            << format_number(conv(r.shannon)) << ',' << format_number(r.variance);
        for (const auto &name : names) {
            const BoundCheck *b = r.bound(name);
            if (b == nullptr) {
                out << ",,,";
                continue;
            }
            out << ',' << format_number(conv(b->rhs)) << ',' << format_number(conv(b->margin()))
                << ',' << (b->passed() ? 1 : 0);
        }
        if (clustering) {
            out << ',' << p.depth.value_or(0) << ',' << p.spreading_range.value_or(0) << ','
                << p.cluster->effective_range << ',' << format_number(p.cluster->max_violation);
        }
        out << '\n';
    }
}

void write_plot(const ExperimentConfig &config, const std::filesystem::path &csv,
                const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw ResourceError("cannot write " + path.string());
    }
    out << "# gnuplot script: linearized asymmetry exp(Delta S) against N\n"
        << "set datafile separator ','\n"
        << "set key top left\n"
        << "set xlabel 'N'\n"
        << "set ylabel 'exp(Delta S)'\n"
        << "set title '" << to_string(config.experiment) << " (config " << config.hash()
        << ")'\n"
        << "set terminal pngcairo size 900,600\n"
        << "set output '" << csv.filename().replace_extension(".png").string() << "'\n"
        << "plot '" << csv.filename().string()
        << "' using 3:5 skip 1 with linespoints title 'exp(Delta S)'\n";
}

nlohmann::json point_json(const ExperimentConfig &config, const SweepPoint &p) {
    auto j = p.report.to_json(config.log_base);
    j["N"] = p.n;
    j["exp_delta_s"] = std::exp(p.report.delta_s);
    if (p.cluster) {
        j["cluster"] = p.cluster->to_json();
        j["cluster"].erase("pairs");
        j["spreading_range"] = *p.spreading_range;
        j["depth"] = *p.depth;
    }
    j["passed_all"] = p.passed();
    return j;
}

} // namespace

int exit_code_for(const std::exception &e) noexcept {
    if (dynamic_cast<const ResourceError *>(&e) != nullptr ||
        dynamic_cast<const std::bad_alloc *>(&e) != nullptr) {
        return kExitResource;
    }
    if (dynamic_cast<const ConfigError *>(&e) != nullptr ||
        dynamic_cast<const ValidationError *>(&e) != nullptr ||
        dynamic_cast<const ArgumentError *>(&e) != nullptr ||
        dynamic_cast<const DomainError *>(&e) != nullptr ||
        dynamic_cast<const PreconditionError *>(&e) != nullptr ||
        dynamic_cast<const nlohmann::json::exception *>(&e) != nullptr) {
        return kExitConfig;
    }
    return kExitInvariant;
}

bool SweepPoint::passed() const {
    bool ok = report.all_passed();
    if (cluster) {
        ok = ok && cluster->clusters() && spreading_range && depth &&
             *spreading_range <= lightcone_range(*depth) &&
             cluster->effective_range <= 2 * *spreading_range;
    }
    return ok;
}

std::string format_number(std::optional<double> v) {
    if (!v) {
        return {};
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    return buf;
}

DickeInterceptConstants dicke_intercept_constants() {
    return {std::numbers::pi / 4, std::log(std::numbers::pi / 4), std::log(std::numbers::pi / 8)};
}

SweepPoint evaluate_point(const ExperimentConfig &config, int n) {
    const LatticeGeometry g = geometry_for(config, n);
    const StateSpec spec = config.state ? *config.state : default_spec(config.experiment);
    const bool su2 = config.experiment == ExperimentKind::su2_asymmetry;
    const bool clustering = config.experiment == ExperimentKind::circuit_clustering;
    const Prepared prep = prepare(config, spec, n, g, su2 || clustering);

    SweepPoint point;
    point.n = n;
    point.depth = prep.depth;
    std::optional<ClusteringHypothesis> hyp;
    if (config.range) {
        hyp = ClusteringHypothesis{g, *config.range};
    } else if (prep.depth) {
        hyp = ClusteringHypothesis{g, 2 * lightcone_range(*prep.depth)};
    }
    if (su2) {
        point.report = su2_asymmetry(*prep.state, *build_schur_basis(n));
    } else if (prep.closed_form) {
        point.report = u1_report_from_distribution(*prep.closed_form, hyp);
    } else {
        point.report = u1_asymmetry(*prep.state, hyp);
    }
    if (clustering) {
        point.cluster = verify_cluster_property(*prep.state, hyp->range, g, config.tolerance);
        point.spreading_range = operator_spreading_range(*prep.circuit);
    }
    return point;
}

RunOutcome run(const ExperimentConfig &config, const SuiteHooks &hooks) {
    RunOutcome outcome;
    const auto csv = artifact(config, "results.csv");
    const auto json_path = artifact(config, "report.json");
    ensure_parent(csv);

    if (config.experiment == ExperimentKind::bound_suite) {
        outcome.suite = run_bound_suite(config.seed, hooks);
        std::ofstream out(csv);
        if (!out) {
            throw ResourceError("cannot write " + csv.string());
        }
        out << "config_hash,check,passed,margin,samples\n";
        for (const auto &c : outcome.suite->checks) {
            out << config.hash() << ',' << c.name << ',' << (c.passed ? 1 : 0) << ','
                << format_number(c.margin) << ',' << c.samples << '\n';
        }
        outcome.report = outcome.suite->to_json();
        outcome.report["config_hash"] = config.hash();
        outcome.report["experiment"] = to_string(config.experiment);
        outcome.report["failed_inequalities"] = outcome.suite->failures();
        outcome.report["all_passed"] = outcome.suite->all_passed();
        write_json_file(json_path, outcome.report);
        outcome.artifacts = {csv, json_path};
        outcome.exit_code = outcome.suite->all_passed() ? kExitOk : kExitInvariant;
        return outcome;
    }

    outcome.points = evaluate_all(config);
    write_points_csv(config, outcome.points, csv);

    nlohmann::json report;
    report["config_hash"] = config.hash();
    report["experiment"] = to_string(config.experiment);
    report["log_base"] = config.log_base == LogBase::e ? "e" : "2";
    report["points"] = nlohmann::json::array();
    std::size_t failed_bounds = 0;
    std::size_t failed_points = 0;
    std::vector<std::pair<double, double>> series;
    for (const auto &p : outcome.points) {
        report["points"].push_back(point_json(config, p));
        for (const auto &b : p.report.bounds) {
            failed_bounds += b.passed() ? 0 : 1;
        }
        failed_points += p.passed() ? 0 : 1;
        series.emplace_back(p.n, p.report.delta_s);
    }
    if (series.size() >= 3) {
        const auto fit = asymptotic_fit(series);
        report["fit"] = {{"slope", fit.slope},
                         {"intercept_nats", fit.intercept},
                         {"residual_nats", fit.residual}};
        if (config.experiment == ExperimentKind::dicke_sweep) {
            const auto c = dicke_intercept_constants();
            report["fit"]["reference_intercepts"] = {{"pi_over_4", c.pi_over_4},
                                                     {"log_pi_over_4", c.log_pi_over_4},
                                                     {"log_pi_over_8", c.log_pi_over_8}};
        }
    }
    report["failed_inequalities"] = failed_bounds;
    report["failed_points"] = failed_points;
    report["all_passed"] = failed_points == 0;
    write_json_file(json_path, report);
    outcome.artifacts = {csv, json_path};

    if (config.experiment == ExperimentKind::circuit_clustering) {
        const auto pairs = artifact(config, "pairs.csv");
        std::ofstream out(pairs);
        outcome.points.front().cluster->write_csv(out);
        outcome.artifacts.push_back(pairs);
    } else {
        const auto plot = artifact(config, "plot.gp");
        write_plot(config, csv, plot);
        outcome.artifacts.push_back(plot);
    }
    outcome.report = std::move(report);
    outcome.exit_code = failed_points == 0 ? kExitOk : kExitInvariant;
    return outcome;
}

} // namespace asymlab
