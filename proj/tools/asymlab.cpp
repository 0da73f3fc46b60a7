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
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "asymlab/clustering.hpp"
#include "asymlab/config.hpp"
#include "asymlab/errors.hpp"
#include "asymlab/runner.hpp"
#include "asymlab/schur.hpp"
#include "asymlab/serialization.hpp"
#include "asymlab/su2.hpp"
#include "asymlab/suite.hpp"
#include "asymlab/u1.hpp"

namespace {

using namespace asymlab;
using nlohmann::json;

double faulty_twirl_normalization(int twice_s) { return 1.0 / twice_s; }

SuiteHooks hooks_for(const std::string &fault) {
    SuiteHooks hooks;
    if (fault == "twirl-norm") {
        hooks.twirl_normalization = faulty_twirl_normalization;
    } else if (!fault.empty()) {
        throw ConfigError("unknown fault '" + fault + "'");
    }
    return hooks;
}

std::vector<int> geometric_sizes(int n_min, int n_max, int points, bool even) {
    if (n_min < 1 || n_max < n_min || points < 1) {
        throw ConfigError("need 1 <= n-min <= n-max and points >= 1");
    }
    std::set<int> sizes;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        int n = static_cast<int>(std::lround(n_min * std::pow(static_cast<double>(n_max) / n_min, t)));
        if (even && n % 2 != 0) {
            ++n;
        }
        sizes.insert(n);
    }
    return {sizes.begin(), sizes.end()};
}

json input_json(const std::string &text) {
    (void)parse_product_shorthand(text);
    if (text.front() == '{') {
        return json::parse(text);
    }
    if (text.rfind("x=", 0) == 0) {
        return json{{"local", {{"x", std::stod(text.substr(2))}}}};
    }
    return json{{"local", text}};
}

int report_run(const RunOutcome &outcome) {
    std::cout << outcome.report.dump(2) << '\n';
    for (const auto &a : outcome.artifacts) {
        std::cerr << "wrote " << a.string() << '\n';
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"asymlab: exact entanglement-asymmetry workbench for lattice qubit states"};
    app.require_subcommand(1);

    std::string fault;

    auto *run_cmd = app.add_subcommand("run", "run an experiment described by a JSON config");
    std::string config_path;
    run_cmd->add_option("config", config_path, "experiment config (JSON)")->required();
    run_cmd->add_option("--inject-fault", fault)->group("");

    auto *verify_cmd = app.add_subcommand("verify", "run an invariant battery");
    std::string suite_name;
    std::uint64_t seed = 42;
    std::string verify_json;
    verify_cmd->add_option("suite", suite_name, "bound-suite or oracle-suite")
        ->required()
        ->check(CLI::IsMember({"bound-suite", "oracle-suite"}));
    verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--json", verify_json, "also write the result matrix as JSON");
    verify_cmd->add_option("--inject-fault", fault)->group("");

    auto *dicke_cmd = app.add_subcommand("dicke", "rotated Dicke asymmetry sweep (closed form)");
    double ratio = 0.5;
    int n_min = 100;
    int n_max = 100000;
    int points = 4;
    std::string output = "dicke_";
    std::string log_base = "e";
    dicke_cmd->add_option("--ratio", ratio, "k / N")->capture_default_str();
    dicke_cmd->add_option("--n-min", n_min)->capture_default_str();
    dicke_cmd->add_option("--n-max", n_max)->capture_default_str();
    dicke_cmd->add_option("--points", points, "geometrically spaced sizes")->capture_default_str();
    dicke_cmd->add_option("--output", output, "artifact path prefix")->capture_default_str();
    dicke_cmd->add_option("--log-base", log_base)->check(CLI::IsMember({"e", "2"}));

    auto *kink_cmd = app.add_subcommand("kink", "kink-state asymmetry sweep (closed form)");
    int kink_min = 4;
    int kink_max = 1000000;
    int kink_points = 7;
    std::string kink_output = "kink_";
    kink_cmd->add_option("--n-min", kink_min)->capture_default_str();
    kink_cmd->add_option("--n-max", kink_max)->capture_default_str();
    kink_cmd->add_option("--points", kink_points)->capture_default_str();
    kink_cmd->add_option("--output", kink_output)->capture_default_str();
    kink_cmd->add_option("--log-base", log_base)->check(CLI::IsMember({"e", "2"}));

    auto *su2_cmd = app.add_subcommand("su2", "SU(2) asymmetry of a state file");
    std::string state_path;
    int su2_n = 0;
    int su2_range = -1;
    su2_cmd->add_option("--state", state_path, "state JSON file")->required();
    su2_cmd->add_option("--n", su2_n, "expected number of qubits (even)")->required();
    su2_cmd->add_option("--range", su2_range, "clustering range for the Casimir check (1D ring)");

    auto *cl_cmd = app.add_subcommand("clustering", "certify clustering of a circuit output");
    std::string circuit_path;
    std::string input_spec = "zero";
    int cl_range = -1;
    double tolerance = kClusterTolerance;
    std::string cl_output = "clustering_";
    cl_cmd->add_option("--circuit", circuit_path, "circuit JSON file")->required();
    cl_cmd->add_option("--input", input_spec, "product input: zero, one, plus, minus, x=<p>, or JSON")
        ->capture_default_str();
    cl_cmd->add_option("--range", cl_range, "claimed range (default 2 * depth)");
    cl_cmd->add_option("--tolerance", tolerance)->capture_default_str();
    cl_cmd->add_option("--output", cl_output, "artifact path prefix")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const SuiteHooks hooks = hooks_for(fault);
        if (*run_cmd) {
            return report_run(run(load_config(config_path), hooks));
        }
        if (*verify_cmd) {
            const auto result = suite_name == "bound-suite" ? run_bound_suite(seed, hooks)
                                                            : run_oracle_suite(seed, hooks);
            result.print(std::cout);
            if (!verify_json.empty()) {
                write_json_file(verify_json, result.to_json());
            }
            return result.all_passed() ? kExitOk : kExitInvariant;
        }
        if (*dicke_cmd) {
            const json cfg{{"experiment", "dicke-sweep"},
                           {"state", {{"kind", "dicke"}, {"ratio", ratio}, {"axis", "x"}}},
                           {"sweep", geometric_sizes(n_min, n_max, points, ratio == 0.5)},
                           {"output", output},
                           {"log_base", log_base}};
            return report_run(run(parse_config(cfg)));
        }
        if (*kink_cmd) {
            const json cfg{{"experiment", "kink-sweep"},
                           {"sweep", geometric_sizes(kink_min, kink_max, kink_points, false)},
                           {"output", kink_output},
                           {"log_base", log_base}};
            return report_run(run(parse_config(cfg)));
        }
        if (*su2_cmd) {
            const State state = state_from_json(read_json_file(state_path));
            if (num_qubits(state) != su2_n) {
                throw ConfigError(state_path + " holds " + std::to_string(num_qubits(state)) +
                                  " qubits, expected " + std::to_string(su2_n));
            }
            const auto report = su2_asymmetry(state, *build_schur_basis(su2_n));
            json out = report.to_json();
            const SectorTable table = sector_distribution(state, *build_schur_basis(su2_n));
            out["p_s"] = table.p_s;
            out["multiplicities"] = table.multiplicities;
            if (su2_range >= 0) {
                const auto gauge = zero_transverse_rotation(state);
                const auto c = casimir_constraint_check(gauge.state, su2_range, LatticeGeometry(1, su2_n));
                out["casimir"] = {{"lhs", c.casimir_lhs},
                                  {"precursor", c.precursor_lhs},
                                  {"bound", c.bound},
                                  {"passed", c.passed()}};
            }
            std::cout << out.dump(2) << '\n';
            const bool ok = report.all_passed() && (!out.contains("casimir") || out["casimir"]["passed"].get<bool>());
            return ok ? kExitOk : kExitInvariant;
        }
        if (*cl_cmd) {
            const json circuit = read_json_file(circuit_path);
            if (!circuit.contains("geometry")) {
                throw ConfigError(circuit_path + " has no geometry");
            }
            json cfg{{"experiment", "circuit-clustering"},
                     {"geometry", circuit.at("geometry")},
                     {"state",
                      {{"kind", "circuit"},
                       {"file", std::filesystem::absolute(circuit_path).string()},
                       {"input", input_json(input_spec)}}},
                     {"tolerance", tolerance},
                     {"output", cl_output}};
            if (cl_range >= 0) {
                cfg["range"] = cl_range;
            }
            return report_run(run(parse_config(cfg)));
        }
    } catch (const std::exception &e) {
        std::cerr << "asymlab: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitOk;
}
