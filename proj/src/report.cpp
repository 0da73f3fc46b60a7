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

#include "asymlab/report.hpp"

#include <algorithm>

namespace asymlab {

const BoundCheck *AsymmetryReport::bound(std::string_view name) const {
    const auto it = std::find_if(bounds.begin(), bounds.end(),
                                 [&](const BoundCheck &b) { return b.name == name; });
    return it == bounds.end() ? nullptr : &*it;
}

bool AsymmetryReport::all_passed() const {
    return delta_s >= -kBoundSlack &&
           std::all_of(bounds.begin(), bounds.end(),
                       [](const BoundCheck &b) { return b.passed(); });
}

nlohmann::json AsymmetryReport::to_json(LogBase base) const {
    nlohmann::json j;
    j["group"] = group == SymmetryGroup::u1 ? "u1" : "su2";
    j["n_qubits"] = n_qubits;
    j["log_base"] = base == LogBase::e ? "e" : "2";
    j["delta_s"] = convert_nats(delta_s, base);
    j["shannon"] = convert_nats(shannon, base);
    if (variance) {
        j["variance"] = *variance;
    }
    nlohmann::json bj = nlohmann::json::object();
    nlohmann::json mj = nlohmann::json::object();
    nlohmann::json pj = nlohmann::json::object();
    for (const auto &b : bounds) {
        bj[b.name] = convert_nats(b.rhs, base);
        mj[b.name] = convert_nats(b.margin(), base);
        pj[b.name] = b.passed();
    }
    j["bounds"] = bj;
    j["margins"] = mj;
    j["passed"] = pj;
    j["all_passed"] = all_passed();
    return j;
}

} // namespace asymlab
