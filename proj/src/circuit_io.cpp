// Copyright 2026 The Plateau Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "plateau/circuit.hpp"

namespace plateau {

using nlohmann::json;

namespace {

GateSpec gate_from_json(const json &j, std::size_t index) {
    const std::string where = "gates[" + std::to_string(index) + "]: ";
    if (!j.is_object()) {
        throw std::invalid_argument(where + "expected an object");
    }
    const auto kind = j.at("kind").get<std::string>();
    const auto qubits = j.at("qubits").get<std::vector<std::size_t>>();
    if (kind == "fixed") {
        const auto name = j.at("gate").get<std::string>();
        if (name == "CZ" || name == "SQRT_ISWAP") {
            if (qubits.size() != 2) {
                throw std::invalid_argument(where + name +
                                            " needs two qubits");
            }
            return name == "CZ" ? fixed::cz(qubits[0], qubits[1])
                                : fixed::sqrt_iswap(qubits[0], qubits[1]);
        }
        if (qubits.size() != 1) {
            throw std::invalid_argument(where + name + " needs one qubit");
        }
        std::optional<double> angle;
        if (j.contains("angle")) {
            angle = j.at("angle").get<double>();
        }
        return fixed::named(name, qubits[0], angle);
    }
    if (kind == "parameterized") {
        RotationGate r{qubits,
                       Generator::pauli(j.at("generator").get<std::string>()),
                       j.at("param_index").get<std::size_t>(),
                       j.value("scale", 1.0)};
        return r;
    }
    throw std::invalid_argument(where + "unknown kind '" + kind + "'");
}

} // namespace

Circuit parse_circuit(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
    }
    try {
        const auto n = doc.at("num_qubits").get<std::size_t>();
        std::vector<GateSpec> gates;
        const auto &arr = doc.at("gates");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            gates.push_back(gate_from_json(arr[i], i));
        }
        return Circuit(n, std::move(gates));
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
    }
}

std::string circuit_to_json(const Circuit &c) {
    json gates = json::array();
    for (const auto &g : c.gates()) {
        json j;
        if (const auto *f = std::get_if<FixedGate>(&g)) {
            j["kind"] = "fixed";
            j["gate"] = f->name;
            j["qubits"] = f->qubits;
            if (f->angle) {
                j["angle"] = *f->angle;
            }
        } else {
            const auto &r = std::get<RotationGate>(g);
            j["kind"] = "parameterized";
            j["generator"] = r.generator.label();
            j["qubits"] = r.qubits;
            j["param_index"] = r.param_index;
            j["scale"] = r.scale;
        }
        gates.push_back(std::move(j));
    }
    json doc;
    doc["num_qubits"] = c.num_qubits();
    doc["gates"] = std::move(gates);
    return doc.dump(2);
}

} // namespace plateau
