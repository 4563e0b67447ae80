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
#include "plateau/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace plateau {

namespace {

constexpr double kGeneratorTol = 1e-12;

template <class M> M identity_like();
template <> Matrix2 identity_like<Matrix2>() { return gates::identity(); }
template <> Matrix4 identity_like<Matrix4>() { return gates::identity4(); }

template <class M> bool hermitian_involution(const M &g) {
    return max_abs_diff(g, adjoint(g)) <= kGeneratorTol &&
           max_abs_diff(g * g, identity_like<M>()) <= kGeneratorTol;
}

void apply_matrix(StateVector &state, const std::vector<std::size_t> &qubits,
                  const GateMatrix &m) {
    if (const auto *m2 = std::get_if<Matrix2>(&m)) {
        state.apply_1q(qubits[0], *m2);
    } else {
        state.apply_2q(qubits[0], qubits[1], std::get<Matrix4>(m));
    }
}

void check_qubits(const std::vector<std::size_t> &qubits, std::size_t want,
                  std::size_t num_qubits, std::size_t gate_index) {
    const std::string where = "gate " + std::to_string(gate_index) + ": ";
    if (qubits.size() != want) {
        throw std::invalid_argument(where + "expected " +
                                    std::to_string(want) + " qubit(s), got " +
                                    std::to_string(qubits.size()));
    }
    for (auto q : qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument(where + "qubit " + std::to_string(q) +
                                        " out of range");
        }
    }
    if (want == 2 && qubits[0] == qubits[1]) {
        throw std::invalid_argument(where + "qubits must be distinct");
    }
}

Generator default_layer_generator(std::size_t layer) {
    return Generator::pauli(layer % 2 == 0 ? "X" : "Y");
}

bool anticommutes_with_z(const Generator &g) {
    const auto *m = std::get_if<Matrix2>(&g.matrix());
    if (m == nullptr) {
        return false;
    }
    const Matrix2 z = gates::pauli_z();
    Matrix2 sum = (*m) * z;
    const Matrix2 zg = z * (*m);
    for (std::size_t i = 0; i < 4; ++i) {
        sum.m[i] += zg.m[i];
    }
    return max_abs_diff(sum, Matrix2{}) <= kGeneratorTol;
}

} // namespace

std::size_t arity(const GateMatrix &m) {
    return std::holds_alternative<Matrix2>(m) ? 1 : 2;
}

Generator Generator::pauli(std::string_view label) {
    std::string_view letters = label;
    double sign = 1.0;
    if (!letters.empty() && letters.front() == '-') {
        sign = -1.0;
        letters.remove_prefix(1);
    }
    auto letter = [&](char c) {
        switch (c) {
        case 'I':
            return gates::identity();
        case 'X':
            return gates::pauli_x();
        case 'Y':
            return gates::pauli_y();
        case 'Z':
            return gates::pauli_z();
        default:
            throw std::invalid_argument("invalid generator label '" +
                                        std::string(label) + "'");
        }
    };
    GateMatrix m;
    if (letters.size() == 1) {
        Matrix2 g = letter(letters[0]);
        for (auto &x : g.m) {
            x *= sign;
        }
        m = g;
    } else if (letters.size() == 2) {
        Matrix4 g = kron(letter(letters[0]), letter(letters[1]));
        for (auto &x : g.m) {
            x *= sign;
        }
        m = g;
    } else {
        throw std::invalid_argument("generator label must name 1 or 2 Paulis: '" +
                                    std::string(label) + "'");
    }
    return Generator(m, std::string(label));
}

Generator Generator::from_matrix(GateMatrix m, std::string label) {
    const bool ok = std::visit(
        [](const auto &g) { return hermitian_involution(g); }, m);
    if (!ok) {
        throw std::invalid_argument("generator '" + label +
                                    "' is not a Hermitian unitary");
    }
    return Generator(std::move(m), std::move(label));
}

GateMatrix Generator::exponential(double angle) const {
    const double c = std::cos(angle);
    const cplx ms{0.0, -std::sin(angle)};
    return std::visit(
        [&](const auto &g) -> GateMatrix {
            using M = std::decay_t<decltype(g)>;
            M out = identity_like<M>();
            for (std::size_t i = 0; i < g.m.size(); ++i) {
                out.m[i] = c * out.m[i] + ms * g.m[i];
            }
            return out;
        },
        matrix_);
}

namespace fixed {

FixedGate cz(std::size_t a, std::size_t b) {
    return {{a, b}, gates::cz(), "CZ", std::nullopt};
}

FixedGate sqrt_iswap(std::size_t a, std::size_t b) {
    return {{a, b}, gates::sqrt_iswap(), "SQRT_ISWAP", std::nullopt};
}

FixedGate named(std::string_view name, std::size_t qubit,
                std::optional<double> angle) {
    const bool rotation = name == "RX" || name == "RY" || name == "RZ";
    if (rotation != angle.has_value()) {
        throw std::invalid_argument(
            rotation ? "gate " + std::string(name) + " requires an angle"
                     : "gate " + std::string(name) + " takes no angle");
    }
    Matrix2 m;
    if (name == "I") {
        m = gates::identity();
    } else if (name == "X") {
        m = gates::pauli_x();
    } else if (name == "Y") {
        m = gates::pauli_y();
    } else if (name == "Z") {
        m = gates::pauli_z();
    } else if (name == "H") {
        m = gates::hadamard();
    } else if (name == "RX") {
        m = gates::rx(*angle);
    } else if (name == "RY") {
        m = gates::ry(*angle);
    } else if (name == "RZ") {
        m = gates::rz(*angle);
    } else {
        throw std::invalid_argument("unknown fixed gate '" +
                                    std::string(name) + "'");
    }
    return {{qubit}, m, std::string(name), angle};
}

} // namespace fixed

Circuit::Circuit(std::size_t num_qubits, std::vector<GateSpec> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit num_qubits out of range");
    }
    std::vector<std::optional<double>> scales;
    for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
        if (const auto *f = std::get_if<FixedGate>(&gates_[gi])) {
            check_qubits(f->qubits, arity(f->matrix), num_qubits, gi);
            const bool unitary = std::visit(
                [](const auto &m) { return is_unitary(m); }, f->matrix);
            if (!unitary) {
                throw std::invalid_argument("gate " + std::to_string(gi) +
                                            ": fixed matrix is not unitary");
            }
            continue;
        }
        const auto &r = std::get<RotationGate>(gates_[gi]);
        check_qubits(r.qubits, r.generator.arity(), num_qubits, gi);
        if (r.scale == 0.0 || !std::isfinite(r.scale)) {
            throw std::invalid_argument("gate " + std::to_string(gi) +
                                        ": scale must be finite and nonzero");
        }
        if (r.param_index >= occurrences_.size()) {
            occurrences_.resize(r.param_index + 1);
            scales.resize(r.param_index + 1);
        }
        auto &s = scales[r.param_index];
        if (s.has_value() && *s != r.scale) {
            throw std::invalid_argument(
                "parameter " + std::to_string(r.param_index) +
                " is bound with mixed scales");
        }
        s = r.scale;
        occurrences_[r.param_index].push_back(gi);
    }
    scales_.reserve(scales.size());
    for (std::size_t j = 0; j < scales.size(); ++j) {
        if (!scales[j].has_value()) {
            throw std::invalid_argument("parameter " + std::to_string(j) +
                                        " has no gate bound to it");
        }
        scales_.push_back(*scales[j]);
    }
}

void Circuit::apply_gate(std::size_t index, std::span<const double> params,
                         StateVector &state, double offset) const {
    const auto &g = gates_[index];
    if (const auto *f = std::get_if<FixedGate>(&g)) {
        if (f->name == "CZ") {
            state.apply_cz(f->qubits[0], f->qubits[1]);
        } else {
            apply_matrix(state, f->qubits, f->matrix);
        }
        return;
    }
    const auto &r = std::get<RotationGate>(g);
    const double angle = params[r.param_index] / r.scale + offset;
    apply_matrix(state, r.qubits, r.generator.exponential(angle));
}

void Circuit::apply_range(std::span<const double> params, StateVector &state,
                          std::size_t begin, std::size_t end,
                          std::optional<AngleShift> shift) const {
    if (params.size() != num_params()) {
        throw std::invalid_argument(
            "expected " + std::to_string(num_params()) +
            " parameters, got " + std::to_string(params.size()));
    }
    if (state.num_qubits() != num_qubits_) {
        throw std::invalid_argument("circuit/state qubit count mismatch");
    }
    for (std::size_t i = begin; i < end; ++i) {
        const double offset =
            (shift && shift->gate_index == i) ? shift->offset : 0.0;
        apply_gate(i, params, state, offset);
    }
}

StateVector apply_circuit(const Circuit &c, std::span<const double> params,
                          StateVector input, std::optional<AngleShift> shift) {
    c.apply_range(params, input, 0, c.gates().size(), shift);
    return input;
}

std::vector<QubitPair> ring_pairs(std::size_t num_qubits) {
    std::vector<QubitPair> pairs;
    if (num_qubits < 2) {
        return pairs;
    }
    for (std::size_t i = 0; i + 1 < num_qubits; ++i) {
        pairs.emplace_back(i, i + 1);
    }
    if (num_qubits > 2) {
        pairs.emplace_back(num_qubits - 1, 0);
    }
    return pairs;
}

Circuit hardware_efficient(std::size_t num_qubits, std::size_t trainable_layers,
                           const std::vector<Generator> &layer_generators,
                           const std::vector<QubitPair> &cz_pairs) {
    if (!layer_generators.empty() && layer_generators.size() != 1 &&
        layer_generators.size() != trainable_layers) {
        throw std::invalid_argument(
            "layer_generators must be empty, a single generator, or one per "
            "trainable layer");
    }
    std::vector<GateSpec> gates;
    std::size_t param = 0;
    for (std::size_t layer = 0; layer < trainable_layers; ++layer) {
        const Generator g = layer_generators.empty()
                                ? default_layer_generator(layer)
                            : layer_generators.size() == 1
                                ? layer_generators[0]
                                : layer_generators[layer];
        if (!anticommutes_with_z(g)) {
            throw std::invalid_argument(
                "layer " + std::to_string(layer) + " generator '" +
                g.label() + "' must be a 1-qubit generator anti-commuting "
                            "with Z");
        }
        for (std::size_t q = 0; q < num_qubits; ++q) {
            gates.emplace_back(RotationGate{{q}, g, param++, 1.0});
        }
        for (const auto &[a, b] : cz_pairs) {
            gates.emplace_back(fixed::cz(a, b));
        }
    }
    for (const char *label : {"X", "Y"}) {
        const auto g = Generator::pauli(label);
        for (std::size_t q = 0; q < num_qubits; ++q) {
            gates.emplace_back(RotationGate{{q}, g, param++, 1.0});
        }
    }
    return Circuit(num_qubits, std::move(gates));
}

Circuit heisenberg_ansatz(std::size_t num_qubits, std::size_t blocks,
                          const std::vector<QubitPair> &cz_pairs) {
    std::vector<GateSpec> gates;
    std::size_t param = 0;
    const auto gx = Generator::pauli("X");
    const auto gy = Generator::pauli("Y");
    for (std::size_t b = 0; b < blocks; ++b) {
        for (const auto &[qa, qb] : cz_pairs) {
            gates.emplace_back(fixed::cz(qa, qb));
        }
        for (const auto *g : {&gx, &gy}) {
            for (std::size_t q = 0; q < num_qubits; ++q) {
                gates.emplace_back(RotationGate{{q}, *g, param++, 1.0});
            }
        }
    }
    return Circuit(num_qubits, std::move(gates));
}

std::size_t heisenberg_ansatz_layers(std::size_t blocks) {
    if (blocks < 2) {
        throw std::invalid_argument(
            "heisenberg_ansatz_layers: need at least 2 blocks");
    }
    return 2 * blocks - 2;
}

std::vector<GateSpec> givens_2q(std::size_t qubit_a, std::size_t qubit_b,
                                std::size_t param_index) {
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("givens_2q: qubits must be distinct");
    }
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    std::vector<GateSpec> out;
    out.emplace_back(fixed::sqrt_iswap(qubit_a, qubit_b));
    // RZ(-theta/2) = e^{-i (theta/2) (-Z)}.
    out.emplace_back(
        RotationGate{{qubit_a}, Generator::pauli("-Z"), param_index, 2.0});
    // RZ((theta+pi)/2) = RZ(theta/2) RZ(pi/2).
    out.emplace_back(
        RotationGate{{qubit_b}, Generator::pauli("Z"), param_index, 2.0});
    out.emplace_back(fixed::named("RZ", qubit_b, kHalfPi));
    out.emplace_back(fixed::sqrt_iswap(qubit_a, qubit_b));
    out.emplace_back(fixed::named("RZ", qubit_b, kHalfPi));
    return out;
}

Matrix4 givens_matrix(double theta) {
    Matrix4 g = gates::identity4();
    g(1, 1) = std::cos(theta);
    g(1, 2) = -std::sin(theta);
    g(2, 1) = std::sin(theta);
    g(2, 2) = std::cos(theta);
    return g;
}

StateVector hf_state(std::size_t num_orbitals, std::size_t num_electrons) {
    if (num_electrons > num_orbitals) {
        throw std::invalid_argument("hf_state: more electrons than orbitals");
    }
    std::vector<int> bits(num_orbitals, 0);
    for (std::size_t k = 0; k < num_electrons; ++k) {
        bits[k] = 1;
    }
    return basis_state(num_orbitals, bits);
}

Circuit electron_conserving_ansatz(std::size_t num_orbitals,
                                   const std::vector<GivensPair> &pairs) {
    std::vector<GateSpec> gates;
    for (const auto &p : pairs) {
        if (p.a >= num_orbitals || p.b >= num_orbitals || p.a == p.b) {
            throw std::invalid_argument(
                "invalid Givens pair (" + std::to_string(p.a) + "," +
                std::to_string(p.b) + ")");
        }
        auto block = givens_2q(p.a, p.b, p.param_index);
        gates.insert(gates.end(), std::make_move_iterator(block.begin()),
                     std::make_move_iterator(block.end()));
    }
    return Circuit(num_orbitals, std::move(gates));
}

std::vector<GivensPair> single_excitation_pairs(std::size_t num_orbitals,
                                                std::size_t num_electrons) {
    std::vector<GivensPair> pairs;
    std::size_t j = 0;
    for (std::size_t occ = 0; occ < num_electrons; ++occ) {
        for (std::size_t virt = num_electrons; virt < num_orbitals; ++virt) {
            pairs.push_back({occ, virt, j++});
        }
    }
    return pairs;
}

Circuit stack(const Circuit &c, std::size_t times) {
    const std::size_t width = c.num_params();
    std::vector<GateSpec> gates;
    gates.reserve(c.gates().size() * times);
    for (std::size_t r = 0; r < times; ++r) {
        for (const auto &g : c.gates()) {
            GateSpec copy = g;
            if (auto *rot = std::get_if<RotationGate>(&copy)) {
                rot->param_index += r * width;
            }
            gates.push_back(std::move(copy));
        }
    }
    return Circuit(c.num_qubits(), std::move(gates));
}

Matrix4 two_qubit_unitary(const Circuit &c, std::span<const double> params) {
    if (c.num_qubits() != 2) {
        throw std::invalid_argument("two_qubit_unitary needs a 2-qubit circuit");
    }
    // Local index 2*bit(q0) + bit(q1) <-> global index bit(q0) + 2*bit(q1).
    auto to_global = [](std::size_t local) {
        return (local >> 1) | ((local & 1U) << 1);
    };
    Matrix4 u;
    for (std::size_t col = 0; col < 4; ++col) {
        const std::vector<int> bits{static_cast<int>(col >> 1),
                                    static_cast<int>(col & 1U)};
        const auto out = apply_circuit(c, params, basis_state(2, bits));
        for (std::size_t row = 0; row < 4; ++row) {
            u(row, col) = out[to_global(row)];
        }
    }
    return u;
}

double max_abs_diff_up_to_phase(const Matrix4 &a, const Matrix4 &b,
                                cplx *phase) {
    cplx overlap{0.0};
    for (std::size_t i = 0; i < 16; ++i) {
        overlap += std::conj(b.m[i]) * a.m[i];
    }
    const cplx ph =
        std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
    if (phase != nullptr) {
        *phase = ph;
    }
    double d = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        d = std::max(d, std::abs(a.m[i] - ph * b.m[i]));
    }
    return d;
}

} // namespace plateau
