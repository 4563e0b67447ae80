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
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "plateau/state.hpp"

namespace plateau {

using GateMatrix = std::variant<Matrix2, Matrix4>;

/// Number of qubits a gate matrix acts on (1 or 2).
std::size_t arity(const GateMatrix &m);

/// Hermitian unitary G (G = G^dagger, G^2 = I) on one or two qubits.
class Generator {
  public:
    /// Pauli generator from letters, e.g. "X", "-Z", "XY". Two letters act
    /// on (qubit a, qubit b) in that order.
    static Generator pauli(std::string_view label);
    static Generator from_matrix(GateMatrix m, std::string label);

    [[nodiscard]] const GateMatrix &matrix() const { return matrix_; }
    [[nodiscard]] const std::string &label() const { return label_; }
    [[nodiscard]] std::size_t arity() const {
        return plateau::arity(matrix_);
    }
    /// cos(angle) I - i sin(angle) G.
    [[nodiscard]] GateMatrix exponential(double angle) const;

  private:
    Generator(GateMatrix m, std::string label)
        : matrix_(std::move(m)), label_(std::move(label)) {}
    GateMatrix matrix_;
    std::string label_;
};

/// A fixed (unparameterized) unitary; `name` is used for serialization.
struct FixedGate {
    std::vector<std::size_t> qubits;
    GateMatrix matrix;
    std::string name;
    std::optional<double> angle;
};

/// e^{-i (theta_j / scale + offset) G}, bound to parameter j.
struct RotationGate {
    std::vector<std::size_t> qubits;
    Generator generator;
    std::size_t param_index = 0;
    double scale = 1.0;
};

using GateSpec = std::variant<FixedGate, RotationGate>;

namespace fixed {
FixedGate cz(std::size_t a, std::size_t b);
FixedGate sqrt_iswap(std::size_t a, std::size_t b);
/// Named 1-qubit gates: I, X, Y, Z, H; rotations RX, RY, RZ take an angle
/// in the e^{-i angle P} convention.
FixedGate named(std::string_view name, std::size_t qubit,
                std::optional<double> angle = std::nullopt);
} // namespace fixed

/// Per-occurrence angle offset used by the parameter-shift rule.
struct AngleShift {
    std::size_t gate_index = 0;
    double offset = 0.0;
};

/// Immutable gate sequence with shared, scaled parameters.
class Circuit {
  public:
    Circuit(std::size_t num_qubits, std::vector<GateSpec> gates);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t num_params() const {
        return occurrences_.size();
    }
    [[nodiscard]] const std::vector<GateSpec> &gates() const { return gates_; }
    /// h_j: number of rotation gates bound to parameter j.
    [[nodiscard]] std::size_t sharing_count(std::size_t j) const {
        return occurrences_.at(j).size();
    }
    /// a_j: common scale of the gates bound to parameter j.
    [[nodiscard]] double scale(std::size_t j) const { return scales_.at(j); }
    /// Gate indices bound to parameter j, in circuit order.
    [[nodiscard]] const std::vector<std::size_t> &
    occurrences(std::size_t j) const {
        return occurrences_.at(j);
    }

    /// Applies gates [begin, end) in place.
    void apply_range(std::span<const double> params, StateVector &state,
                     std::size_t begin, std::size_t end,
                     std::optional<AngleShift> shift = std::nullopt) const;
    void apply_gate(std::size_t index, std::span<const double> params,
                    StateVector &state, double offset = 0.0) const;

  private:
    std::size_t num_qubits_;
    std::vector<GateSpec> gates_;
    std::vector<std::vector<std::size_t>> occurrences_;
    std::vector<double> scales_;
};

StateVector apply_circuit(const Circuit &c, std::span<const double> params,
                          StateVector input,
                          std::optional<AngleShift> shift = std::nullopt);

using QubitPair = std::pair<std::size_t, std::size_t>;

/// {(0,1), ..., (N-2,N-1), (N-1,0)}; just {(0,1)} for two qubits.
std::vector<QubitPair> ring_pairs(std::size_t num_qubits);

/// L_rot blocks of [rotation layer on every qubit, CZ layer on cz_pairs],
/// then one RX and one RY layer. `layer_generators` is empty (alternate X
/// and Y), a single generator for every layer, or one per layer; each must
/// anti-commute with Z. Parameter (layer l, qubit n) has index l*N + n.
Circuit hardware_efficient(std::size_t num_qubits, std::size_t trainable_layers,
                           const std::vector<Generator> &layer_generators,
                           const std::vector<QubitPair> &cz_pairs);

/// `blocks` repetitions of [CZ on cz_pairs, RX layer, RY layer]; 2*blocks*N
/// parameters. Equivalent to the layered form with 2*blocks - 2 trainable
/// rotation layers.
Circuit heisenberg_ansatz(std::size_t num_qubits, std::size_t blocks,
                          const std::vector<QubitPair> &cz_pairs);

/// Rotation-layer depth of heisenberg_ansatz in the layered counting.
std::size_t heisenberg_ansatz_layers(std::size_t blocks);

/// Five-gate Givens rotation: sqrt(iSWAP), RZ(-theta/2) on a and
/// RZ((theta+pi)/2) on b, sqrt(iSWAP), RZ(pi/2) on b. Parameter j appears
/// twice with scale 2. Equals -R_Givens(theta) on (a, b).
std::vector<GateSpec> givens_2q(std::size_t qubit_a, std::size_t qubit_b,
                                std::size_t param_index);

/// Exact Givens matrix: rotation by theta in the {|01>, |10>} block.
Matrix4 givens_matrix(double theta);

/// First n_e qubits in |1>.
StateVector hf_state(std::size_t num_orbitals, std::size_t num_electrons);

struct GivensPair {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t param_index = 0;
};

Circuit electron_conserving_ansatz(std::size_t num_orbitals,
                                   const std::vector<GivensPair> &pairs);

/// Excitations from each occupied orbital to each virtual orbital, one
/// parameter each.
std::vector<GivensPair> single_excitation_pairs(std::size_t num_orbitals,
                                                std::size_t num_electrons);

/// Repeats the circuit `times` times with fresh parameters per copy.
Circuit stack(const Circuit &c, std::size_t times);

/// Unitary of a two-qubit circuit in the Matrix4 convention (qubit 0 is
/// the high bit).
Matrix4 two_qubit_unitary(const Circuit &c, std::span<const double> params);

/// Max elementwise |a - phase * b| after aligning the global phase of b to a.
double max_abs_diff_up_to_phase(const Matrix4 &a, const Matrix4 &b,
                                cplx *phase = nullptr);

/// JSON circuit description; see README for the schema.
Circuit parse_circuit(std::string_view json_text);
std::string circuit_to_json(const Circuit &c);

} // namespace plateau
