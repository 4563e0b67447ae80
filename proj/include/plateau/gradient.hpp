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

#include <cstdint>
#include <span>
#include <vector>

#include "plateau/circuit.hpp"
#include "plateau/pauli.hpp"
#include "plateau/state.hpp"

namespace plateau {

/// f(theta) = <input| V(theta)^dagger H V(theta) |input>.
class LossProblem {
  public:
    LossProblem(Circuit circuit, Hamiltonian hamiltonian, StateVector input);

    [[nodiscard]] const Circuit &circuit() const { return circuit_; }
    [[nodiscard]] const Hamiltonian &hamiltonian() const {
        return hamiltonian_;
    }
    [[nodiscard]] const StateVector &input() const { return input_; }
    [[nodiscard]] std::size_t num_params() const {
        return circuit_.num_params();
    }

  private:
    Circuit circuit_;
    Hamiltonian hamiltonian_;
    StateVector input_;
};

double loss(const LossProblem &p, std::span<const double> params);

/// Exact gradient from +-pi/4 shifts of every gate occurrence; shared
/// parameters sum their occurrences, each divided by the scale a_j.
std::vector<double> grad_parameter_shift(const LossProblem &p,
                                         std::span<const double> params);

/// Central differences with the given step.
std::vector<double> grad_finite_diff(const LossProblem &p,
                                     std::span<const double> params,
                                     double step);

double grad_norm_sq(std::span<const double> g);

struct GradientComparison {
    std::vector<double> parameter_shift;
    std::vector<double> finite_diff;
    double max_abs_diff = 0.0;
};

GradientComparison compare_gradients(const LossProblem &p,
                                     std::span<const double> params,
                                     double step = 1e-5);

/// Random circuit on 1..max_qubits qubits with 1..max_params parameters,
/// each shared by one or two gates with a common scale, interleaved with
/// fixed gates; random Pauli-sum observable and random input state.
LossProblem random_loss_problem(std::uint64_t seed, std::size_t max_qubits = 4,
                                std::size_t max_params = 12);

} // namespace plateau
