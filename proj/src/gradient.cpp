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
#include "plateau/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "plateau/init.hpp"

namespace plateau {

namespace {

constexpr double kShift = std::numbers::pi / 4.0;

void check_params(const LossProblem &p, std::span<const double> params) {
    if (params.size() != p.num_params()) {
        throw std::invalid_argument(
            "expected " + std::to_string(p.num_params()) +
            " parameters, got " + std::to_string(params.size()));
    }
}

} // namespace

LossProblem::LossProblem(Circuit circuit, Hamiltonian hamiltonian,
                         StateVector input)
    : circuit_(std::move(circuit)), hamiltonian_(std::move(hamiltonian)),
      input_(std::move(input)) {
    if (circuit_.num_qubits() != input_.num_qubits()) {
        throw std::invalid_argument("LossProblem: circuit and input disagree "
                                    "on the number of qubits");
    }
    if (!hamiltonian_.empty() &&
        hamiltonian_.num_qubits() != input_.num_qubits()) {
        throw std::invalid_argument("LossProblem: Hamiltonian and input "
                                    "disagree on the number of qubits");
    }
}

double loss(const LossProblem &p, std::span<const double> params) {
    check_params(p, params);
    return expectation_hamiltonian(
        apply_circuit(p.circuit(), params, p.input()), p.hamiltonian());
}

std::vector<double> grad_parameter_shift(const LossProblem &p,
                                         std::span<const double> params) {
    check_params(p, params);
    const Circuit &c = p.circuit();
    const std::size_t num_gates = c.gates().size();
    std::vector<double> grad(c.num_params(), 0.0);

    // `prefix` holds the state after gates [0, gi); every occurrence only
    // recomputes its own suffix.
    StateVector prefix = p.input();
    for (std::size_t gi = 0; gi < num_gates; ++gi) {
        if (const auto *r = std::get_if<RotationGate>(&c.gates()[gi])) {
            double shifted[2];
            for (int s = 0; s < 2; ++s) {
                StateVector branch = prefix;
                c.apply_gate(gi, params, branch, s == 0 ? kShift : -kShift);
                c.apply_range(params, branch, gi + 1, num_gates);
                shifted[s] = expectation_hamiltonian(branch, p.hamiltonian());
            }
            grad[r->param_index] += (shifted[0] - shifted[1]) / r->scale;
        }
        c.apply_gate(gi, params, prefix);
    }
    return grad;
}

std::vector<double> grad_finite_diff(const LossProblem &p,
                                     std::span<const double> params,
                                     double step) {
    check_params(p, params);
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be > 0");
    }
    std::vector<double> work(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t j = 0; j < params.size(); ++j) {
        work[j] = params[j] + step;
        const double up = loss(p, work);
        work[j] = params[j] - step;
        const double down = loss(p, work);
        work[j] = params[j];
        grad[j] = (up - down) / (2.0 * step);
    }
    return grad;
}

double grad_norm_sq(std::span<const double> g) {
    double s = 0.0;
    for (double x : g) {
        s += x * x;
    }
    return s;
}

GradientComparison compare_gradients(const LossProblem &p,
                                     std::span<const double> params,
                                     double step) {
    GradientComparison c{grad_parameter_shift(p, params),
                         grad_finite_diff(p, params, step), 0.0};
    for (std::size_t j = 0; j < c.parameter_shift.size(); ++j) {
        c.max_abs_diff = std::max(
            c.max_abs_diff, std::abs(c.parameter_shift[j] - c.finite_diff[j]));
    }
    return c;
}

LossProblem random_loss_problem(std::uint64_t seed, std::size_t max_qubits,
                                std::size_t max_params) {
    if (max_qubits < 1 || max_qubits > kMaxQubits || max_params < 1) {
        throw std::invalid_argument("random_loss_problem: bad limits");
    }
    Rng rng(seed);
    const auto pick = [&rng](std::size_t n) {
        return std::min(n - 1, static_cast<std::size_t>(
                                   rng.uniform() * static_cast<double>(n)));
    };
    static constexpr char kLetters[] = "IXYZ";
    const std::size_t nq = 1 + pick(max_qubits);
    const std::size_t np = 1 + pick(max_params);

    std::vector<GateSpec> rotations;
    for (std::size_t j = 0; j < np; ++j) {
        const std::size_t sharing = 1 + pick(2);
        static constexpr double kScales[] = {1.0, 2.0, 0.5, -1.0};
        const double scale = kScales[pick(4)];
        for (std::size_t k = 0; k < sharing; ++k) {
            const std::size_t arity = nq >= 2 ? 1 + pick(2) : 1;
            std::vector<std::size_t> qubits{pick(nq)};
            if (arity == 2) {
                std::size_t b = pick(nq - 1);
                qubits.push_back(b >= qubits[0] ? b + 1 : b);
            }
            std::string label = rng.uniform() < 0.5 ? "-" : "";
            for (std::size_t q = 0; q < arity; ++q) {
                label += kLetters[1 + pick(3)];
            }
            rotations.emplace_back(RotationGate{
                std::move(qubits), Generator::pauli(label), j, scale});
        }
    }
    // Shuffle rotations and interleave fixed gates.
    for (std::size_t i = rotations.size(); i > 1; --i) {
        std::swap(rotations[i - 1], rotations[pick(i)]);
    }
    std::vector<GateSpec> gates;
    for (auto &r : rotations) {
        if (rng.uniform() < 0.4) {
            if (nq >= 2 && rng.uniform() < 0.5) {
                const std::size_t a = pick(nq);
                std::size_t b = pick(nq - 1);
                b = b >= a ? b + 1 : b;
                gates.emplace_back(rng.uniform() < 0.5
                                       ? fixed::cz(a, b)
                                       : fixed::sqrt_iswap(a, b));
            } else {
                gates.emplace_back(fixed::named("H", pick(nq)));
            }
        }
        gates.push_back(std::move(r));
    }

    Hamiltonian h;
    const std::size_t terms = 1 + pick(4);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<int> idx(nq);
        for (auto &x : idx) {
            x = static_cast<int>(pick(4));
        }
        h.add_term(rng.uniform(-1.0, 1.0), PauliString(std::move(idx)));
    }

    std::vector<cplx> amps(std::size_t{1} << nq);
    double n2 = 0.0;
    for (auto &a : amps) {
        a = cplx{rng.normal(), rng.normal()};
        n2 += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(n2);
    }
    return LossProblem(Circuit(nq, std::move(gates)), std::move(h),
                       StateVector(nq, std::move(amps)));
}

} // namespace plateau
