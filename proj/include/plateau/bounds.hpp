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
#include "plateau/gradient.hpp"
#include "plateau/init.hpp"
#include "plateau/pauli.hpp"

namespace plateau {

/// Sample mean with standard error s / sqrt(n).
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Pairwise-summed mean and standard error of `values` (size >= 2).
McEstimate summarize(std::span<const double> values, std::uint64_t seed = 0);

/// Monte-Carlo estimate of E||grad f||^2. Trial i draws its parameters
/// with derive_seed(seed, i). Zero init returns the exact value, SE 0.
McEstimate mc_expected_grad_norm_sq(const LossProblem &p,
                                    const InitStrategy &init,
                                    std::size_t samples, std::uint64_t seed);

/// Monte-Carlo estimate of E (df/dtheta_ell)^2.
McEstimate mc_expected_component_sq(const LossProblem &p, std::size_t ell,
                                    const InitStrategy &init,
                                    std::size_t samples, std::uint64_t seed);

/// L / (S^S (L+2)^(S+1)) * tr^2.
double theorem41_rhs(std::size_t locality, std::size_t layers,
                     double tr_sigma_j_rho);

/// E_theta Tr[O V rho V^dagger]^2 for theta ~ N(0, gamma_sq), OG = -GO.
double lemma_b1_closed_form(double tr_o_rho, double tr_igo_rho,
                            double gamma_sq);

/// E_theta (d/dtheta Tr[O V rho V^dagger])^2 under the same assumptions.
double lemma_b2_closed_form(double tr_o_rho, double tr_igo_rho,
                            double gamma_sq);

/// Observable on the first S qubits cycling Z, X, Y; identity elsewhere.
PauliString theorem41_observable(std::size_t num_qubits,
                                 std::size_t locality);

struct Theorem41Report {
    std::size_t num_qubits = 0;
    std::size_t locality = 0;
    std::size_t layers = 0;
    double gamma_sq = 0.0;
    McEstimate estimate;
    double rhs = 0.0;
    /// (mean - rhs) / SE.
    double margin_in_se = 0.0;
    bool pass = false;
};

/// Layered circuit with alternating X/Y rotation layers and ring CZs,
/// |0...0> input, the theorem41_observable, and N(0, 1/(4S(L+2))) init.
/// Passes iff mean >= rhs - 3 SE.
Theorem41Report check_theorem41(std::size_t num_qubits, std::size_t locality,
                                std::size_t layers, std::size_t samples,
                                std::uint64_t seed);

struct ComponentCheck {
    std::size_t ell = 0;
    double grad0_sq = 0.0;
    double rhs = 0.0; // (1 - eps) * grad0_sq
    McEstimate estimate;
    bool pass = false;
};

struct Theorem42Report {
    double epsilon = 0.0;
    TheoremVariances variances;
    std::vector<ComponentCheck> components;
    bool pass = false;
};

/// Samples with the per-parameter theorem variances and checks
/// E(df/dtheta_l)^2 >= (1-eps)(df/dtheta_l)^2|_0 - 3 SE for every l with a
/// nonzero derivative at zero (or only `target.index` when given).
Theorem42Report check_theorem42(const LossProblem &p, double epsilon,
                                std::size_t samples, std::uint64_t seed,
                                TargetSelection target = {});

/// Four orbitals, HF |1100>, three Givens rotations (1,2), (0,2), (1,3), and
/// toy_electron_conserving(4).
LossProblem givens_test_problem();

/// One rotation e^{-i theta G} on `input`, observed with `observable`.
struct SingleGateConfig {
    Hamiltonian observable;
    Generator generator;
    std::vector<std::size_t> qubits;
    StateVector input;
    double gamma_sq = 0.0;
};

/// Max |OG + GO| over matrix entries.
double anticommutator_norm(const Hamiltonian &o, const Generator &g,
                           std::span<const std::size_t> qubits);

struct LemmaReport {
    double tr_o_rho = 0.0;
    double tr_igo_rho = 0.0;
    double closed_form = 0.0;
    McEstimate estimate;
    /// (mean - closed_form) / SE.
    double deviation_in_se = 0.0;
    bool pass = false;
};

enum class Lemma { b1, b2 };

/// Monte-Carlo check of a lemma closed form on a single-gate problem;
/// passes iff |mean - closed form| <= 4 SE. Rejects configurations whose
/// observable does not anti-commute with the generator (tolerance 1e-10).
LemmaReport check_lemma(Lemma lemma, const SingleGateConfig &cfg,
                        std::size_t samples, std::uint64_t seed);

/// Random anti-commuting (O, G, rho, gamma^2) on 1-3 qubits.
SingleGateConfig random_single_gate_config(std::uint64_t seed);

} // namespace plateau
