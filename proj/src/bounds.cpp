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
#include "plateau/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plateau {

namespace {

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) {
            s += x;
        }
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void apply_generator(const Generator &g, std::span<const std::size_t> qubits,
                     StateVector &state) {
    if (const auto *m2 = std::get_if<Matrix2>(&g.matrix())) {
        state.apply_1q(qubits[0], *m2);
    } else {
        state.apply_2q(qubits[0], qubits[1], std::get<Matrix4>(g.matrix()));
    }
}

void check_generator_qubits(const Generator &g,
                            std::span<const std::size_t> qubits,
                            std::size_t num_qubits) {
    if (qubits.size() != g.arity()) {
        throw std::invalid_argument("generator acts on " +
                                    std::to_string(g.arity()) +
                                    " qubits but " +
                                    std::to_string(qubits.size()) +
                                    " were given");
    }
    for (std::size_t q : qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument("generator qubit out of range");
        }
    }
}

// O|psi> through the dense matrix; not a normalized state in general.
std::vector<cplx> apply_dense(const std::vector<cplx> &m,
                              const StateVector &psi) {
    const std::size_t d = psi.dim();
    std::vector<cplx> out(d, cplx{0.0, 0.0});
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out[r] += m[r * d + c] * psi[c];
        }
    }
    return out;
}

LossProblem single_gate_problem(const SingleGateConfig &cfg) {
    std::vector<GateSpec> gates;
    gates.emplace_back(RotationGate{cfg.qubits, cfg.generator, 0, 1.0});
    return LossProblem(Circuit(cfg.input.num_qubits(), std::move(gates)),
                       cfg.observable, cfg.input);
}

} // namespace

McEstimate summarize(std::span<const double> values, std::uint64_t seed) {
    if (values.size() < 2) {
        throw std::invalid_argument("an estimate needs at least two samples");
    }
    const double n = static_cast<double>(values.size());
    const double mean = pairwise_sum(values) / n;
    std::vector<double> dev(values.size());
    std::transform(values.begin(), values.end(), dev.begin(),
                   [mean](double x) { return (x - mean) * (x - mean); });
    const double var = pairwise_sum(dev) / (n - 1.0);
    return {mean, std::sqrt(var / n), values.size(), seed};
}

namespace {

template <class Fn>
McEstimate mc_estimate(const LossProblem &p, const InitStrategy &init,
                       std::size_t samples, std::uint64_t seed, Fn &&fn) {
    const std::size_t n = p.num_params();
    if (init.kind == InitStrategy::Kind::zero) {
        const std::vector<double> zeros(n, 0.0);
        return {fn(grad_parameter_shift(p, zeros)), 0.0, samples, seed};
    }
    if (samples < 100) {
        throw std::invalid_argument(
            "Monte-Carlo estimates need at least 100 samples");
    }
    std::vector<double> values(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto params = sample(init, n, derive_seed(seed, i));
        values[i] = fn(grad_parameter_shift(p, params));
    }
    return summarize(values, seed);
}

} // namespace

McEstimate mc_expected_grad_norm_sq(const LossProblem &p,
                                    const InitStrategy &init,
                                    std::size_t samples, std::uint64_t seed) {
    return mc_estimate(p, init, samples, seed, [](const std::vector<double> &g) {
        return grad_norm_sq(g);
    });
}

McEstimate mc_expected_component_sq(const LossProblem &p, std::size_t ell,
                                    const InitStrategy &init,
                                    std::size_t samples, std::uint64_t seed) {
    if (ell >= p.num_params()) {
        throw std::invalid_argument("parameter index out of range");
    }
    return mc_estimate(p, init, samples, seed,
                       [ell](const std::vector<double> &g) {
                           return g[ell] * g[ell];
                       });
}

double theorem41_rhs(std::size_t locality, std::size_t layers,
                     double tr_sigma_j_rho) {
    if (locality < 1 || layers < 1) {
        throw std::invalid_argument(
            "theorem41_rhs requires locality >= 1 and layers >= 1");
    }
    const double s = static_cast<double>(locality);
    const double l = static_cast<double>(layers);
    return l / (std::pow(s, s) * std::pow(l + 2.0, s + 1.0)) *
           tr_sigma_j_rho * tr_sigma_j_rho;
}

double lemma_b1_closed_form(double tr_o_rho, double tr_igo_rho,
                            double gamma_sq) {
    if (!(gamma_sq >= 0.0)) {
        throw std::invalid_argument("gamma_sq must be >= 0");
    }
    const double e = std::exp(-8.0 * gamma_sq);
    return 0.5 * (1.0 + e) * tr_o_rho * tr_o_rho +
           0.5 * (1.0 - e) * tr_igo_rho * tr_igo_rho;
}

double lemma_b2_closed_form(double tr_o_rho, double tr_igo_rho,
                            double gamma_sq) {
    if (!(gamma_sq >= 0.0)) {
        throw std::invalid_argument("gamma_sq must be >= 0");
    }
    const double e = std::exp(-8.0 * gamma_sq);
    return 2.0 * (1.0 - e) * tr_o_rho * tr_o_rho +
           2.0 * (1.0 + e) * tr_igo_rho * tr_igo_rho;
}

PauliString theorem41_observable(std::size_t num_qubits,
                                 std::size_t locality) {
    if (locality < 1 || locality > num_qubits) {
        throw std::invalid_argument("observable locality " +
                                    std::to_string(locality) +
                                    " is not in [1, " +
                                    std::to_string(num_qubits) + "]");
    }
    std::vector<int> idx(num_qubits, 0);
    static constexpr int kCycle[] = {3, 1, 2};
    for (std::size_t k = 0; k < locality; ++k) {
        idx[k] = kCycle[k % 3];
    }
    return PauliString(std::move(idx));
}

Theorem41Report check_theorem41(std::size_t num_qubits, std::size_t locality,
                                std::size_t layers, std::size_t samples,
                                std::uint64_t seed) {
    if (locality > num_qubits) {
        throw std::invalid_argument("locality " + std::to_string(locality) +
                                    " exceeds the qubit count " +
                                    std::to_string(num_qubits));
    }
    Hamiltonian obs;
    obs.add_term(1.0, theorem41_observable(num_qubits, locality));
    LossProblem p(hardware_efficient(num_qubits, layers, {},
                                     ring_pairs(num_qubits)),
                  std::move(obs), StateVector(num_qubits));

    Theorem41Report r;
    r.num_qubits = num_qubits;
    r.locality = locality;
    r.layers = layers;
    r.gamma_sq = variance_local(locality, layers);
    r.estimate = mc_expected_grad_norm_sq(
        p, InitStrategy::gaussian(r.gamma_sq), samples, seed);
    // Input |0...0> has Tr[sigma_j rho]^2 = 1 for the all-Z string sigma_j.
    r.rhs = theorem41_rhs(locality, layers, 1.0);
    r.margin_in_se = r.estimate.std_error > 0.0
                         ? (r.estimate.mean - r.rhs) / r.estimate.std_error
                         : 0.0;
    r.pass = r.estimate.mean >= r.rhs - 3.0 * r.estimate.std_error;
    return r;
}

Theorem42Report check_theorem42(const LossProblem &p, double epsilon,
                                std::size_t samples, std::uint64_t seed,
                                TargetSelection target) {
    if (samples < 2) {
        throw std::invalid_argument("an estimate needs at least two samples");
    }
    Theorem42Report r;
    r.epsilon = epsilon;
    r.variances = theorem_variances(p, epsilon, target);
    if (r.variances.degenerate) {
        throw std::invalid_argument(
            "every derivative vanishes at zero; the bound is vacuous");
    }
    const std::size_t n = p.num_params();
    const std::vector<double> zeros(n, 0.0);
    const auto g0 = grad_parameter_shift(p, zeros);

    std::vector<std::size_t> checked;
    if (target.index) {
        checked.push_back(*target.index);
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            if (g0[j] * g0[j] > 1e-24) {
                checked.push_back(j);
            }
        }
    }

    const auto init = InitStrategy::gaussian(r.variances.variances);
    std::vector<std::vector<double>> values(checked.size(),
                                            std::vector<double>(samples));
    for (std::size_t i = 0; i < samples; ++i) {
        const auto g = grad_parameter_shift(p, sample(init, n,
                                                      derive_seed(seed, i)));
        for (std::size_t k = 0; k < checked.size(); ++k) {
            values[k][i] = g[checked[k]] * g[checked[k]];
        }
    }
    r.pass = true;
    for (std::size_t k = 0; k < checked.size(); ++k) {
        ComponentCheck c;
        c.ell = checked[k];
        c.grad0_sq = g0[c.ell] * g0[c.ell];
        c.rhs = (1.0 - epsilon) * c.grad0_sq;
        c.estimate = summarize(values[k], seed);
        c.pass = c.estimate.mean >= c.rhs - 3.0 * c.estimate.std_error;
        r.pass = r.pass && c.pass;
        r.components.push_back(c);
    }
    return r;
}

LossProblem givens_test_problem() {
    const std::vector<GivensPair> pairs{{1, 2, 0}, {0, 2, 1}, {1, 3, 2}};
    return LossProblem(electron_conserving_ansatz(4, pairs),
                       toy_electron_conserving(4), hf_state(4, 2));
}

double anticommutator_norm(const Hamiltonian &o, const Generator &g,
                           std::span<const std::size_t> qubits) {
    const std::size_t nq = o.num_qubits();
    check_generator_qubits(g, qubits, nq);
    const auto om = dense_matrix(o);
    const std::size_t d = std::size_t{1} << nq;
    std::vector<cplx> gm(d * d);
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<cplx> e(d, cplx{0.0, 0.0});
        e[c] = 1.0;
        StateVector col(nq, std::move(e));
        apply_generator(g, qubits, col);
        for (std::size_t r = 0; r < d; ++r) {
            gm[r * d + c] = col[r];
        }
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) {
                acc += om[r * d + k] * gm[k * d + c] +
                       gm[r * d + k] * om[k * d + c];
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

LemmaReport check_lemma(Lemma lemma, const SingleGateConfig &cfg,
                        std::size_t samples, std::uint64_t seed) {
    const std::size_t nq = cfg.input.num_qubits();
    if (cfg.observable.num_qubits() != nq) {
        throw std::invalid_argument("observable and state sizes differ");
    }
    if (!(cfg.gamma_sq >= 0.0)) {
        throw std::invalid_argument("gamma^2 must be nonnegative");
    }
    const double anti = anticommutator_norm(cfg.observable, cfg.generator,
                                            cfg.qubits);
    if (anti > 1e-10) {
        throw std::invalid_argument(
            "observable and generator do not anti-commute (|OG + GO| = " +
            std::to_string(anti) + ")");
    }

    LemmaReport r;
    r.tr_o_rho = expectation_hamiltonian(cfg.input, cfg.observable);
    // Tr[iGO rho] = i <G psi | O psi>.
    const auto o_psi = apply_dense(dense_matrix(cfg.observable), cfg.input);
    StateVector g_psi = cfg.input;
    apply_generator(cfg.generator, cfg.qubits, g_psi);
    cplx overlap{0.0, 0.0};
    for (std::size_t k = 0; k < o_psi.size(); ++k) {
        overlap += std::conj(g_psi[k]) * o_psi[k];
    }
    const cplx v = cplx{0.0, 1.0} * overlap;
    if (std::abs(v.imag()) > 1e-10) {
        throw std::logic_error("Tr[iGO rho] has an imaginary part");
    }
    r.tr_igo_rho = v.real();
    r.closed_form =
        lemma == Lemma::b1
            ? lemma_b1_closed_form(r.tr_o_rho, r.tr_igo_rho, cfg.gamma_sq)
            : lemma_b2_closed_form(r.tr_o_rho, r.tr_igo_rho, cfg.gamma_sq);

    const LossProblem p = single_gate_problem(cfg);
    const double sd = std::sqrt(cfg.gamma_sq);
    std::vector<double> values(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, i));
        const double theta[1] = {rng.normal(0.0, sd)};
        if (lemma == Lemma::b1) {
            const double f = loss(p, theta);
            values[i] = f * f;
        } else {
            const double d = grad_parameter_shift(p, theta)[0];
            values[i] = d * d;
        }
    }
    r.estimate = summarize(values, seed);
    const double diff = r.estimate.mean - r.closed_form;
    if (r.estimate.std_error > 0.0) {
        r.deviation_in_se = diff / r.estimate.std_error;
        r.pass = std::abs(r.deviation_in_se) <= 4.0;
    } else {
        // Every draw gave the same value; compare at rounding level.
        r.pass = std::abs(diff) <= 1e-12 * std::max(1.0, r.closed_form);
    }
    return r;
}

SingleGateConfig random_single_gate_config(std::uint64_t seed) {
    Rng rng(seed);
    const auto pick = [&rng](std::size_t n) {
        return std::min(n - 1, static_cast<std::size_t>(
                                   rng.uniform() * static_cast<double>(n)));
    };
    const std::size_t nq = 1 + pick(3);
    const std::size_t arity = nq >= 2 ? 1 + pick(2) : 1;

    std::vector<std::size_t> qubits;
    while (qubits.size() < arity) {
        const std::size_t q = pick(nq);
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            qubits.push_back(q);
        }
    }
    static constexpr char kLetters[] = "IXYZ";
    std::string label;
    std::vector<int> g_full(nq, 0);
    for (std::size_t k = 0; k < arity; ++k) {
        const int letter = 1 + static_cast<int>(pick(3));
        label += kLetters[letter];
        g_full[qubits[k]] = letter;
    }

    // A Pauli string anti-commutes with G iff they differ (both non-identity)
    // on an odd number of qubits.
    const auto anticommutes = [&g_full](const std::vector<int> &s) {
        int count = 0;
        for (std::size_t q = 0; q < s.size(); ++q) {
            count += s[q] != 0 && g_full[q] != 0 && s[q] != g_full[q];
        }
        return count % 2 == 1;
    };
    Hamiltonian obs;
    const std::size_t terms = 1 + pick(3);
    while (obs.terms().size() < terms) {
        std::vector<int> s(nq);
        for (auto &x : s) {
            x = static_cast<int>(pick(4));
        }
        if (anticommutes(s)) {
            obs.add_term(rng.uniform(-1.0, 1.0), PauliString(std::move(s)));
        }
    }

    const std::size_t d = std::size_t{1} << nq;
    std::vector<cplx> amps(d);
    double n2 = 0.0;
    for (auto &a : amps) {
        a = cplx{rng.normal(), rng.normal()};
        n2 += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(n2);
    }
    return {std::move(obs), Generator::pauli(label), std::move(qubits),
            StateVector(nq, std::move(amps)), rng.uniform(0.01, 1.0)};
}

} // namespace plateau
