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

// Command-line front end: training runs, sweeps, bound checks, gradient
// checks and exact ground energies. Every subcommand prints one JSON
// document on stdout; failures print {"error": {...}} and exit nonzero.

#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plateau/bounds.hpp"
#include "plateau/experiment.hpp"
#include "plateau/gradient.hpp"
#include "plateau/pauli.hpp"

using nlohmann::json;
using namespace plateau;

namespace {

json estimate_json(const McEstimate &e) {
    return {{"mean", e.mean},
            {"std_error", e.std_error},
            {"samples", e.samples},
            {"seed", e.seed}};
}

// Flags that override fields of a loaded (or default) config.
struct Overrides {
    std::string config_path;
    std::optional<std::string> problem;
    std::optional<std::size_t> qubits;
    std::optional<std::size_t> blocks;
    std::optional<std::string> hamiltonian;
    std::optional<std::size_t> orbitals;
    std::optional<std::size_t> electrons;
    std::optional<std::size_t> stack;
    std::optional<std::string> init;
    std::optional<double> variance;
    std::optional<double> variance_multiplier;
    std::optional<std::string> optimizer;
    std::optional<double> learning_rate;
    std::optional<std::string> noise;
    std::optional<double> noise_variance;
    std::optional<double> noise_epsilon;
    std::optional<std::size_t> iterations;
    std::vector<std::uint64_t> seeds;
    std::optional<std::string> output;

    void attach(CLI::App *app) {
        app->add_option("--config", config_path, "experiment config (JSON)")
            ->check(CLI::ExistingFile);
        app->add_option("--problem", problem, "heisenberg | chemistry")
            ->check(CLI::IsMember({"heisenberg", "chemistry"}));
        app->add_option("--qubits", qubits, "Heisenberg qubit count");
        app->add_option("--blocks", blocks, "Heisenberg [CZ, RX, RY] blocks");
        app->add_option("--hamiltonian", hamiltonian,
                        "chemistry Hamiltonian file, or 'toy'");
        app->add_option("--orbitals", orbitals, "chemistry orbitals");
        app->add_option("--electrons", electrons, "chemistry electrons");
        app->add_option("--stack", stack, "chemistry ansatz repetitions");
        app->add_option("--init", init, "zero | uniform | gaussian")
            ->check(CLI::IsMember({"zero", "uniform", "gaussian"}));
        app->add_option("--variance", variance, "Gaussian init variance");
        app->add_option("--variance-multiplier", variance_multiplier);
        app->add_option("--optimizer", optimizer,
                        "gd | momentum | nag | adagrad | adam");
        app->add_option("--lr", learning_rate, "learning rate");
        app->add_option("--noise", noise, "none | constant | adaptive")
            ->check(CLI::IsMember({"none", "constant", "adaptive"}));
        app->add_option("--noise-variance", noise_variance);
        app->add_option("--noise-epsilon", noise_epsilon);
        app->add_option("--iterations", iterations);
        app->add_option("--seeds", seeds, "seed list")->delimiter(',');
        app->add_option("--output", output, "output directory");
    }

    ExperimentConfig resolve() const {
        ExperimentConfig c = config_path.empty()
                                 ? ExperimentConfig{}
                                 : load_experiment_config(config_path);
        if (problem) {
            c.problem.kind = *problem == "chemistry"
                                 ? ProblemSpec::Kind::chemistry
                                 : ProblemSpec::Kind::heisenberg;
        }
        auto set = [](auto &field, const auto &opt) {
            if (opt) {
                field = *opt;
            }
        };
        set(c.problem.qubits, qubits);
        set(c.problem.blocks, blocks);
        set(c.problem.hamiltonian, hamiltonian);
        set(c.problem.orbitals, orbitals);
        set(c.problem.electrons, electrons);
        set(c.problem.stack, stack);
        if (init) {
            c.init.kind = *init == "zero"      ? InitStrategy::Kind::zero
                          : *init == "uniform" ? InitStrategy::Kind::uniform
                                               : InitStrategy::Kind::gaussian;
        }
        if (variance) {
            c.init.mode = InitSpec::Mode::fixed;
            c.init.variance = *variance;
        }
        set(c.init.variance_multiplier, variance_multiplier);
        if (optimizer) {
            c.optimizer.kind = parse_optimizer_kind(*optimizer);
        }
        set(c.optimizer.learning_rate, learning_rate);
        if (noise) {
            if (*noise == "none") {
                c.noise = NoiseModel::none();
            } else if (*noise == "constant") {
                c.noise = NoiseModel::constant(noise_variance.value_or(0.01));
            } else {
                c.noise = NoiseModel::adaptive(noise_epsilon.value_or(0.5));
            }
        }
        set(c.iterations, iterations);
        if (!seeds.empty()) {
            c.seeds = seeds;
        }
        set(c.output_dir, output);
        c.validate();
        return c;
    }
};

json run_json(const ExperimentResult &r, const ExperimentConfig &cfg) {
    json runs = json::array();
    for (const auto &t : r.traces) {
        runs.push_back({{"seed", t.seed},
                        {"initial_loss", t.records.front().loss},
                        {"final_loss", t.records.back().loss},
                        {"initial_grad_norm", t.records.front().grad_norm},
                        {"final_grad_norm", t.records.back().grad_norm},
                        {"params_digest", t.params_digest()}});
    }
    json out = {{"num_params", r.num_params},
                {"iterations", cfg.iterations},
                {"final_mean_loss", r.summary.mean_loss.back()},
                {"final_mean_grad_norm", r.summary.mean_grad_norm.back()},
                {"runs", runs},
                {"wall_seconds", r.wall_seconds}};
    out["f_star"] = r.summary.f_star ? json(*r.summary.f_star) : json(nullptr);
    if (!cfg.output_dir.empty()) {
        out["output_dir"] = cfg.output_dir;
    }
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Gaussian-initialized variational circuit experiments"};
    app.require_subcommand(1);
    json result;

    auto *run = app.add_subcommand("run", "train one experiment");
    Overrides run_opts;
    run_opts.attach(run);
    run->callback([&] {
        const auto cfg = run_opts.resolve();
        result = run_json(run_experiment(cfg), cfg);
    });

    auto *sweep = app.add_subcommand("sweep", "run one experiment per value");
    Overrides sweep_opts;
    sweep_opts.attach(sweep);
    std::string axis;
    std::vector<std::string> values;
    sweep->add_option("--axis", axis, "layers | variance_multiplier | optimizer")
        ->required();
    sweep->add_option("--values", values, "comma-separated values")
        ->required()
        ->delimiter(',');
    sweep->callback([&] {
        const auto cfg = sweep_opts.resolve();
        const auto r = run_sweep(cfg, parse_sweep_axis(axis), values);
        json rows = json::array();
        for (std::size_t i = 0; i < r.runs.size(); ++i) {
            json row = run_json(r.runs[i], cfg);
            row["value"] = r.labels[i];
            rows.push_back(std::move(row));
        }
        result = {{"axis", axis}, {"results", rows}};
    });

    auto *verify = app.add_subcommand("verify-bound",
                                      "Monte-Carlo check of a gradient bound");
    std::string theorem;
    std::size_t qubits = 4;
    std::size_t locality = 1;
    std::size_t layers = 2;
    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    double epsilon = 0.5;
    std::string observable = "Z";
    std::string generator = "X";
    double gamma_sq = 0.1;
    bool random_config = false;
    verify->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"4.1", "4.2", "lemma-b1", "lemma-b2"}));
    verify->add_option("--qubits", qubits, "qubits (4.1)");
    verify->add_option("--locality", locality, "observable locality S (4.1)");
    verify->add_option("--layers", layers, "rotation layers L (4.1)");
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    verify->add_option("--epsilon", epsilon, "tolerance epsilon (4.2)");
    verify->add_option("--observable", observable,
                       "Pauli letters for the lemma observable");
    verify->add_option("--generator", generator,
                       "Pauli letter(s) for the lemma generator on qubit 0");
    verify->add_option("--gamma-sq", gamma_sq, "lemma gate variance");
    verify->add_flag("--random", random_config,
                     "random anti-commuting lemma configuration from --seed");
    verify->callback([&] {
        if (theorem == "4.1") {
            const auto r =
                check_theorem41(qubits, locality, layers, samples, seed);
            result = {{"theorem", theorem},
                      {"qubits", r.num_qubits},
                      {"locality", r.locality},
                      {"layers", r.layers},
                      {"gamma_sq", r.gamma_sq},
                      {"estimate", estimate_json(r.estimate)},
                      {"rhs", r.rhs},
                      {"margin_in_se", r.margin_in_se},
                      {"pass", r.pass}};
            return;
        }
        if (theorem == "4.2") {
            const auto r =
                check_theorem42(givens_test_problem(), epsilon, samples, seed);
            json comps = json::array();
            for (const auto &c : r.components) {
                comps.push_back({{"ell", c.ell},
                                 {"grad0_sq", c.grad0_sq},
                                 {"rhs", c.rhs},
                                 {"estimate", estimate_json(c.estimate)},
                                 {"pass", c.pass}});
            }
            result = {{"theorem", theorem},
                      {"epsilon", r.epsilon},
                      {"target", r.variances.target},
                      {"variances", r.variances.variances},
                      {"components", comps},
                      {"pass", r.pass}};
            return;
        }
        const auto cfg = [&]() -> SingleGateConfig {
            if (random_config) {
                return random_single_gate_config(seed);
            }
            Hamiltonian o;
            o.add_term(1.0, PauliString::from_letters(observable));
            const auto g = Generator::pauli(generator);
            std::vector<std::size_t> q(g.arity());
            for (std::size_t k = 0; k < q.size(); ++k) {
                q[k] = k;
            }
            return {o, g, q, StateVector(o.num_qubits()), gamma_sq};
        }();
        const auto r = check_lemma(
            theorem == "lemma-b1" ? Lemma::b1 : Lemma::b2, cfg, samples, seed);
        result = {{"theorem", theorem},
                  {"observable", format_hamiltonian(cfg.observable)},
                  {"generator", cfg.generator.label()},
                  {"gamma_sq", cfg.gamma_sq},
                  {"tr_o_rho", r.tr_o_rho},
                  {"tr_igo_rho", r.tr_igo_rho},
                  {"closed_form", r.closed_form},
                  {"estimate", estimate_json(r.estimate)},
                  {"deviation_in_se", r.deviation_in_se},
                  {"pass", r.pass}};
    });

    auto *grad = app.add_subcommand(
        "grad-check", "parameter-shift vs central differences");
    std::size_t circuits = 50;
    double step = 1e-5;
    double tolerance = 1e-6;
    std::uint64_t grad_seed = 1;
    grad->add_option("--circuits", circuits, "random circuits to check");
    grad->add_option("--step", step, "finite-difference step");
    grad->add_option("--tolerance", tolerance);
    grad->add_option("--seed", grad_seed);
    grad->callback([&] {
        double worst = 0.0;
        std::size_t failures = 0;
        for (std::size_t i = 0; i < circuits; ++i) {
            const auto p = random_loss_problem(derive_seed(grad_seed, i));
            const auto params = sample(InitStrategy::uniform(),
                                       p.num_params(),
                                       derive_seed(grad_seed, circuits + i));
            const auto c = compare_gradients(p, params, step);
            worst = std::max(worst, c.max_abs_diff);
            failures += c.max_abs_diff > tolerance;
        }
        result = {{"circuits", circuits},
                  {"step", step},
                  {"tolerance", tolerance},
                  {"max_abs_diff", worst},
                  {"failures", failures},
                  {"pass", failures == 0}};
    });

    auto *ground = app.add_subcommand("ground-energy",
                                      "exact ground energy of a Hamiltonian");
    std::string ham_path;
    ground->add_option("file", ham_path, "Hamiltonian file")->required();
    ground->callback([&] {
        const auto h = load_hamiltonian_file(ham_path);
        const auto s = spectrum_extremes(h);
        result = {{"num_qubits", h.num_qubits()},
                  {"terms", h.terms().size()},
                  {"ground_energy", s.min},
                  {"max_energy", s.max}};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cout << json{{"error",
                           {{"type", "usage"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 2;
    } catch (const ParseError &e) {
        std::cout << json{{"error",
                           {{"type", "parse"},
                            {"line", e.line()},
                            {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cout << json{{"error",
                           {{"type", "runtime"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    }
    std::cout << result.dump(2) << "\n";
    return 0;
}
