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
#include "plateau/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace plateau {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void require_keys(const json &j, std::string_view where,
                  std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw ConfigError(std::string(where) + ": expected an object");
    }
    for (const auto &item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) ==
            allowed.end()) {
            throw ConfigError(std::string(where) + ": unknown key '" +
                              item.key() + "'");
        }
    }
}

InitStrategy::Kind parse_init_kind(const std::string &s) {
    using K = InitStrategy::Kind;
    for (K k : {K::zero, K::uniform, K::gaussian}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw ConfigError("unknown init kind '" + s + "'");
}

VarianceForm parse_variance_form(const std::string &s) {
    if (s == "theorem") {
        return VarianceForm::theorem;
    }
    if (s == "approximate") {
        return VarianceForm::approximate;
    }
    throw ConfigError("unknown variance form '" + s + "'");
}

ProblemSpec problem_from_json(const json &j) {
    ProblemSpec p;
    const auto type = j.value("type", std::string("heisenberg"));
    if (type == "heisenberg") {
        require_keys(j, "problem", {"type", "qubits", "blocks"});
        p.kind = ProblemSpec::Kind::heisenberg;
        p.qubits = j.value("qubits", p.qubits);
        p.blocks = j.value("blocks", p.blocks);
        return p;
    }
    if (type != "chemistry") {
        throw ConfigError("unknown problem type '" + type + "'");
    }
    require_keys(j, "problem",
                 {"type", "hamiltonian", "orbitals", "electrons", "pairs",
                  "stack"});
    p.kind = ProblemSpec::Kind::chemistry;
    p.hamiltonian = j.value("hamiltonian", p.hamiltonian);
    p.orbitals = j.value("orbitals", p.orbitals);
    p.electrons = j.value("electrons", p.electrons);
    p.stack = j.value("stack", p.stack);
    if (j.contains("pairs")) {
        const auto &arr = j.at("pairs");
        if (arr.is_string()) {
            if (arr.get<std::string>() != "singles") {
                throw ConfigError("pairs must be \"singles\" or a list");
            }
        } else {
            for (const auto &pair : arr) {
                const auto ab = pair.get<std::vector<std::size_t>>();
                if (ab.size() != 2) {
                    throw ConfigError("each Givens pair needs two orbitals");
                }
                p.pairs.push_back({ab[0], ab[1], p.pairs.size()});
            }
        }
    }
    return p;
}

json problem_to_json(const ProblemSpec &p) {
    if (p.kind == ProblemSpec::Kind::heisenberg) {
        return {{"type", "heisenberg"}, {"qubits", p.qubits},
                {"blocks", p.blocks}};
    }
    json pairs = json::array();
    for (const auto &g : p.pairs) {
        pairs.push_back({g.a, g.b});
    }
    return {{"type", "chemistry"},
            {"hamiltonian", p.hamiltonian},
            {"orbitals", p.orbitals},
            {"electrons", p.electrons},
            {"pairs", p.pairs.empty() ? json("singles") : pairs},
            {"stack", p.stack}};
}

InitSpec init_from_json(const json &j) {
    require_keys(j, "init",
                 {"kind", "lo", "hi", "variance", "variance_multiplier",
                  "epsilon", "variance_form"});
    InitSpec s;
    s.kind = parse_init_kind(j.value("kind", std::string("gaussian")));
    s.lo = j.value("lo", s.lo);
    s.hi = j.value("hi", s.hi);
    if (j.contains("variance")) {
        const auto &v = j.at("variance");
        if (v.is_number()) {
            s.mode = InitSpec::Mode::fixed;
            s.variance = v.get<double>();
        } else if (v == "theorem") {
            s.mode = InitSpec::Mode::theorem;
        } else if (v != "auto") {
            throw ConfigError(
                "init.variance must be \"auto\", \"theorem\" or a number");
        }
    }
    s.variance_multiplier = j.value("variance_multiplier", 1.0);
    s.epsilon = j.value("epsilon", s.epsilon);
    s.form = parse_variance_form(j.value("variance_form", to_string(s.form)));
    return s;
}

json init_to_json(const InitSpec &s) {
    return {{"kind", to_string(s.kind)},
            {"lo", s.lo},
            {"hi", s.hi},
            {"variance", s.mode == InitSpec::Mode::fixed
                             ? json(s.variance)
                             : json(s.mode == InitSpec::Mode::theorem
                                        ? "theorem"
                                        : "auto")},
            {"variance_multiplier", s.variance_multiplier},
            {"epsilon", s.epsilon},
            {"variance_form", to_string(s.form)}};
}

OptimizerConfig optimizer_from_json(const json &j) {
    require_keys(j, "optimizer",
                 {"kind", "learning_rate", "momentum", "beta1", "beta2",
                  "adam_epsilon", "adagrad_epsilon"});
    OptimizerConfig o;
    o.kind = parse_optimizer_kind(j.value("kind", std::string("gd")));
    o.learning_rate = j.value("learning_rate", o.learning_rate);
    o.momentum = j.value("momentum", o.momentum);
    o.beta1 = j.value("beta1", o.beta1);
    o.beta2 = j.value("beta2", o.beta2);
    o.adam_epsilon = j.value("adam_epsilon", o.adam_epsilon);
    o.adagrad_epsilon = j.value("adagrad_epsilon", o.adagrad_epsilon);
    return o;
}

json optimizer_to_json(const OptimizerConfig &o) {
    return {{"kind", to_string(o.kind)},
            {"learning_rate", o.learning_rate},
            {"momentum", o.momentum},
            {"beta1", o.beta1},
            {"beta2", o.beta2},
            {"adam_epsilon", o.adam_epsilon},
            {"adagrad_epsilon", o.adagrad_epsilon}};
}

NoiseModel noise_from_json(const json &j) {
    require_keys(j, "noise", {"kind", "variance", "epsilon", "form"});
    const auto kind = j.value("kind", std::string("none"));
    NoiseModel n;
    if (kind == "constant") {
        n = NoiseModel::constant(j.at("variance").get<double>());
    } else if (kind == "adaptive") {
        n = NoiseModel::adaptive(
            j.value("epsilon", 0.5),
            parse_variance_form(j.value("form", std::string("theorem"))));
    } else if (kind != "none") {
        throw ConfigError("unknown noise kind '" + kind + "'");
    }
    return n;
}

json noise_to_json(const NoiseModel &n) {
    return {{"kind", to_string(n.kind)},
            {"variance", n.variance},
            {"epsilon", n.epsilon},
            {"form", to_string(n.form)}};
}

json config_json(const ExperimentConfig &c) {
    return {{"problem", problem_to_json(c.problem)},
            {"init", init_to_json(c.init)},
            {"optimizer", optimizer_to_json(c.optimizer)},
            {"noise", noise_to_json(c.noise)},
            {"iterations", c.iterations},
            {"seeds", c.seeds},
            {"output_dir", c.output_dir}};
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() +
                                 "' for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

double parse_number(const std::string &s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ConfigError("expected a number, got '" + s + "'");
    }
    return v;
}

} // namespace

void ExperimentConfig::validate() const {
    if (seeds.empty()) {
        throw std::invalid_argument("at least one seed is required");
    }
    optimizer.validate();
    if (problem.kind == ProblemSpec::Kind::heisenberg) {
        if (problem.qubits < 2 || problem.qubits > kMaxQubits) {
            throw std::invalid_argument("heisenberg qubits must be in [2, " +
                                        std::to_string(kMaxQubits) + "]");
        }
        if (problem.blocks < 1) {
            throw std::invalid_argument("heisenberg blocks must be >= 1");
        }
    } else {
        if (problem.electrons > problem.orbitals ||
            problem.orbitals > kMaxQubits || problem.stack < 1) {
            throw std::invalid_argument(
                "chemistry needs electrons <= orbitals <= " +
                std::to_string(kMaxQubits) + " and stack >= 1");
        }
    }
    if (!(init.variance_multiplier > 0.0)) {
        throw std::invalid_argument("variance_multiplier must be > 0");
    }
    if (init.mode == InitSpec::Mode::fixed &&
        !(init.variance > 0.0 && std::isfinite(init.variance))) {
        throw std::invalid_argument("init variance must be > 0");
    }
}

ExperimentConfig parse_experiment_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    ExperimentConfig c;
    try {
        require_keys(doc, "config",
                     {"problem", "init", "optimizer", "noise", "iterations",
                      "seeds", "output_dir"});
        if (doc.contains("problem")) {
            c.problem = problem_from_json(doc.at("problem"));
        }
        if (doc.contains("init")) {
            c.init = init_from_json(doc.at("init"));
        }
        if (doc.contains("optimizer")) {
            c.optimizer = optimizer_from_json(doc.at("optimizer"));
        }
        if (doc.contains("noise")) {
            c.noise = noise_from_json(doc.at("noise"));
        }
        c.iterations = doc.value("iterations", c.iterations);
        if (doc.contains("seeds")) {
            c.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
        }
        c.output_dir = doc.value("output_dir", c.output_dir);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    try {
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

ExperimentConfig load_experiment_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open config '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config(ss.str());
}

std::string config_to_json(const ExperimentConfig &cfg) {
    return config_json(cfg).dump(2);
}

LossProblem build_problem(const ProblemSpec &spec) {
    if (spec.kind == ProblemSpec::Kind::heisenberg) {
        return LossProblem(heisenberg_ansatz(spec.qubits, spec.blocks,
                                             ring_pairs(spec.qubits)),
                           heisenberg(spec.qubits), StateVector(spec.qubits));
    }
    Hamiltonian h = spec.hamiltonian == "toy"
                        ? toy_electron_conserving(spec.orbitals)
                        : load_hamiltonian_file(spec.hamiltonian);
    if (h.num_qubits() != spec.orbitals) {
        throw std::invalid_argument(
            "Hamiltonian acts on " + std::to_string(h.num_qubits()) +
            " qubits but the problem has " + std::to_string(spec.orbitals) +
            " orbitals");
    }
    const auto pairs =
        spec.pairs.empty()
            ? single_excitation_pairs(spec.orbitals, spec.electrons)
            : spec.pairs;
    Circuit base = electron_conserving_ansatz(spec.orbitals, pairs);
    return LossProblem(spec.stack == 1 ? base : stack(base, spec.stack),
                       std::move(h), hf_state(spec.orbitals, spec.electrons));
}

InitStrategy resolve_init(const InitSpec &spec, const ProblemSpec &problem,
                          const LossProblem &p) {
    switch (spec.kind) {
    case InitStrategy::Kind::zero:
        return InitStrategy::zero();
    case InitStrategy::Kind::uniform:
        return InitStrategy::uniform(spec.lo, spec.hi);
    case InitStrategy::Kind::gaussian:
        break;
    }
    const double mult = spec.variance_multiplier;
    if (spec.mode == InitSpec::Mode::fixed) {
        return InitStrategy::gaussian(spec.variance * mult);
    }
    if (problem.kind == ProblemSpec::Kind::heisenberg) {
        if (spec.mode == InitSpec::Mode::theorem) {
            throw std::invalid_argument(
                "theorem variances apply to chemistry problems only");
        }
        const double v =
            variance_local(max_locality(p.hamiltonian()),
                           heisenberg_ansatz_layers(problem.blocks));
        return InitStrategy::gaussian(v * mult);
    }
    const auto &c = p.circuit();
    std::vector<double> vars(p.num_params());
    if (spec.mode == InitSpec::Mode::theorem) {
        const auto tv = theorem_variances(p, spec.epsilon, {}, spec.form);
        if (tv.degenerate) {
            throw std::invalid_argument(
                "theorem variance: every derivative vanishes at zero");
        }
        vars = tv.variances;
    } else {
        for (std::size_t j = 0; j < vars.size(); ++j) {
            vars[j] = variance_global(c.scale(j), c.sharing_count(j),
                                      vars.size(), spec.epsilon, 1.0, 1.0,
                                      VarianceForm::approximate)
                          .value;
        }
    }
    for (auto &v : vars) {
        v *= mult;
    }
    return InitStrategy::gaussian(std::move(vars));
}

std::string summary_to_json(const ExperimentSummary &s) {
    json rows = json::array();
    for (std::size_t t = 0; t < s.mean_loss.size(); ++t) {
        json row = {{"iteration", t},
                    {"mean_loss", s.mean_loss[t]},
                    {"mean_grad_norm", s.mean_grad_norm[t]}};
        if (s.f_star) {
            row["gap"] = s.mean_loss[t] - *s.f_star;
        }
        rows.push_back(std::move(row));
    }
    json out = {{"iterations", std::move(rows)}};
    out["f_star"] = s.f_star ? json(*s.f_star) : json(nullptr);
    return out.dump(2);
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const LossProblem p = build_problem(cfg.problem);

    ExperimentResult r;
    r.num_params = p.num_params();
    r.init = resolve_init(cfg.init, cfg.problem, p);
    for (std::uint64_t seed : cfg.seeds) {
        r.traces.push_back(
            train(p, r.init, cfg.optimizer, cfg.noise, cfg.iterations, seed));
    }

    const double n = static_cast<double>(r.traces.size());
    r.summary.mean_loss.assign(cfg.iterations + 1, 0.0);
    r.summary.mean_grad_norm.assign(cfg.iterations + 1, 0.0);
    for (const auto &tr : r.traces) {
        for (std::size_t t = 0; t <= cfg.iterations; ++t) {
            r.summary.mean_loss[t] += tr.records[t].loss / n;
            r.summary.mean_grad_norm[t] += tr.records[t].grad_norm / n;
        }
    }
    if (p.circuit().num_qubits() <= kMaxDenseQubits) {
        r.summary.f_star = exact_ground_energy(p.hamiltonian());
    }
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();

    if (cfg.output_dir.empty()) {
        return r;
    }
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    json runs = json::array();
    for (const auto &tr : r.traces) {
        const std::string name = "seed_" + std::to_string(tr.seed) + ".csv";
        write_file(dir / name, trace_to_csv(tr));
        runs.push_back({{"seed", tr.seed},
                        {"trace", name},
                        {"params_digest", tr.params_digest()},
                        {"wall_seconds", tr.wall_seconds}});
    }
    json init_variances = r.init.variances.size() == 1
                              ? json(r.init.variances[0])
                              : json(r.init.variances);
    const json manifest = {{"config", config_json(cfg)},
                           {"num_qubits", p.circuit().num_qubits()},
                           {"num_params", r.num_params},
                           {"init_variance", init_variances},
                           {"runs", runs},
                           {"wall_seconds", r.wall_seconds}};
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    write_file(dir / "summary.json", summary_to_json(r.summary) + "\n");
    return r;
}

SweepAxis parse_sweep_axis(std::string_view name) {
    for (SweepAxis a : {SweepAxis::layers, SweepAxis::variance_multiplier,
                        SweepAxis::optimizer}) {
        if (to_string(a) == name) {
            return a;
        }
    }
    throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::layers:
        return "layers";
    case SweepAxis::variance_multiplier:
        return "variance_multiplier";
    case SweepAxis::optimizer:
        return "optimizer";
    }
    return "unknown";
}

SweepResult run_sweep(const ExperimentConfig &base, SweepAxis axis,
                      const std::vector<std::string> &values) {
    if (values.empty()) {
        throw ConfigError("a sweep needs at least one value");
    }
    SweepResult out;
    out.csv = "value,iteration,mean_loss,mean_grad_norm\n";
    for (const auto &value : values) {
        ExperimentConfig cfg = base;
        switch (axis) {
        case SweepAxis::layers: {
            const double v = parse_number(value);
            if (!(v >= 1.0) || v != static_cast<double>(
                                        static_cast<std::size_t>(v))) {
                throw ConfigError("layers must be a positive integer, got '" +
                                  value + "'");
            }
            auto &target = cfg.problem.kind == ProblemSpec::Kind::heisenberg
                               ? cfg.problem.blocks
                               : cfg.problem.stack;
            target = static_cast<std::size_t>(v);
            break;
        }
        case SweepAxis::variance_multiplier:
            cfg.init.variance_multiplier = parse_number(value);
            break;
        case SweepAxis::optimizer:
            cfg.optimizer.kind = parse_optimizer_kind(value);
            break;
        }
        if (!base.output_dir.empty()) {
            cfg.output_dir =
                (fs::path(base.output_dir) / (to_string(axis) + "_" + value))
                    .string();
        }
        auto r = run_experiment(cfg);
        for (std::size_t t = 0; t < r.summary.mean_loss.size(); ++t) {
            out.csv += value + ',' + std::to_string(t) + ',' +
                       format_double(r.summary.mean_loss[t]) + ',' +
                       format_double(r.summary.mean_grad_norm[t]) + '\n';
        }
        out.labels.push_back(value);
        out.runs.push_back(std::move(r));
    }
    if (!base.output_dir.empty()) {
        fs::create_directories(base.output_dir);
        write_file(fs::path(base.output_dir) / "sweep.csv", out.csv);
    }
    return out;
}

} // namespace plateau
