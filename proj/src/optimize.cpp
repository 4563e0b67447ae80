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
#include "plateau/optimize.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace plateau {

void OptimizerConfig::validate() const {
    if (!(learning_rate > 0.0)) {
        throw std::invalid_argument("learning_rate must be > 0");
    }
    if (!(momentum >= 0.0 && momentum < 1.0)) {
        throw std::invalid_argument("momentum must be in [0, 1)");
    }
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
        throw std::invalid_argument("Adam betas must be in [0, 1)");
    }
    if (!(adam_epsilon > 0.0) || !(adagrad_epsilon > 0.0)) {
        throw std::invalid_argument("optimizer epsilons must be > 0");
    }
}

std::string to_string(OptimizerConfig::Kind kind) {
    switch (kind) {
    case OptimizerConfig::Kind::gd:
        return "gd";
    case OptimizerConfig::Kind::momentum:
        return "momentum";
    case OptimizerConfig::Kind::nag:
        return "nag";
    case OptimizerConfig::Kind::adagrad:
        return "adagrad";
    case OptimizerConfig::Kind::adam:
        return "adam";
    }
    return "unknown";
}

OptimizerConfig::Kind parse_optimizer_kind(std::string_view name) {
    using K = OptimizerConfig::Kind;
    for (K k : {K::gd, K::momentum, K::nag, K::adagrad, K::adam}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown optimizer '" + std::string(name) +
                                "'");
}

Optimizer::Optimizer(OptimizerConfig config, std::size_t num_params)
    : config_(config), first_(num_params, 0.0), second_(num_params, 0.0) {
    config_.validate();
}

void Optimizer::step(std::vector<double> &params,
                     std::span<const double> grad) {
    if (params.size() != first_.size() || grad.size() != first_.size()) {
        throw std::invalid_argument("optimizer step: dimension mismatch");
    }
    using K = OptimizerConfig::Kind;
    const double lr = config_.learning_rate;
    ++t_;
    switch (config_.kind) {
    case K::gd:
        for (std::size_t j = 0; j < params.size(); ++j) {
            params[j] -= lr * grad[j];
        }
        break;
    case K::momentum:
        for (std::size_t j = 0; j < params.size(); ++j) {
            first_[j] = config_.momentum * first_[j] + grad[j];
            params[j] -= lr * first_[j];
        }
        break;
    case K::nag:
        // Look-ahead form that needs the gradient at the current point only.
        for (std::size_t j = 0; j < params.size(); ++j) {
            first_[j] = config_.momentum * first_[j] + grad[j];
            params[j] -= lr * (grad[j] + config_.momentum * first_[j]);
        }
        break;
    case K::adagrad:
        for (std::size_t j = 0; j < params.size(); ++j) {
            second_[j] += grad[j] * grad[j];
            params[j] -=
                lr * grad[j] / (std::sqrt(second_[j]) + config_.adagrad_epsilon);
        }
        break;
    case K::adam: {
        const double b1 = config_.beta1;
        const double b2 = config_.beta2;
        const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
        const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
        for (std::size_t j = 0; j < params.size(); ++j) {
            first_[j] = b1 * first_[j] + (1.0 - b1) * grad[j];
            second_[j] = b2 * second_[j] + (1.0 - b2) * grad[j] * grad[j];
            const double m_hat = first_[j] / c1;
            const double v_hat = second_[j] / c2;
            params[j] -= lr * m_hat / (std::sqrt(v_hat) + config_.adam_epsilon);
        }
        break;
    }
    }
}

NoiseModel NoiseModel::constant(double variance) {
    if (!(variance >= 0.0) || !std::isfinite(variance)) {
        throw std::invalid_argument("noise variance must be >= 0");
    }
    NoiseModel n;
    n.kind = Kind::constant;
    n.variance = variance;
    return n;
}

NoiseModel NoiseModel::adaptive(double epsilon, VarianceForm form) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("adaptive noise epsilon must be > 0");
    }
    NoiseModel n;
    n.kind = Kind::adaptive;
    n.epsilon = epsilon;
    n.form = form;
    return n;
}

std::string to_string(NoiseModel::Kind kind) {
    switch (kind) {
    case NoiseModel::Kind::none:
        return "none";
    case NoiseModel::Kind::constant:
        return "constant";
    case NoiseModel::Kind::adaptive:
        return "adaptive";
    }
    return "unknown";
}

NoiseContext NoiseContext::from_problem(const LossProblem &p) {
    NoiseContext ctx;
    const auto &c = p.circuit();
    ctx.layers = c.num_params();
    for (std::size_t j = 0; j < c.num_params(); ++j) {
        ctx.sharing.push_back(c.sharing_count(j));
        ctx.scales.push_back(c.scale(j));
    }
    ctx.norm_o = operator_norm(p.hamiltonian());
    return ctx;
}

std::vector<double> noise_variances(const NoiseModel &noise,
                                    std::span<const double> prev_grad,
                                    const NoiseContext &ctx) {
    const std::size_t n = prev_grad.size();
    switch (noise.kind) {
    case NoiseModel::Kind::none:
        return std::vector<double>(n, 0.0);
    case NoiseModel::Kind::constant:
        return std::vector<double>(n, noise.variance);
    case NoiseModel::Kind::adaptive:
        break;
    }
    if (ctx.sharing.size() != n || ctx.scales.size() != n) {
        throw std::invalid_argument(
            "adaptive noise needs circuit metadata for every parameter");
    }
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = adaptive_noise_variance(prev_grad[j] * prev_grad[j],
                                         ctx.sharing[j], ctx.scales[j],
                                         ctx.layers, noise.epsilon, ctx.norm_o,
                                         noise.form);
    }
    return out;
}

PerturbedGradient perturb_gradient(std::span<const double> grad,
                                   const NoiseModel &noise,
                                   std::span<const double> prev_grad,
                                   std::uint64_t seed,
                                   const NoiseContext &ctx) {
    if (prev_grad.size() != grad.size()) {
        throw std::invalid_argument("perturb_gradient: dimension mismatch");
    }
    PerturbedGradient out{{grad.begin(), grad.end()},
                          noise_variances(noise, prev_grad, ctx)};
    if (noise.kind == NoiseModel::Kind::none) {
        return out;
    }
    Rng rng(seed);
    for (std::size_t j = 0; j < grad.size(); ++j) {
        // Always draw so component j sees the same stream position.
        const double z = rng.normal();
        out.values[j] += std::sqrt(out.variances[j]) * z;
    }
    return out;
}

std::string TrainTrace::params_digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double x : final_params) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &x, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
        h >>= 4;
    }
    return out;
}

TrainTrace train(const LossProblem &p, const InitStrategy &init,
                 const OptimizerConfig &opt, const NoiseModel &noise,
                 std::size_t iterations, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = p.num_params();
    const NoiseContext ctx = noise.kind == NoiseModel::Kind::adaptive
                                 ? NoiseContext::from_problem(p)
                                 : NoiseContext{};
    const std::uint64_t noise_seed = derive_seed(seed, 1);

    TrainTrace trace;
    trace.seed = seed;
    trace.records.reserve(iterations + 1);
    std::vector<double> params = sample(init, n, derive_seed(seed, 0));
    trace.initial_params = params;
    Optimizer optimizer(opt, n);
    std::vector<double> prev_grad;

    for (std::size_t t = 0;; ++t) {
        const auto grad = grad_parameter_shift(p, params);
        // The first step has no previous iterate; it uses its own gradient.
        const std::span<const double> prev =
            prev_grad.empty() ? std::span<const double>(grad)
                              : std::span<const double>(prev_grad);
        const auto perturbed = perturb_gradient(
            grad, noise, prev, derive_seed(noise_seed, t), ctx);
        double mean_var = 0.0;
        for (double v : perturbed.variances) {
            mean_var += v;
        }
        if (n > 0) {
            mean_var /= static_cast<double>(n);
        }
        trace.records.push_back(
            {t, loss(p, params), std::sqrt(grad_norm_sq(grad)), mean_var});
        if (t == iterations) {
            break;
        }
        optimizer.step(params, perturbed.values);
        prev_grad = grad;
    }
    trace.final_params = std::move(params);
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return trace;
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string trace_to_csv(const TrainTrace &trace) {
    std::string out = "iteration,loss,grad_norm,noise_variance,"
                      "measurements_equiv\n";
    for (const auto &r : trace.records) {
        const double measurements =
            r.noise_variance > 0.0
                ? 1.0 / r.noise_variance
                : std::numeric_limits<double>::infinity();
        out += std::to_string(r.iteration);
        out += ',';
        out += format_double(r.loss);
        out += ',';
        out += format_double(r.grad_norm);
        out += ',';
        out += format_double(r.noise_variance);
        out += ',';
        out += format_double(measurements);
        out += '\n';
    }
    return out;
}

} // namespace plateau
