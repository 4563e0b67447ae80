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
#include <string>
#include <string_view>
#include <vector>

#include "plateau/gradient.hpp"
#include "plateau/init.hpp"

namespace plateau {

struct OptimizerConfig {
    enum class Kind { gd, momentum, nag, adagrad, adam };

    Kind kind = Kind::gd;
    double learning_rate = 0.01;
    double momentum = 0.9;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_epsilon = 1e-8;
    double adagrad_epsilon = 1e-8;

    /// Throws std::invalid_argument on out-of-range hyperparameters.
    void validate() const;
};

std::string to_string(OptimizerConfig::Kind kind);
OptimizerConfig::Kind parse_optimizer_kind(std::string_view name);

/// First-order update rule with its running state.
class Optimizer {
  public:
    Optimizer(OptimizerConfig config, std::size_t num_params);

    void step(std::vector<double> &params, std::span<const double> grad);
    [[nodiscard]] const OptimizerConfig &config() const { return config_; }

  private:
    OptimizerConfig config_;
    std::vector<double> first_;  // velocity / Adam m
    std::vector<double> second_; // AdaGrad sum of squares / Adam v
    std::size_t t_ = 0;
};

/// Additive Gaussian error on the exact gradient.
struct NoiseModel {
    enum class Kind { none, constant, adaptive };

    Kind kind = Kind::none;
    double variance = 0.0; // constant
    double epsilon = 0.5;  // adaptive
    VarianceForm form = VarianceForm::theorem;

    static NoiseModel none() { return {}; }
    static NoiseModel constant(double variance);
    static NoiseModel adaptive(double epsilon,
                               VarianceForm form = VarianceForm::theorem);
};

std::string to_string(NoiseModel::Kind kind);

/// Per-parameter circuit metadata the adaptive model needs.
struct NoiseContext {
    std::vector<std::size_t> sharing;
    std::vector<double> scales;
    std::size_t layers = 0;
    double norm_o = 0.0;

    static NoiseContext from_problem(const LossProblem &p);
};

/// Per-component variances for the next step. For the adaptive model,
/// component j uses the bound evaluated at prev_grad[j]^2.
std::vector<double> noise_variances(const NoiseModel &noise,
                                    std::span<const double> prev_grad,
                                    const NoiseContext &ctx);

struct PerturbedGradient {
    std::vector<double> values;
    std::vector<double> variances;
};

PerturbedGradient perturb_gradient(std::span<const double> grad,
                                   const NoiseModel &noise,
                                   std::span<const double> prev_grad,
                                   std::uint64_t seed,
                                   const NoiseContext &ctx = {});

struct TraceRecord {
    std::size_t iteration = 0;
    double loss = 0.0;
    double grad_norm = 0.0;
    /// Mean per-component noise variance used for the step after this
    /// record.
    double noise_variance = 0.0;
};

struct TrainTrace {
    std::vector<TraceRecord> records;
    std::vector<double> initial_params;
    std::vector<double> final_params;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;

    /// FNV-1a over the bytes of final_params, as 16 hex digits.
    [[nodiscard]] std::string params_digest() const;
};

/// Seeds: init draws from derive_seed(seed, 0); the noise at iteration t
/// from derive_seed(derive_seed(seed, 1), t).
TrainTrace train(const LossProblem &p, const InitStrategy &init,
                 const OptimizerConfig &opt, const NoiseModel &noise,
                 std::size_t iterations, std::uint64_t seed);

/// `iteration,loss,grad_norm,noise_variance,measurements_equiv` with
/// shortest round-trip number formatting.
std::string trace_to_csv(const TrainTrace &trace);

/// Shortest round-trip decimal; "inf"/"nan" for non-finite values.
std::string format_double(double x);

} // namespace plateau
