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
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plateau/gradient.hpp"

namespace plateau {

/// SplitMix64 finalizer; derives independent stream seeds from
/// (master seed, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seedable generator with platform-independent output: mt19937_64 bits,
/// 53-bit uniforms, and Box-Muller normals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();
    double normal(double mean, double stddev) {
        return mean + stddev * normal();
    }

  private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Parameter distribution: zero, uniform[lo, hi), or centred Gaussian with
/// per-parameter (or one broadcast) variance.
struct InitStrategy {
    enum class Kind { zero, uniform, gaussian };

    Kind kind = Kind::zero;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> variances;

    static InitStrategy zero();
    static InitStrategy uniform(double lo = 0.0,
                                double hi = 2.0 * std::numbers::pi);
    static InitStrategy gaussian(double variance);
    static InitStrategy gaussian(std::vector<double> variances);
};

std::string to_string(InitStrategy::Kind kind);

std::vector<double> sample(const InitStrategy &strategy,
                           std::size_t num_params, std::uint64_t seed);

/// 1 / (4 S (L + 2)) for locality S and L trainable rotation layers.
double variance_local(std::size_t locality, std::size_t layers);

/// `theorem` keeps the factor 3h(h-1)+1; `approximate` replaces it with
/// 3h^2, which reproduces the constants used in the chemistry experiments
/// (e.g. 8^2 * 1/2 / (48 * 8^4 * 24)).
enum class VarianceForm { theorem, approximate };

std::string to_string(VarianceForm form);

struct VarianceBound {
    double value = 0.0;
    /// Set when the squared derivative is zero and the bound is vacuous.
    bool degenerate = false;
};

/// a^2 eps / (16 h^2 (3h(h-1)+1) L ||O||^2) * grad0_sq.
VarianceBound variance_global(double scale, std::size_t sharing,
                              std::size_t layers, double epsilon,
                              double grad0_sq, double norm_o,
                              VarianceForm form = VarianceForm::theorem);

/// Same bound evaluated at the previous iterate's derivative; used as the
/// per-component measurement-noise variance.
double adaptive_noise_variance(double grad_prev_component_sq,
                               std::size_t sharing, double scale,
                               std::size_t layers, double epsilon,
                               double norm_o,
                               VarianceForm form = VarianceForm::theorem);

/// How the target derivative l is chosen for the correlated-parameter
/// bound.
struct TargetSelection {
    /// Unset: the smallest nonzero squared derivative at zero.
    std::optional<std::size_t> index;
};

struct TheoremVariances {
    std::vector<double> variances;
    std::size_t target = 0;
    double grad0_sq = 0.0;
    double norm_o = 0.0;
    bool degenerate = false;
};

/// Per-parameter Gaussian variances for a correlated-parameter problem.
TheoremVariances theorem_variances(const LossProblem &p, double epsilon,
                                   TargetSelection target = {},
                                   VarianceForm form = VarianceForm::theorem);

} // namespace plateau
