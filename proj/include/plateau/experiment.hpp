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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plateau/circuit.hpp"
#include "plateau/gradient.hpp"
#include "plateau/init.hpp"
#include "plateau/optimize.hpp"

namespace plateau {

struct ProblemSpec {
    enum class Kind { heisenberg, chemistry };

    Kind kind = Kind::heisenberg;
    // heisenberg
    std::size_t qubits = 8;
    std::size_t blocks = 5;
    // chemistry
    /// Path to a Hamiltonian file, or "toy" for toy_electron_conserving.
    std::string hamiltonian = "toy";
    std::size_t orbitals = 6;
    std::size_t electrons = 3;
    /// Empty: every single excitation.
    std::vector<GivensPair> pairs;
    std::size_t stack = 1;
};

struct InitSpec {
    /// How the Gaussian variance is chosen.
    ///  automatic: 1/(4S(L+2)) for the Heisenberg problem; for chemistry the
    ///    literal per-parameter constant a^2 eps / (48 h^4 L), i.e. the
    ///    approximate bound with unit derivative and unit norm.
    ///  theorem: theorem_variances(problem, epsilon, form) (chemistry only).
    ///  fixed: `variance`.
    enum class Mode { automatic, theorem, fixed };

    InitStrategy::Kind kind = InitStrategy::Kind::gaussian;
    double lo = 0.0;
    double hi = 2.0 * std::numbers::pi;
    Mode mode = Mode::automatic;
    double variance = 0.0;
    double variance_multiplier = 1.0;
    double epsilon = 0.5;
    VarianceForm form = VarianceForm::theorem;
};

struct ExperimentConfig {
    ProblemSpec problem;
    InitSpec init;
    OptimizerConfig optimizer;
    NoiseModel noise;
    std::size_t iterations = 200;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    /// Empty: nothing is written.
    std::string output_dir;

    /// Throws std::invalid_argument when the config cannot run.
    void validate() const;
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Missing keys take the defaults above; unknown keys are rejected.
ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig load_experiment_config(const std::string &path);
/// Every field, defaults included.
std::string config_to_json(const ExperimentConfig &cfg);

LossProblem build_problem(const ProblemSpec &spec);
/// The concrete strategy after resolving automatic variances.
InitStrategy resolve_init(const InitSpec &spec, const ProblemSpec &problem,
                          const LossProblem &p);

struct ExperimentSummary {
    std::vector<double> mean_loss;
    std::vector<double> mean_grad_norm;
    /// Exact minimum when the problem is small enough to diagonalize.
    std::optional<double> f_star;
};

struct ExperimentResult {
    std::vector<TrainTrace> traces;
    ExperimentSummary summary;
    InitStrategy init;
    std::size_t num_params = 0;
    double wall_seconds = 0.0;
};

/// Trains once per seed. With an output directory, writes
/// `seed_<s>.csv`, `manifest.json` and `summary.json` there.
ExperimentResult run_experiment(const ExperimentConfig &cfg);

std::string summary_to_json(const ExperimentSummary &s);

enum class SweepAxis { layers, variance_multiplier, optimizer };

SweepAxis parse_sweep_axis(std::string_view name);
std::string to_string(SweepAxis axis);

struct SweepResult {
    std::vector<std::string> labels;
    std::vector<ExperimentResult> runs;
    /// `value,iteration,mean_loss,mean_grad_norm`.
    std::string csv;
};

/// One run per value; `layers` sets Heisenberg blocks or the chemistry stack
/// depth. Each run writes to `<output_dir>/<axis>_<value>/` and the combined
/// table goes to `<output_dir>/sweep.csv`.
SweepResult run_sweep(const ExperimentConfig &base, SweepAxis axis,
                      const std::vector<std::string> &values);

} // namespace plateau
