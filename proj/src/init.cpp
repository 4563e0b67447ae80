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
#include "plateau/init.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace plateau {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    return r * std::cos(t);
}

InitStrategy InitStrategy::zero() { return {}; }

InitStrategy InitStrategy::uniform(double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("uniform init requires lo < hi");
    }
    InitStrategy s;
    s.kind = Kind::uniform;
    s.lo = lo;
    s.hi = hi;
    return s;
}

InitStrategy InitStrategy::gaussian(double variance) {
    return gaussian(std::vector<double>{variance});
}

InitStrategy InitStrategy::gaussian(std::vector<double> variances) {
    if (variances.empty()) {
        throw std::invalid_argument("gaussian init needs a variance");
    }
    for (double v : variances) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(
                "gaussian init variances must be positive and finite");
        }
    }
    InitStrategy s;
    s.kind = Kind::gaussian;
    s.variances = std::move(variances);
    return s;
}

std::string to_string(InitStrategy::Kind kind) {
    switch (kind) {
    case InitStrategy::Kind::zero:
        return "zero";
    case InitStrategy::Kind::uniform:
        return "uniform";
    case InitStrategy::Kind::gaussian:
        return "gaussian";
    }
    return "unknown";
}

std::vector<double> sample(const InitStrategy &strategy,
                           std::size_t num_params, std::uint64_t seed) {
    std::vector<double> out(num_params, 0.0);
    Rng rng(seed);
    switch (strategy.kind) {
    case InitStrategy::Kind::zero:
        break;
    case InitStrategy::Kind::uniform:
        for (auto &x : out) {
            x = rng.uniform(strategy.lo, strategy.hi);
        }
        break;
    case InitStrategy::Kind::gaussian: {
        const auto &v = strategy.variances;
        if (v.size() != 1 && v.size() != num_params) {
            throw std::invalid_argument(
                "gaussian init has " + std::to_string(v.size()) +
                " variances for " + std::to_string(num_params) +
                " parameters");
        }
        for (std::size_t j = 0; j < num_params; ++j) {
            out[j] = rng.normal(0.0, std::sqrt(v.size() == 1 ? v[0] : v[j]));
        }
        break;
    }
    }
    return out;
}

double variance_local(std::size_t locality, std::size_t layers) {
    if (locality < 1 || layers < 1) {
        throw std::invalid_argument(
            "variance_local requires locality >= 1 and layers >= 1");
    }
    return 1.0 / (4.0 * static_cast<double>(locality) *
                  (static_cast<double>(layers) + 2.0));
}

std::string to_string(VarianceForm form) {
    return form == VarianceForm::theorem ? "theorem" : "approximate";
}

namespace {

double bound_coefficient(double scale, std::size_t sharing,
                         std::size_t layers, double epsilon, double norm_o,
                         VarianceForm form) {
    if (scale == 0.0 || sharing < 1 || layers < 1 || !(epsilon > 0.0) ||
        !(norm_o > 0.0)) {
        throw std::invalid_argument(
            "variance bound requires nonzero scale, sharing >= 1, "
            "layers >= 1, epsilon > 0 and ||O|| > 0");
    }
    const double h = static_cast<double>(sharing);
    const double growth =
        form == VarianceForm::theorem ? 3.0 * h * (h - 1.0) + 1.0 : 3.0 * h * h;
    return scale * scale * epsilon /
           (16.0 * h * h * growth * static_cast<double>(layers) * norm_o *
            norm_o);
}

} // namespace

VarianceBound variance_global(double scale, std::size_t sharing,
                              std::size_t layers, double epsilon,
                              double grad0_sq, double norm_o,
                              VarianceForm form) {
    if (grad0_sq < 0.0) {
        throw std::invalid_argument("grad0_sq must be nonnegative");
    }
    const double c =
        bound_coefficient(scale, sharing, layers, epsilon, norm_o, form);
    if (grad0_sq == 0.0) {
        return {0.0, true};
    }
    return {c * grad0_sq, false};
}

double adaptive_noise_variance(double grad_prev_component_sq,
                               std::size_t sharing, double scale,
                               std::size_t layers, double epsilon,
                               double norm_o, VarianceForm form) {
    if (grad_prev_component_sq < 0.0) {
        throw std::invalid_argument("squared derivative must be nonnegative");
    }
    return bound_coefficient(scale, sharing, layers, epsilon, norm_o, form) *
           grad_prev_component_sq;
}

TheoremVariances theorem_variances(const LossProblem &p, double epsilon,
                                   TargetSelection target, VarianceForm form) {
    const std::size_t n = p.num_params();
    if (n == 0) {
        throw std::invalid_argument("theorem_variances: circuit has no "
                                    "parameters");
    }
    const std::vector<double> zeros(n, 0.0);
    const auto g0 = grad_parameter_shift(p, zeros);

    TheoremVariances out;
    out.norm_o = operator_norm(p.hamiltonian());
    if (target.index) {
        if (*target.index >= n) {
            throw std::invalid_argument("target parameter out of range");
        }
        out.target = *target.index;
        out.grad0_sq = g0[out.target] * g0[out.target];
    } else {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            const double sq = g0[j] * g0[j];
            // Derivatives at rounding level are treated as zero.
            if (sq > 1e-24 && sq < best) {
                best = sq;
                out.target = j;
            }
        }
        out.grad0_sq = std::isfinite(best) ? best : 0.0;
    }
    out.variances.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto b =
            variance_global(p.circuit().scale(j), p.circuit().sharing_count(j),
                            n, epsilon, out.grad0_sq, out.norm_o, form);
        out.variances[j] = b.value;
        out.degenerate = out.degenerate || b.degenerate;
    }
    return out;
}

} // namespace plateau
