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
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "plateau/bounds.hpp"
#include "plateau/optimize.hpp"

namespace plateau {
namespace {

OptimizerConfig make(OptimizerConfig::Kind kind, double lr) {
    OptimizerConfig c;
    c.kind = kind;
    c.learning_rate = lr;
    return c;
}

LossProblem small_problem() {
    Hamiltonian h;
    h.add_term(1.0, PauliString::from_letters("ZI"));
    h.add_term(0.5, PauliString::from_letters("XX"));
    return LossProblem(hardware_efficient(2, 1, {}, ring_pairs(2)), h,
                       StateVector(2));
}

TEST(GradientDescent, Examples) {
    Optimizer opt(make(OptimizerConfig::Kind::gd, 0.1), 2);
    std::vector<double> p{1.0, -1.0};
    opt.step(p, std::vector<double>{2.0, -4.0});
    EXPECT_DOUBLE_EQ(p[0], 0.8);
    EXPECT_DOUBLE_EQ(p[1], -0.6);
    std::vector<double> q{0.5};
    Optimizer one(make(OptimizerConfig::Kind::gd, 0.01), 1);
    one.step(q, std::vector<double>{0.0});
    EXPECT_EQ(q[0], 0.5);
    EXPECT_THROW(one.step(q, std::vector<double>{0.0, 1.0}),
                 std::invalid_argument);
}

TEST(Momentum, AccumulatesVelocity) {
    auto c = make(OptimizerConfig::Kind::momentum, 0.1);
    c.momentum = 0.5;
    Optimizer opt(c, 1);
    std::vector<double> p{0.0};
    opt.step(p, std::vector<double>{1.0});
    EXPECT_DOUBLE_EQ(p[0], -0.1);
    opt.step(p, std::vector<double>{1.0});
    EXPECT_DOUBLE_EQ(p[0], -0.1 - 0.1 * 1.5);
}

TEST(Adagrad, FirstStepIsSignTimesRate) {
    Optimizer opt(make(OptimizerConfig::Kind::adagrad, 0.1), 2);
    std::vector<double> p{0.0, 0.0};
    opt.step(p, std::vector<double>{3.0, -0.5});
    EXPECT_NEAR(p[0], -0.1, 1e-8);
    EXPECT_NEAR(p[1], 0.1, 1e-7);
}

// Values from a direct numpy transcription of the bias-corrected update.
TEST(Adam, FrozenTwoStepOracle) {
    Optimizer opt(make(OptimizerConfig::Kind::adam, 0.1), 2);
    std::vector<double> p{0.3, -0.2};
    opt.step(p, std::vector<double>{0.5, -2.0});
    EXPECT_NEAR(p[0], 0.20000000199999995, 1e-15);
    EXPECT_NEAR(p[1], -0.1000000005, 1e-15);
    opt.step(p, std::vector<double>{-0.1, 1.0});
    EXPECT_NEAR(p[0], 0.14889739569932386, 1e-14);
    EXPECT_NEAR(p[1], -0.07336629670243155, 1e-14);
}

TEST(OptimizerConfig, Validation) {
    auto c = make(OptimizerConfig::Kind::gd, 0.0);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = make(OptimizerConfig::Kind::momentum, 0.1);
    c.momentum = 1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = make(OptimizerConfig::Kind::adam, 0.1);
    c.beta2 = 1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.beta2 = 0.0;
    EXPECT_NO_THROW(c.validate());
    EXPECT_THROW(parse_optimizer_kind("sgd2"), std::invalid_argument);
    for (auto k :
         {OptimizerConfig::Kind::gd, OptimizerConfig::Kind::momentum,
          OptimizerConfig::Kind::nag, OptimizerConfig::Kind::adagrad,
          OptimizerConfig::Kind::adam}) {
        EXPECT_EQ(parse_optimizer_kind(to_string(k)), k);
    }
}

class Reductions : public ::testing::TestWithParam<OptimizerConfig::Kind> {};

// Momentum and NAG with beta 0 are plain gradient descent.
TEST_P(Reductions, ZeroMomentumIsGradientDescent) {
    auto c = make(GetParam(), 0.05);
    c.momentum = 0.0;
    Optimizer a(c, 3);
    Optimizer gd(make(OptimizerConfig::Kind::gd, 0.05), 3);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    std::vector<double> p{0.1, 0.2, 0.3};
    std::vector<double> q = p;
    for (int k = 0; k < 20; ++k) {
        const std::vector<double> grad{g(rng), g(rng), g(rng)};
        a.step(p, grad);
        gd.step(q, grad);
    }
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(p[j], q[j], 1e-15);
    }
}

INSTANTIATE_TEST_SUITE_P(Optimizers, Reductions,
                         ::testing::Values(OptimizerConfig::Kind::momentum,
                                           OptimizerConfig::Kind::nag));

TEST(Property, AdamWithZeroBetasIsNormalizedSign) {
    auto c = make(OptimizerConfig::Kind::adam, 0.01);
    c.beta1 = 0.0;
    c.beta2 = 0.0;
    Optimizer opt(c, 2);
    std::vector<double> p{0.0, 0.0};
    opt.step(p, std::vector<double>{4.0, -0.25});
    EXPECT_NEAR(p[0], -0.01, 1e-10);
    EXPECT_NEAR(p[1], 0.01, 1e-9);
}

TEST(Property, DescentStepsReduceLossForSmallRate) {
    const auto p = small_problem();
    std::vector<double> th(p.num_params(), 0.4);
    Optimizer opt(make(OptimizerConfig::Kind::gd, 1e-3), p.num_params());
    double prev = loss(p, th);
    for (int k = 0; k < 20; ++k) {
        opt.step(th, grad_parameter_shift(p, th));
        const double now = loss(p, th);
        EXPECT_LE(now, prev + 1e-15);
        prev = now;
    }
}

TEST(Noise, ConstantVarianceStatistics) {
    const std::vector<double> grad(4, 1.0);
    const auto noise = NoiseModel::constant(0.04);
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t n = 0;
    for (std::uint64_t s = 0; s < 20000; ++s) {
        const auto pg = perturb_gradient(grad, noise, grad, s);
        for (double v : pg.values) {
            sum += v - 1.0;
            sum_sq += (v - 1.0) * (v - 1.0);
            ++n;
        }
        ASSERT_EQ(pg.variances, std::vector<double>(4, 0.04));
    }
    const double mean = sum / static_cast<double>(n);
    EXPECT_NEAR(mean, 0.0, 5e-3);
    EXPECT_NEAR(sum_sq / static_cast<double>(n) - mean * mean, 0.04, 2e-3);
    EXPECT_THROW(NoiseModel::constant(-1.0), std::invalid_argument);
}

TEST(Noise, NoneIsExact) {
    const std::vector<double> grad{0.3, -0.7};
    const auto pg = perturb_gradient(grad, NoiseModel::none(), grad, 5);
    EXPECT_EQ(pg.values, grad);
}

TEST(Noise, AdaptiveVarianceMatchesBoundExactly) {
    const auto p = givens_test_problem();
    const auto ctx = NoiseContext::from_problem(p);
    EXPECT_EQ(ctx.layers, 3U);
    EXPECT_EQ(ctx.sharing, (std::vector<std::size_t>{2, 2, 2}));
    const std::vector<double> prev{0.8, -0.2, 0.0};
    const auto v = noise_variances(NoiseModel::adaptive(0.5), prev, ctx);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(v[j], adaptive_noise_variance(prev[j] * prev[j], 2, 2.0, 3,
                                                0.5, ctx.norm_o));
    }
    EXPECT_EQ(v[2], 0.0);
    EXPECT_THROW(noise_variances(NoiseModel::adaptive(0.5), prev, {}),
                 std::invalid_argument);
}

TEST(Train, RecordsInitialPointAndEveryStep) {
    const auto p = small_problem();
    const auto tr = train(p, InitStrategy::zero(),
                          make(OptimizerConfig::Kind::gd, 0.01),
                          NoiseModel::none(), 5, 1);
    ASSERT_EQ(tr.records.size(), 6U);
    EXPECT_EQ(tr.records[0].iteration, 0U);
    EXPECT_EQ(tr.records[5].iteration, 5U);
}

TEST(Train, IterationZeroLossMatchesInitialParameters) {
    const auto p = small_problem();
    const auto tr = train(p, InitStrategy::gaussian(0.5),
                          make(OptimizerConfig::Kind::adam, 0.05),
                          NoiseModel::constant(0.01), 10, 7);
    EXPECT_EQ(tr.initial_params,
              sample(InitStrategy::gaussian(0.5), p.num_params(),
                     derive_seed(7, 0)));
    EXPECT_EQ(tr.records[0].loss, loss(p, tr.initial_params));
    EXPECT_EQ(tr.records.back().loss, loss(p, tr.final_params));
}

TEST(Property, TrainingIsDeterministic) {
    const auto p = small_problem();
    for (auto noise : {NoiseModel::none(), NoiseModel::constant(0.02),
                       NoiseModel::adaptive(0.5)}) {
        const auto a = train(p, InitStrategy::uniform(), OptimizerConfig{},
                             noise, 15, 3);
        const auto b = train(p, InitStrategy::uniform(), OptimizerConfig{},
                             noise, 15, 3);
        EXPECT_EQ(trace_to_csv(a), trace_to_csv(b));
        EXPECT_EQ(a.params_digest(), b.params_digest());
    }
}

TEST(TraceCsv, HeaderAndFormatting) {
    TrainTrace t;
    t.records.push_back({0, -1.5, 0.25, 0.0});
    t.records.push_back({1, 0.1, 2.0, 0.5});
    EXPECT_EQ(trace_to_csv(t),
              "iteration,loss,grad_norm,noise_variance,measurements_equiv\n"
              "0,-1.5,0.25,0,inf\n"
              "1,0.1,2,0.5,2\n");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(format_double(0.1 + 0.2), "0.30000000000000004");
}

TEST(ParamsDigest, SixteenHexDigits) {
    TrainTrace t;
    t.final_params = {1.0, 2.0};
    const auto d = t.params_digest();
    EXPECT_EQ(d.size(), 16U);
    t.final_params[1] = 2.0000000000000004;
    EXPECT_NE(t.params_digest(), d);
}

} // namespace
} // namespace plateau
