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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "plateau/state.hpp"

namespace plateau {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void expect_amps(const StateVector &s, const std::vector<cplx> &want,
                 double tol = 1e-12) {
    ASSERT_EQ(s.dim(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(s[i].real(), want[i].real(), tol) << "index " << i;
        EXPECT_NEAR(s[i].imag(), want[i].imag(), tol) << "index " << i;
    }
}

StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    return StateVector(n, oracle::random_state(n, rng));
}

TEST(BasisState, SingleQubitZero) {
    const int bits[] = {0};
    expect_amps(basis_state(1, bits), {1.0, 0.0});
}

TEST(BasisState, QubitZeroIsLeastSignificantBit) {
    const int bits[] = {1, 0};
    // Qubit 0 set -> index 1.
    expect_amps(basis_state(2, bits), {0.0, 1.0, 0.0, 0.0});
}

TEST(BasisState, HartreeFockFourOrbitals) {
    const int bits[] = {1, 1, 0, 0};
    const auto s = basis_state(4, bits);
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_EQ(s[i], cplx(i == 0b0011 ? 1.0 : 0.0));
    }
}

TEST(BasisState, RejectsLengthMismatchAndBadBits) {
    const int short_bits[] = {1};
    EXPECT_THROW(basis_state(2, short_bits), std::invalid_argument);
    const int bad[] = {2, 0};
    EXPECT_THROW(basis_state(2, bad), std::invalid_argument);
}

TEST(StateVector, ConstructionLimits) {
    EXPECT_THROW(StateVector(0), std::invalid_argument);
    EXPECT_THROW(StateVector(kMaxQubits + 1), std::invalid_argument);
    EXPECT_THROW(StateVector(1, {1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector(2, {1.0, 0.0}), std::invalid_argument);
    const StateVector s(3);
    EXPECT_EQ(s.dim(), 8U);
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
}

TEST(Apply1q, PauliXFlips) {
    StateVector s(1);
    s.apply_1q(0, gates::pauli_x());
    expect_amps(s, {0.0, 1.0});
}

TEST(Apply1q, RyQuarterPi) {
    StateVector s(1);
    s.apply_1q(0, gates::ry(std::numbers::pi / 4));
    expect_amps(s, {kInvSqrt2, kInvSqrt2});
}

TEST(Apply1q, IdentityOnSecondQubit) {
    StateVector s(2);
    s.apply_1q(1, gates::identity());
    expect_amps(s, {1.0, 0.0, 0.0, 0.0});
}

TEST(Apply1q, ActsOnTheNamedBit) {
    StateVector s(3);
    s.apply_1q(2, gates::pauli_x());
    EXPECT_EQ(s[4], cplx(1.0));
}

TEST(Apply1q, Errors) {
    StateVector s(2);
    EXPECT_THROW(s.apply_1q(2, gates::pauli_x()), std::out_of_range);
    Matrix2 bad = gates::identity();
    bad(0, 0) = 2.0;
    EXPECT_THROW(s.apply_1q(0, bad, Check::unitary), std::invalid_argument);
}

TEST(Apply2q, CzPhasesElevenState) {
    const int bits[] = {1, 1};
    auto s = basis_state(2, bits);
    s.apply_2q(0, 1, gates::cz());
    expect_amps(s, {0.0, 0.0, 0.0, -1.0});
}

TEST(Apply2q, SqrtIswapFixesZeroZero) {
    StateVector s(2);
    s.apply_2q(0, 1, gates::sqrt_iswap());
    expect_amps(s, {1.0, 0.0, 0.0, 0.0});
}

TEST(Apply2q, SqrtIswapMixesSingleExcitation) {
    const int bits[] = {0, 1}; // qubit 1 set
    auto s = basis_state(2, bits);
    s.apply_2q(0, 1, gates::sqrt_iswap());
    expect_amps(s, {0.0, cplx(0.0, kInvSqrt2), kInvSqrt2, 0.0});
}

TEST(Apply2q, QubitAIsHighBitOfLocalIndex) {
    // kron(X, I) on (a, b) flips a only.
    StateVector s(3);
    s.apply_2q(2, 0, kron(gates::pauli_x(), gates::identity()));
    EXPECT_EQ(s[4], cplx(1.0));
}

TEST(Apply2q, Errors) {
    StateVector s(2);
    EXPECT_THROW(s.apply_2q(0, 0, gates::cz()), std::invalid_argument);
    EXPECT_THROW(s.apply_2q(0, 2, gates::cz()), std::out_of_range);
    EXPECT_THROW(s.apply_cz(1, 1), std::invalid_argument);
    Matrix4 bad = gates::identity4();
    bad(3, 3) = 0.5;
    EXPECT_THROW(s.apply_2q(0, 1, bad, Check::unitary), std::invalid_argument);
}

TEST(Apply2q, MatchesDenseKroneckerOracle) {
    std::mt19937_64 rng(11);
    const Matrix4 u = gates::sqrt_iswap() *
                      kron(gates::rx(0.3), gates::ry(-1.1)) * gates::cz();
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            if (a == b) {
                continue;
            }
            auto psi = random_state(3, rng);
            std::vector<cplx> v(psi.amplitudes().begin(),
                                psi.amplitudes().end());
            psi.apply_2q(a, b, u);
            // Direct index arithmetic: out[i] = sum u(r, c) in[j].
            std::vector<cplx> want(8);
            for (std::size_t i = 0; i < 8; ++i) {
                const std::size_t r = 2 * ((i >> a) & 1) + ((i >> b) & 1);
                for (std::size_t c = 0; c < 4; ++c) {
                    std::size_t j = i & ~((std::size_t{1} << a) |
                                          (std::size_t{1} << b));
                    j |= ((c >> 1) & 1) << a;
                    j |= (c & 1) << b;
                    want[i] += u(r, c) * v[j];
                }
            }
            expect_amps(psi, want);
        }
    }
}

TEST(InnerProduct, Examples) {
    const StateVector zero(1);
    const int one_bits[] = {1};
    const auto one = basis_state(1, one_bits);
    StateVector plus(1);
    plus.apply_1q(0, gates::hadamard());
    EXPECT_NEAR(std::abs(inner_product(zero, zero) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(zero, one)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(plus, zero) - kInvSqrt2), 0.0, 1e-15);
    EXPECT_THROW(inner_product(zero, StateVector(2)), std::invalid_argument);
}

TEST(Gates, AllStandardGatesAreUnitary) {
    for (double t : {0.0, 0.4, -2.3}) {
        EXPECT_TRUE(is_unitary(gates::rx(t)));
        EXPECT_TRUE(is_unitary(gates::ry(t)));
        EXPECT_TRUE(is_unitary(gates::rz(t)));
    }
    EXPECT_TRUE(is_unitary(gates::hadamard()));
    EXPECT_TRUE(is_unitary(gates::cz()));
    EXPECT_TRUE(is_unitary(gates::sqrt_iswap()));
    const Matrix4 s2 = gates::sqrt_iswap() * gates::sqrt_iswap();
    // iSWAP: |01> -> i|10>.
    EXPECT_NEAR(std::abs(s2(2, 1) - cplx(0.0, 1.0)), 0.0, 1e-15);
}

TEST(Property, NormPreservedUnderRandomGateSequences) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ang(-4.0, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 6;
        auto s = random_state(n, rng);
        for (int g = 0; g < 200; ++g) {
            const std::size_t q = rng() % n;
            switch (rng() % 5) {
            case 0:
                s.apply_1q(q, gates::rx(ang(rng)));
                break;
            case 1:
                s.apply_1q(q, gates::ry(ang(rng)) * gates::rz(ang(rng)));
                break;
            case 2:
                s.apply_1q(q, gates::hadamard());
                break;
            default:
                if (n >= 2) {
                    const std::size_t b = (q + 1 + rng() % (n - 1)) % n;
                    s.apply_2q(q, b, gates::sqrt_iswap());
                    s.apply_cz(b, q);
                }
            }
        }
        EXPECT_NEAR(s.norm(), 1.0, 1e-10);
    }
}

TEST(Property, CzCommutesWithZOnEitherQubit) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        for (std::size_t q : {0, 1}) {
            auto a = random_state(3, rng);
            auto b = a;
            a.apply_cz(0, 1);
            a.apply_1q(q, gates::pauli_z());
            b.apply_1q(q, gates::pauli_z());
            b.apply_2q(0, 1, gates::cz());
            EXPECT_NEAR(std::abs(inner_product(a, b) - 1.0), 0.0, 1e-12);
        }
    }
}

TEST(Property, CzConjugationFixesDiagonalPaulis) {
    for (int a : {0, 3}) {
        for (int b : {0, 3}) {
            const Matrix4 sigma = kron(gates::pauli(a), gates::pauli(b));
            const Matrix4 conj = gates::cz() * sigma * adjoint(gates::cz());
            EXPECT_LE(max_abs_diff(conj, sigma), 1e-14) << a << "," << b;
        }
    }
    // An off-diagonal Pauli is not fixed.
    const Matrix4 x0 = kron(gates::pauli_x(), gates::identity());
    EXPECT_GT(max_abs_diff(gates::cz() * x0 * adjoint(gates::cz()), x0), 0.5);
}

} // namespace
} // namespace plateau
