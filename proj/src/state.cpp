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
#include "plateau/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plateau {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_num_qubits(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("num_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n));
    }
}

template <std::size_t D>
std::array<cplx, D * D> matmul(const std::array<cplx, D * D> &a,
                               const std::array<cplx, D * D> &b) {
    std::array<cplx, D * D> out{};
    for (std::size_t r = 0; r < D; ++r) {
        for (std::size_t k = 0; k < D; ++k) {
            const cplx ark = a[D * r + k];
            for (std::size_t c = 0; c < D; ++c) {
                out[D * r + c] += ark * b[D * k + c];
            }
        }
    }
    return out;
}

template <std::size_t D>
std::array<cplx, D * D> dagger(const std::array<cplx, D * D> &a) {
    std::array<cplx, D * D> out{};
    for (std::size_t r = 0; r < D; ++r) {
        for (std::size_t c = 0; c < D; ++c) {
            out[D * c + r] = std::conj(a[D * r + c]);
        }
    }
    return out;
}

template <std::size_t N>
double max_diff(const std::array<cplx, N> &a, const std::array<cplx, N> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

template <std::size_t D>
bool unitary(const std::array<cplx, D * D> &u, double tol) {
    const auto p = matmul<D>(dagger<D>(u), u);
    for (std::size_t r = 0; r < D; ++r) {
        for (std::size_t c = 0; c < D; ++c) {
            const cplx want = (r == c) ? cplx{1.0} : cplx{0.0};
            if (std::abs(p[D * r + c] - want) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

Matrix2 operator*(const Matrix2 &a, const Matrix2 &b) {
    return {matmul<2>(a.m, b.m)};
}
Matrix4 operator*(const Matrix4 &a, const Matrix4 &b) {
    return {matmul<4>(a.m, b.m)};
}
Matrix2 adjoint(const Matrix2 &u) { return {dagger<2>(u.m)}; }
Matrix4 adjoint(const Matrix4 &u) { return {dagger<4>(u.m)}; }

Matrix4 kron(const Matrix2 &hi, const Matrix2 &lo) {
    Matrix4 out;
    for (std::size_t r1 = 0; r1 < 2; ++r1)
        for (std::size_t c1 = 0; c1 < 2; ++c1)
            for (std::size_t r2 = 0; r2 < 2; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2)
                    out(2 * r1 + r2, 2 * c1 + c2) = hi(r1, c1) * lo(r2, c2);
    return out;
}

double max_abs_diff(const Matrix2 &a, const Matrix2 &b) {
    return max_diff(a.m, b.m);
}
double max_abs_diff(const Matrix4 &a, const Matrix4 &b) {
    return max_diff(a.m, b.m);
}

bool is_unitary(const Matrix2 &u, double tol) { return unitary<2>(u.m, tol); }
bool is_unitary(const Matrix4 &u, double tol) { return unitary<4>(u.m, tol); }

namespace gates {

Matrix2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
Matrix2 pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }
Matrix2 pauli_y() { return {{0.0, -kI, kI, 0.0}}; }
Matrix2 pauli_z() { return {{1.0, 0.0, 0.0, -1.0}}; }
Matrix2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, s, s, -s}};
}

Matrix2 pauli(int index) {
    switch (index) {
    case 0:
        return identity();
    case 1:
        return pauli_x();
    case 2:
        return pauli_y();
    case 3:
        return pauli_z();
    default:
        throw std::invalid_argument("pauli index must be in {0,1,2,3}");
    }
}

Matrix2 rx(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {{c, -kI * s, -kI * s, c}};
}

Matrix2 ry(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {{c, -s, s, c}};
}

Matrix2 rz(double angle) {
    return {{std::polar(1.0, -angle), 0.0, 0.0, std::polar(1.0, angle)}};
}

Matrix4 identity4() {
    Matrix4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

Matrix4 cz() {
    Matrix4 out = identity4();
    out(3, 3) = -1.0;
    return out;
}

Matrix4 sqrt_iswap() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4 out = identity4();
    out(1, 1) = s;
    out(1, 2) = kI * s;
    out(2, 1) = kI * s;
    out(2, 2) = s;
    return out;
}

} // namespace gates

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_num_qubits(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_num_qubits(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count must be 2^num_qubits");
    }
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes must have unit L2 norm");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void StateVector::apply_1q(std::size_t qubit, const Matrix2 &u, Check check) {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range");
    }
    if (check == Check::unitary && !is_unitary(u)) {
        throw std::invalid_argument("apply_1q: matrix is not unitary");
    }
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amps_.size();
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i + stride];
            amps_[i] = u00 * a0 + u01 * a1;
            amps_[i + stride] = u10 * a0 + u11 * a1;
        }
    }
}

void StateVector::apply_2q(std::size_t qubit_a, std::size_t qubit_b,
                           const Matrix4 &u, Check check) {
    if (qubit_a >= num_qubits_ || qubit_b >= num_qubits_) {
        throw std::out_of_range("apply_2q: qubit index out of range");
    }
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("apply_2q: qubits must be distinct");
    }
    if (check == Check::unitary && !is_unitary(u)) {
        throw std::invalid_argument("apply_2q: matrix is not unitary");
    }
    const std::size_t ma = std::size_t{1} << qubit_a;
    const std::size_t mb = std::size_t{1} << qubit_b;
    const std::size_t dim = amps_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ma) != 0 || (i & mb) != 0) {
            continue;
        }
        const std::array<std::size_t, 4> idx{i, i | mb, i | ma, i | ma | mb};
        const std::array<cplx, 4> in{amps_[idx[0]], amps_[idx[1]],
                                     amps_[idx[2]], amps_[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            amps_[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] +
                            u(r, 2) * in[2] + u(r, 3) * in[3];
        }
    }
}

void StateVector::apply_cz(std::size_t qubit_a, std::size_t qubit_b) {
    if (qubit_a >= num_qubits_ || qubit_b >= num_qubits_) {
        throw std::out_of_range("apply_cz: qubit index out of range");
    }
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("apply_cz: qubits must be distinct");
    }
    const std::size_t both =
        (std::size_t{1} << qubit_a) | (std::size_t{1} << qubit_b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & both) == both) {
            amps_[i] = -amps_[i];
        }
    }
}

StateVector basis_state(std::size_t num_qubits, std::span<const int> bits) {
    if (bits.size() != num_qubits) {
        throw std::invalid_argument("basis_state: bitstring length " +
                                    std::to_string(bits.size()) +
                                    " does not match num_qubits " +
                                    std::to_string(num_qubits));
    }
    check_num_qubits(num_qubits);
    std::size_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != 0 && bits[k] != 1) {
            throw std::invalid_argument("basis_state: bits must be 0 or 1");
        }
        if (bits[k] == 1) {
            index |= std::size_t{1} << k;
        }
    }
    std::vector<cplx> amps(std::size_t{1} << num_qubits, cplx{0.0});
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cplx s{0.0};
    const auto aa = a.amplitudes();
    const auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) {
        s += std::conj(aa[i]) * bb[i];
    }
    return s;
}

} // namespace plateau
