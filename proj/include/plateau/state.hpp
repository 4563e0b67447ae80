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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace plateau {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 20;

/// Row-major 2x2 complex matrix.
struct Matrix2 {
    std::array<cplx, 4> m{};

    cplx &operator()(std::size_t r, std::size_t c) { return m[2 * r + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return m[2 * r + c];
    }
};

/// Row-major 4x4 complex matrix acting on an ordered qubit pair (a, b).
/// The local basis index is 2*bit(a) + bit(b), so qubit a is the high bit
/// (the textbook |ab> ordering).
struct Matrix4 {
    std::array<cplx, 16> m{};

    cplx &operator()(std::size_t r, std::size_t c) { return m[4 * r + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return m[4 * r + c];
    }
};

Matrix2 operator*(const Matrix2 &a, const Matrix2 &b);
Matrix4 operator*(const Matrix4 &a, const Matrix4 &b);
Matrix2 adjoint(const Matrix2 &u);
Matrix4 adjoint(const Matrix4 &u);
/// Kronecker product; `hi` acts on the high bit of the 4x4 basis.
Matrix4 kron(const Matrix2 &hi, const Matrix2 &lo);

/// Largest elementwise modulus of a - b.
double max_abs_diff(const Matrix2 &a, const Matrix2 &b);
double max_abs_diff(const Matrix4 &a, const Matrix4 &b);

bool is_unitary(const Matrix2 &u, double tol = 1e-12);
bool is_unitary(const Matrix4 &u, double tol = 1e-12);

namespace gates {
Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 hadamard();
Matrix2 pauli(int index); // 0=I, 1=X, 2=Y, 3=Z
/// e^{-i angle X}; the half-angle-free convention used throughout.
Matrix2 rx(double angle);
Matrix2 ry(double angle);
Matrix2 rz(double angle);
Matrix4 identity4();
Matrix4 cz();
Matrix4 sqrt_iswap();
} // namespace gates

enum class Check { none, unitary };

/// Dense pure state of N qubits. Qubit k is bit k of the amplitude index.
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits);
    /// Takes ownership of explicit amplitudes; they must be normalized.
    StateVector(std::size_t num_qubits, std::vector<cplx> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const { return amps_; }
    [[nodiscard]] const cplx &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] double norm() const;

    void apply_1q(std::size_t qubit, const Matrix2 &u,
                  Check check = Check::none);
    void apply_2q(std::size_t qubit_a, std::size_t qubit_b, const Matrix4 &u,
                  Check check = Check::none);
    /// Diagonal CZ fast path; identical to apply_2q with gates::cz().
    void apply_cz(std::size_t qubit_a, std::size_t qubit_b);

  private:
    std::size_t num_qubits_;
    std::vector<cplx> amps_;
};

/// Computational basis state; bits[k] is the value of qubit k.
StateVector basis_state(std::size_t num_qubits, std::span<const int> bits);

/// <a|b>.
cplx inner_product(const StateVector &a, const StateVector &b);

} // namespace plateau
