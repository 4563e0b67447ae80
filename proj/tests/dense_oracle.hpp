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

// Brute-force dense linear algebra for tests. Deliberately shares no code
// with the library: matrices are built by explicit Kronecker products.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct Dense {
    std::size_t n = 0;
    std::vector<cplx> a; // row-major n x n

    explicit Dense(std::size_t dim) : n(dim), a(dim * dim) {}
    cplx &operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

inline Dense pauli(int k) {
    Dense m(2);
    const cplx i{0.0, 1.0};
    switch (k) {
    case 0:
        m(0, 0) = m(1, 1) = 1.0;
        break;
    case 1:
        m(0, 1) = m(1, 0) = 1.0;
        break;
    case 2:
        m(0, 1) = -i;
        m(1, 0) = i;
        break;
    default:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

inline Dense kron(const Dense &x, const Dense &y) {
    Dense out(x.n * y.n);
    for (std::size_t r1 = 0; r1 < x.n; ++r1)
        for (std::size_t c1 = 0; c1 < x.n; ++c1)
            for (std::size_t r2 = 0; r2 < y.n; ++r2)
                for (std::size_t c2 = 0; c2 < y.n; ++c2)
                    out(r1 * y.n + r2, c1 * y.n + c2) = x(r1, c1) * y(r2, c2);
    return out;
}

inline Dense mul(const Dense &x, const Dense &y) {
    Dense out(x.n);
    for (std::size_t r = 0; r < x.n; ++r)
        for (std::size_t k = 0; k < x.n; ++k)
            for (std::size_t c = 0; c < x.n; ++c)
                out(r, c) += x(r, k) * y(k, c);
    return out;
}

/// Qubit k is bit k of the index, so the last qubit is the leftmost factor.
inline Dense pauli_string(const std::vector<int> &idx) {
    Dense m = pauli(idx.back());
    for (std::size_t k = idx.size() - 1; k-- > 0;) {
        m = kron(m, pauli(idx[k]));
    }
    return m;
}

inline std::vector<cplx> apply(const Dense &m, const std::vector<cplx> &v) {
    std::vector<cplx> out(m.n);
    for (std::size_t r = 0; r < m.n; ++r)
        for (std::size_t c = 0; c < m.n; ++c)
            out[r] += m(r, c) * v[c];
    return out;
}

/// <v|M|v>.
inline cplx expectation(const Dense &m, const std::vector<cplx> &v) {
    const auto mv = apply(m, v);
    cplx s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += std::conj(v[k]) * mv[k];
    }
    return s;
}

inline std::vector<cplx> random_state(std::size_t num_qubits,
                                      std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(std::size_t{1} << num_qubits);
    double n2 = 0.0;
    for (auto &x : v) {
        x = {g(rng), g(rng)};
        n2 += std::norm(x);
    }
    for (auto &x : v) {
        x /= std::sqrt(n2);
    }
    return v;
}

} // namespace oracle
