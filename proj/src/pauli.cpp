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
#include "plateau/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

namespace plateau {

namespace {

constexpr double kImagTolerance = 1e-10;

// i^k for k mod 4.
cplx i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

// Returns <psi|P|psi> without dropping the imaginary part.
cplx raw_expectation(std::span<const cplx> psi, const PauliString &p) {
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    cplx acc{0.0};
    for (std::size_t x = 0; x < psi.size(); ++x) {
        const cplx term = std::conj(psi[x ^ flip]) * psi[x];
        if (std::popcount(x & sign) & 1U) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return acc * i_pow(p.num_y());
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Eigen::MatrixXcd dense(const Hamiltonian &h) {
    const std::size_t n = h.num_qubits();
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense diagonalization limited to " +
            std::to_string(kMaxDenseQubits) + " qubits, got " +
            std::to_string(n));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        const std::uint64_t flip = t.string.flip_mask();
        const std::uint64_t sign = t.string.sign_mask();
        const cplx phase = t.coefficient * i_pow(t.string.num_y());
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(dim); ++x) {
            const double s = (std::popcount(x & sign) & 1U) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(x ^ flip),
              static_cast<Eigen::Index>(x)) += s * phase;
        }
    }
    return m;
}

} // namespace

PauliString::PauliString(std::vector<int> indices)
    : indices_(std::move(indices)) {
    if (indices_.empty() || indices_.size() > kMaxQubits) {
        throw std::invalid_argument("PauliString length must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    for (int i : indices_) {
        if (i < 0 || i > 3) {
            throw std::invalid_argument(
                "Pauli index must be in {0,1,2,3}, got " + std::to_string(i));
        }
    }
}

PauliString PauliString::from_letters(std::string_view letters) {
    std::vector<int> idx;
    idx.reserve(letters.size());
    for (char c : letters) {
        switch (c) {
        case 'I':
            idx.push_back(0);
            break;
        case 'X':
            idx.push_back(1);
            break;
        case 'Y':
            idx.push_back(2);
            break;
        case 'Z':
            idx.push_back(3);
            break;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                        c + "'");
        }
    }
    return PauliString(std::move(idx));
}

std::size_t PauliString::locality() const {
    return static_cast<std::size_t>(
        std::count_if(indices_.begin(), indices_.end(),
                      [](int i) { return i != 0; }));
}

std::string PauliString::letters() const {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::string out;
    out.reserve(indices_.size());
    for (int i : indices_) {
        out.push_back(kLetters[i]);
    }
    return out;
}

std::uint64_t PauliString::flip_mask() const {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] == 1 || indices_[k] == 2) {
            m |= std::uint64_t{1} << k;
        }
    }
    return m;
}

std::uint64_t PauliString::sign_mask() const {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] == 2 || indices_[k] == 3) {
            m |= std::uint64_t{1} << k;
        }
    }
    return m;
}

int PauliString::num_y() const {
    return static_cast<int>(std::count(indices_.begin(), indices_.end(), 2));
}

Hamiltonian::Hamiltonian(std::vector<PauliTerm> terms) {
    for (auto &t : terms) {
        add_term(t.coefficient, std::move(t.string));
    }
}

void Hamiltonian::add_term(double coefficient, PauliString string) {
    if (string.num_qubits() == 0) {
        throw std::invalid_argument("Pauli string must be non-empty");
    }
    if (!terms_.empty() && string.num_qubits() != num_qubits_) {
        throw std::invalid_argument(
            "all Pauli strings in a Hamiltonian must share one length");
    }
    num_qubits_ = string.num_qubits();
    terms_.push_back({coefficient, std::move(string)});
}

double Hamiltonian::spectral_norm_bound() const {
    double s = 0.0;
    for (const auto &t : terms_) {
        s += std::abs(t.coefficient);
    }
    return s;
}

double expectation_pauli(const StateVector &state, const PauliString &p) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("expectation_pauli: dimension mismatch");
    }
    const cplx v = raw_expectation(state.amplitudes(), p);
    if (std::abs(v.imag()) > kImagTolerance) {
        throw std::logic_error("expectation_pauli: imaginary residue " +
                               std::to_string(v.imag()));
    }
    return v.real();
}

double expectation_hamiltonian(const StateVector &state,
                               const Hamiltonian &h) {
    if (h.empty()) {
        return 0.0;
    }
    if (h.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument(
            "expectation_hamiltonian: dimension mismatch");
    }
    double total = 0.0;
    for (const auto &t : h.terms()) {
        total += t.coefficient * expectation_pauli(state, t.string);
    }
    return total;
}

Hamiltonian heisenberg(std::size_t num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("heisenberg requires at least 2 qubits");
    }
    Hamiltonian h;
    for (std::size_t i = 0; i + 1 < num_qubits; ++i) {
        for (int p = 1; p <= 3; ++p) {
            std::vector<int> idx(num_qubits, 0);
            idx[i] = p;
            idx[i + 1] = p;
            h.add_term(1.0, PauliString(std::move(idx)));
        }
    }
    return h;
}

Hamiltonian toy_electron_conserving(std::size_t num_orbitals) {
    if (num_orbitals < 2) {
        throw std::invalid_argument(
            "toy_electron_conserving requires at least 2 orbitals");
    }
    const std::size_t n = num_orbitals;
    auto single = [n](std::size_t q, int p) {
        std::vector<int> idx(n, 0);
        idx[q] = p;
        return PauliString(std::move(idx));
    };
    auto pair = [n](std::size_t a, std::size_t b, int p) {
        std::vector<int> idx(n, 0);
        idx[a] = p;
        idx[b] = p;
        return PauliString(std::move(idx));
    };
    Hamiltonian h;
    for (std::size_t i = 0; i < n; ++i) {
        h.add_term(0.6 - 0.2 * static_cast<double>(i), single(i, 3));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h.add_term(0.1, pair(i, i + 1, 3));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h.add_term(-0.2, pair(i, i + 1, 1));
        h.add_term(-0.2, pair(i, i + 1, 2));
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        h.add_term(-0.05, pair(i, i + 2, 1));
        h.add_term(-0.05, pair(i, i + 2, 2));
    }
    return h;
}

std::size_t max_locality(const Hamiltonian &h) {
    if (h.empty()) {
        throw std::invalid_argument("max_locality: empty Hamiltonian");
    }
    std::size_t best = 0;
    for (const auto &t : h.terms()) {
        best = std::max(best, t.string.locality());
    }
    return best;
}

Hamiltonian load_hamiltonian(std::string_view text) {
    Hamiltonian h;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = (nl == std::string_view::npos) ? std::string_view{}
                                              : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw ParseError(line_no,
                             "expected '<coefficient> <pauli-letters>'");
        }
        const std::string_view coeff_text = line.substr(0, sep);
        const std::string_view letters = trim(line.substr(sep + 1));
        double coeff = 0.0;
        const auto [ptr, ec] = std::from_chars(
            coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
        if (ec != std::errc{} ||
            ptr != coeff_text.data() + coeff_text.size() ||
            !std::isfinite(coeff)) {
            throw ParseError(line_no, "invalid coefficient '" +
                                          std::string(coeff_text) + "'");
        }
        if (letters.empty() ||
            letters.find_first_not_of("IXYZ") != std::string_view::npos) {
            throw ParseError(line_no, "invalid Pauli letters '" +
                                          std::string(letters) + "'");
        }
        if (!h.empty() && letters.size() != h.num_qubits()) {
            throw ParseError(line_no,
                             "inconsistent Pauli string length " +
                                 std::to_string(letters.size()) +
                                 ", expected " +
                                 std::to_string(h.num_qubits()));
        }
        if (letters.size() > kMaxQubits) {
            throw ParseError(line_no, "Pauli string longer than " +
                                          std::to_string(kMaxQubits));
        }
        h.add_term(coeff, PauliString::from_letters(letters));
    }
    return h;
}

Hamiltonian load_hamiltonian_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open Hamiltonian file '" + path +
                                 "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return load_hamiltonian(ss.str());
}

std::string format_hamiltonian(const Hamiltonian &h) {
    std::string out;
    for (const auto &t : h.terms()) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), t.coefficient);
        out.append(buf, res.ptr);
        out.push_back(' ');
        out += t.string.letters();
        out.push_back('\n');
    }
    return out;
}

std::vector<cplx> dense_matrix(const Hamiltonian &h) {
    const Eigen::MatrixXcd m = dense(h);
    std::vector<cplx> out(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
        }
    }
    return out;
}

Spectrum spectrum_extremes(const Hamiltonian &h) {
    if (h.empty()) {
        throw std::invalid_argument("spectrum of an empty Hamiltonian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        dense(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    const auto &ev = solver.eigenvalues();
    return {ev.minCoeff(), ev.maxCoeff()};
}

double exact_ground_energy(const Hamiltonian &h) {
    return spectrum_extremes(h).min;
}

double operator_norm(const Hamiltonian &h) {
    if (h.empty()) {
        return 0.0;
    }
    if (h.num_qubits() > kMaxDenseQubits) {
        return h.spectral_norm_bound();
    }
    const auto s = spectrum_extremes(h);
    return std::max(std::abs(s.min), std::abs(s.max));
}

} // namespace plateau
