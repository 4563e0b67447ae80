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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plateau/state.hpp"

namespace plateau {

/// Tensor product of Pauli matrices; indices[k] in {0,1,2,3} = {I,X,Y,Z}
/// acts on qubit k.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<int> indices);
    /// Parses letters over {I,X,Y,Z}; character k acts on qubit k.
    static PauliString from_letters(std::string_view letters);

    [[nodiscard]] std::size_t num_qubits() const { return indices_.size(); }
    [[nodiscard]] const std::vector<int> &indices() const { return indices_; }
    [[nodiscard]] std::size_t locality() const;
    [[nodiscard]] std::string letters() const;

    /// Bits flipped by the string (X or Y positions).
    [[nodiscard]] std::uint64_t flip_mask() const;
    /// Bits contributing a sign (Y or Z positions).
    [[nodiscard]] std::uint64_t sign_mask() const;
    [[nodiscard]] int num_y() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<int> indices_;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

/// Real-weighted sum of Pauli strings on a common number of qubits.
class Hamiltonian {
  public:
    Hamiltonian() = default;
    explicit Hamiltonian(std::vector<PauliTerm> terms);

    void add_term(double coefficient, PauliString string);

    [[nodiscard]] const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    /// 0 for an empty Hamiltonian.
    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    /// Sum of |coefficient|; an upper bound on the spectral norm.
    [[nodiscard]] double spectral_norm_bound() const;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

double expectation_pauli(const StateVector &state, const PauliString &p);
double expectation_hamiltonian(const StateVector &state, const Hamiltonian &h);

/// Nearest-neighbour XX + YY + ZZ chain on N >= 2 qubits.
Hamiltonian heisenberg(std::size_t num_qubits);

/// Number-conserving 2-local test Hamiltonian: Z fields, ZZ couplings and
/// XX + YY flip-flop terms with fixed, non-degenerate coefficients.
Hamiltonian toy_electron_conserving(std::size_t num_orbitals);

std::size_t max_locality(const Hamiltonian &h);

/// Parses `<coefficient> <pauli-letters>` lines; `#` comments and blank
/// lines are skipped. Throws ParseError on malformed input.
Hamiltonian load_hamiltonian(std::string_view text);
Hamiltonian load_hamiltonian_file(const std::string &path);
std::string format_hamiltonian(const Hamiltonian &h);

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Row-major dense 2^N x 2^N matrix (N <= 12).
std::vector<cplx> dense_matrix(const Hamiltonian &h);

/// Smallest and largest eigenvalue of the dense matrix (N <= 12).
struct Spectrum {
    double min = 0.0;
    double max = 0.0;
};
Spectrum spectrum_extremes(const Hamiltonian &h);
double exact_ground_energy(const Hamiltonian &h);

/// Exact spectral norm for N <= 12, sum of |coefficients| above that.
double operator_norm(const Hamiltonian &h);

} // namespace plateau
