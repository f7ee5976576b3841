// Copyright 2026 The adaptpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adaptpf {

/// Largest register a PauliWord can describe (one bit per qubit in a 64-bit
/// mask).
inline constexpr int kMaxQubits = 64;

/**
 * @brief An n-qubit tensor product of Pauli operators in symplectic form.
 *
 * Qubit q carries X when only bit q of the x-mask is set, Z when only bit q of
 * the z-mask is set, and Y when both are set. The operator represented is
 * exactly the tensor product of the single-qubit matrices; no phase is stored.
 */
class PauliWord {
 public:
  /// Identity word on `n_qubits` qubits.
  explicit PauliWord(int n_qubits);
  PauliWord(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses a length-n string over {I, X, Y, Z}; character q acts on qubit q.
  static PauliWord parse(std::string_view text, int n_qubits);

  /// Single-site word with letter `letter` (one of I, X, Y, Z) on `qubit`.
  static PauliWord single(int n_qubits, int qubit, char letter);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }

  /// Number of non-identity sites.
  int weight() const noexcept;
  /// Number of Y sites.
  int y_count() const noexcept;
  bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }

  /// Letter on qubit `q` ('I', 'X', 'Y' or 'Z').
  char letter(int q) const;
  std::string to_string() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  int n_qubits_;
  std::uint64_t x_;
  std::uint64_t z_;
};

/// Exact product p*q = phase * product with phase in {+1, +i, -1, -i}.
struct PauliProduct {
  std::complex<double> phase;
  PauliWord product;
};

PauliProduct multiply(const PauliWord& p, const PauliWord& q);

/// True iff the symplectic inner product of `p` and `q` is even.
bool commutes(const PauliWord& p, const PauliWord& q);

/// Convenience wrapper over PauliWord::parse.
PauliWord parse_word(std::string_view text, int n_qubits);

struct PauliWordHash {
  std::size_t operator()(const PauliWord& w) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(w.x_mask());
    h ^= std::hash<std::uint64_t>{}(w.z_mask()) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(w.n_qubits());
  }
};

struct PauliTerm {
  double coeff;
  PauliWord word;
};

/**
 * @brief Real-weighted Pauli sum H = sum_j a_j P_j.
 *
 * Construction merges duplicate words into the position of their first
 * appearance and drops terms whose merged |coeff| falls below 1e-12. Term
 * order is otherwise preserved; it fixes Trotter ordering and tie-breaking.
 */
class Hamiltonian {
 public:
  static constexpr double kDropTolerance = 1e-12;

  Hamiltonian(int n_qubits, const std::vector<PauliTerm>& terms);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const PauliTerm& operator[](std::size_t j) const { return terms_[j]; }

  /// Sum of |a_j|.
  double weight_sum() const noexcept;

  /// Same words, every coefficient multiplied by `factor` (nonzero).
  Hamiltonian scaled(double factor) const;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

}  // namespace adaptpf
