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
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "adaptpf/pauli.hpp"

namespace adaptpf {

/// Raw amplitude buffer. Basis index bit q holds the state of qubit q.
using Amplitudes = Eigen::VectorXcd;

/// Largest register the dense eigendecomposition oracle accepts.
inline constexpr int kMaxDenseQubits = 14;

/// Largest register a StateVector may hold.
inline constexpr int kMaxStateQubits = 30;

/**
 * @brief Normalized pure state on n qubits.
 *
 * Operations return new values; a StateVector is never mutated behind a
 * shared reference.
 */
class StateVector {
 public:
  /// Computational basis state |index>.
  static StateVector basis(int n_qubits, std::uint64_t index);

  /// Product state from a bitstring; character q is the value of qubit q.
  static StateVector from_bitstring(std::string_view bits);

  /// Wraps `amps`, which must have length 2^n and unit norm within 1e-8.
  static StateVector from_amplitudes(int n_qubits, Amplitudes amps);

  int n_qubits() const noexcept { return n_qubits_; }
  const Amplitudes& amps() const noexcept { return amps_; }
  Eigen::Index dim() const noexcept { return amps_.size(); }

 private:
  StateVector(int n_qubits, Amplitudes amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  Amplitudes amps_;
};

/// P|psi> for an arbitrary (possibly unnormalized) vector.
Amplitudes apply_pauli(const PauliWord& p, const Amplitudes& psi);
StateVector apply_pauli(const PauliWord& p, const StateVector& psi);

/// psi <- exp(-i theta P) psi, in place.
void rotate_in_place(const PauliWord& p, double theta, Amplitudes& psi);

/// exp(-i theta P)|psi> = cos(theta)|psi> - i sin(theta) P|psi>.
StateVector apply_pauli_rotation(const PauliWord& p, double theta,
                                 const StateVector& psi);

/// sum_j a_j P_j |psi>, left unnormalized.
Amplitudes apply_hamiltonian(const Hamiltonian& h, const Amplitudes& psi);
Amplitudes apply_hamiltonian(const Hamiltonian& h, const StateVector& psi);

/// <phi|psi>, conjugating the first argument.
std::complex<double> inner(const Amplitudes& phi, const Amplitudes& psi);
std::complex<double> inner(const StateVector& phi, const StateVector& psi);

struct EnergyMoments {
  double mean;    ///< <H>
  double second;  ///< <H^2> = ||H psi||^2
};

EnergyMoments expect_h_and_h2(const Hamiltonian& h, const StateVector& psi);

/// Dense 2^n x 2^n matrix of `h` (n <= kMaxDenseQubits).
Eigen::MatrixXcd dense_matrix(const Hamiltonian& h);

/**
 * @brief exp(-iHt) through a Hermitian eigendecomposition of the dense
 * Hamiltonian, computed once and reused for any number of times and states.
 *
 * This is the reference propagator; it shares no code with the rotation
 * kernels it is used to validate.
 */
class ExactPropagator {
 public:
  explicit ExactPropagator(const Hamiltonian& h);

  StateVector evolve(double t, const StateVector& psi) const;

  /// Ascending eigenvalues of H.
  const Eigen::VectorXd& eigenvalues() const noexcept { return evals_; }
  int n_qubits() const noexcept { return n_qubits_; }

 private:
  int n_qubits_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

StateVector exact_evolve(const Hamiltonian& h, double t,
                         const StateVector& psi);

}  // namespace adaptpf
