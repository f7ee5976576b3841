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

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "adaptpf/evolution.hpp"
#include "adaptpf/pauli.hpp"
#include "adaptpf/statevector.hpp"

namespace adaptpf {

/// Subspace span{ exp(+iH n dt_krylov) |Phi_0> : n = 0..m }.
struct KrylovConfig {
  int m = 0;
  double dt_krylov = 0.3;
  /// Overlap eigenvalues at or below s_threshold * max are discarded.
  double s_threshold = 1e-10;

  void validate() const;
};

struct ExactBackend {};

/// Every subspace vector is prepared by its own `steps`-step first-order
/// Trotter circuit.
struct TrotterBackend {
  int steps = 1;
};

/// One adaptive run to m * dt_krylov, snapshotted at multiples of
/// dt_krylov. `config.total_time` is ignored.
struct AdaptiveBackend {
  EvolutionConfig config;
};

using KrylovBackend = std::variant<ExactBackend, TrotterBackend, AdaptiveBackend>;

struct KrylovStates {
  std::vector<StateVector> states;
  /// CNOTs of the deepest circuit used (0 for the exact backend).
  std::int64_t cnot_count = 0;
  std::optional<EvolutionTrace> trace;
};

KrylovStates build_krylov_states(const Hamiltonian& h, const StateVector& phi0,
                                 const KrylovConfig& config,
                                 const KrylovBackend& backend);

struct KrylovMatrices {
  Eigen::MatrixXcd s_matrix;  ///< <Phi_j|Phi_k>
  Eigen::MatrixXcd h_matrix;  ///< <Phi_j|H|Phi_k>
};

KrylovMatrices build_krylov_matrices(const std::vector<StateVector>& states,
                                     const Hamiltonian& h);

struct KrylovSpectrum {
  Eigen::VectorXd energies;  ///< ascending
  int kept_rank = 0;
};

/// Canonical orthogonalization: drop small-overlap directions, then
/// diagonalize S^{-1/2} H S^{-1/2} on what is left.
KrylovSpectrum solve_generalized_eig(const KrylovMatrices& km,
                                     double s_threshold);

struct KrylovResult {
  double energy = 0.0;
  KrylovSpectrum spectrum;
  KrylovMatrices matrices;
  std::int64_t cnot_count = 0;
  std::optional<EvolutionTrace> trace;
};

KrylovResult krylov_ground_energy(const Hamiltonian& h, const StateVector& phi0,
                                  const KrylovConfig& config,
                                  const KrylovBackend& backend);

}  // namespace adaptpf
