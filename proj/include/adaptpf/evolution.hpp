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
#include <functional>
#include <optional>
#include <vector>

#include "adaptpf/adaptive.hpp"
#include "adaptpf/pauli.hpp"
#include "adaptpf/statevector.hpp"

namespace adaptpf {

struct EvolutionConfig {
  double total_time = 1.0;
  double dt = 5e-3;
  double delta_cut = 1e-4;
  /// Track |<exact|approx>|^2 at every record (dense oracle, n <= 14).
  bool record_fidelity = false;
  /// Cap on appends per growth event; 0 means the number of Hamiltonian terms.
  int max_growths_per_step = 0;

  /// Throws ConfigError unless dt > 0, dt <= total_time, delta_cut > 0 and
  /// total_time / dt is an integer within 1e-9.
  void validate() const;
  int step_count() const;
};

struct StepRecord {
  double t = 0.0;
  double delta = 0.0;        ///< Delta with re-optimized lambda, before growth
  double delta_after = 0.0;  ///< Delta after any growth at this time
  int ansatz_size = 0;
  std::int64_t cnot_count = 0;
  std::optional<double> fidelity;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// One record per t = 0, dt, ..., T. The record at t describes the circuit
/// that prepares Psi(t) and the Delta of the step leaving t.
struct EvolutionTrace {
  EvolutionConfig config;
  std::vector<StepRecord> records;
  Ansatz final_ansatz;
};

/// Called once per record with the ansatz state at that time.
using EvolutionObserver =
    std::function<void(const StepRecord&, const StateVector&)>;

struct SingleStepResult {
  std::vector<AnsatzOp> ops;  ///< (O_j, lambda_j), applied in order
  StateVector psi_next;
  SolveResult result;
};

/// One step of the stepwise protocol: grow a fresh product on psi_t until
/// Delta <= delta_cut, then apply prod_j exp(-i O_j lambda_j dt).
SingleStepResult adaptive_single_step(const Hamiltonian& h,
                                      const StateVector& psi_t, double dt,
                                      double delta_cut);

/**
 * @brief Jointly optimized adaptive product formula from the empty circuit.
 *
 * Each record re-solves lambda for the whole circuit; when Delta exceeds
 * delta_cut the circuit grows until Delta <= delta_cut / 2, and then every
 * parameter moves by lambda * dt. Operators are never removed.
 */
EvolutionTrace adaptive_evolve(const Hamiltonian& h, const StateVector& psi0,
                               const EvolutionConfig& config,
                               const EvolutionObserver& observer = {});

struct TrotterResult {
  StateVector state;
  std::int64_t cnot_count;
};

/// Called after every Trotter step with the step index (1-based), time and
/// state.
using TrotterObserver =
    std::function<void(int, double, const StateVector&)>;

/// First-order product formula: `steps` repetitions of
/// prod_j exp(-i a_j P_j dt) in Hamiltonian term order.
TrotterResult trotter_evolve(const Hamiltonian& h, const StateVector& psi0,
                             double total_time, int steps,
                             const TrotterObserver& observer = {});

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace adaptpf
