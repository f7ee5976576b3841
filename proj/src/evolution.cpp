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

#include "adaptpf/evolution.hpp"

#include <cmath>
#include <string>

#include "adaptpf/errors.hpp"
#include "adaptpf/models_io.hpp"

namespace adaptpf {

void EvolutionConfig::validate() const {
  if (!std::isfinite(total_time) || total_time <= 0.0) {
    throw ConfigError("total time must be positive and finite");
  }
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw ConfigError("time step must be positive and finite");
  }
  if (dt > total_time) {
    throw ConfigError("time step exceeds total time");
  }
  if (!std::isfinite(delta_cut) || delta_cut <= 0.0) {
    throw ConfigError("delta cut must be positive and finite");
  }
  if (max_growths_per_step < 0) {
    throw ConfigError("growth cap must be nonnegative");
  }
  const double ratio = total_time / dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-9) {
    throw ConfigError("total time " + std::to_string(total_time) +
                      " is not an integer multiple of dt " +
                      std::to_string(dt));
  }
}

int EvolutionConfig::step_count() const {
  validate();
  return static_cast<int>(std::llround(total_time / dt));
}

SingleStepResult adaptive_single_step(const Hamiltonian& h,
                                      const StateVector& psi_t, double dt,
                                      double delta_cut) {
  if (!std::isfinite(dt)) throw ContractError("time step must be finite");
  GrowthResult g =
      grow_ansatz(Ansatz(h.n_qubits()), h, psi_t, delta_cut);
  std::vector<AnsatzOp> ops;
  ops.reserve(g.ansatz.size());
  Amplitudes amps = psi_t.amps();
  for (std::size_t j = 0; j < g.ansatz.size(); ++j) {
    const double lambda = g.result.lambda[static_cast<Eigen::Index>(j)];
    ops.push_back({g.ansatz.ops()[j].word, lambda});
    rotate_in_place(g.ansatz.ops()[j].word, lambda * dt, amps);
  }
  return {std::move(ops),
          StateVector::from_amplitudes(psi_t.n_qubits(), std::move(amps)),
          std::move(g.result)};
}

EvolutionTrace adaptive_evolve(const Hamiltonian& h, const StateVector& psi0,
                               const EvolutionConfig& config,
                               const EvolutionObserver& observer) {
  const int steps = config.step_count();
  if (h.n_qubits() != psi0.n_qubits()) {
    throw DimensionError("state and Hamiltonian disagree on qubit count");
  }
  std::optional<ExactPropagator> exact;
  if (config.record_fidelity) exact.emplace(h);

  const int cap = config.max_growths_per_step > 0
                      ? config.max_growths_per_step
                      : static_cast<int>(h.size());

  EvolutionTrace trace{config, {}, Ansatz(h.n_qubits())};
  trace.records.reserve(static_cast<std::size_t>(steps) + 1);
  Ansatz& ansatz = trace.final_ansatz;

  for (int k = 0; k <= steps; ++k) {
    StepRecord rec;
    rec.t = k * config.dt;

    SolveResult r = compute_delta(ansatz, h, psi0);
    rec.delta = r.delta;
    if (r.delta > config.delta_cut) {
      GrowthResult g =
          grow_ansatz(ansatz, h, psi0, 0.5 * config.delta_cut, cap);
      ansatz = std::move(g.ansatz);
      r = std::move(g.result);
    }
    rec.delta_after = r.delta;
    rec.ansatz_size = static_cast<int>(ansatz.size());
    rec.cnot_count = ansatz_cnot_count(ansatz);

    // Appended operators start at parameter 0, so growth leaves the state
    // unchanged.
    const StateVector state = apply_ansatz(ansatz, psi0);
    if (exact) rec.fidelity = fidelity(exact->evolve(rec.t, psi0), state);
    if (observer) observer(rec, state);
    trace.records.push_back(rec);

    if (k < steps) {
      if (!r.lambda.allFinite()) {
        throw NumericalError("non-finite lambda at t = " +
                             std::to_string(rec.t));
      }
      ansatz.advance(r.lambda, config.dt);
    }
  }
  return trace;
}

TrotterResult trotter_evolve(const Hamiltonian& h, const StateVector& psi0,
                             double total_time, int steps,
                             const TrotterObserver& observer) {
  if (steps < 1) throw ContractError("Trotter step count must be >= 1");
  if (!std::isfinite(total_time)) {
    throw ContractError("total time must be finite");
  }
  if (h.n_qubits() != psi0.n_qubits()) {
    throw DimensionError("state and Hamiltonian disagree on qubit count");
  }
  const double dt = total_time / steps;
  Amplitudes amps = psi0.amps();
  if (observer) observer(0, 0.0, psi0);
  for (int s = 1; s <= steps; ++s) {
    for (const auto& term : h.terms()) {
      rotate_in_place(term.word, term.coeff * dt, amps);
    }
    if (observer) {
      observer(s, s * dt, StateVector::from_amplitudes(h.n_qubits(), amps));
    }
  }
  return {StateVector::from_amplitudes(h.n_qubits(), std::move(amps)),
          steps * trotter_step_cnot_count(h)};
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

}  // namespace adaptpf
