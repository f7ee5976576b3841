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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "adaptpf/pauli.hpp"
#include "adaptpf/statevector.hpp"

namespace adaptpf {

struct AnsatzOp {
  PauliWord word;
  double param;
};

/**
 * @brief Ordered product exp(-i O_N L_N) ... exp(-i O_1 L_1).
 *
 * ops()[0] acts first on the input state. New operators are appended, so they
 * act last.
 */
class Ansatz {
 public:
  explicit Ansatz(int n_qubits);
  Ansatz(int n_qubits, std::vector<AnsatzOp> ops);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<AnsatzOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  void append(const PauliWord& word, double param = 0.0);
  Ansatz appended(const PauliWord& word, double param = 0.0) const;

  /// params += step * direction.
  void advance(const Eigen::VectorXd& direction, double step);

  Eigen::VectorXd params() const;

 private:
  int n_qubits_;
  std::vector<AnsatzOp> ops_;
};

/// Normal equations A lambda = C of the quadratic error
/// Delta(lambda) = h2 + lambda^T A lambda - 2 C^T lambda.
struct NormalEquations {
  Eigen::MatrixXd a_matrix;
  Eigen::VectorXd c_vector;
  double h2 = 0.0;
};

struct SolveResult {
  Eigen::VectorXd lambda;
  double delta = 0.0;
  int rank = 0;
};

/// Relative eigenvalue cutoff for the pseudo-inverse of A.
inline constexpr double kRankTolerance = 1e-10;
/// Negative Delta down to this magnitude is rounding and is clamped to 0.
inline constexpr double kDeltaClamp = 1e-9;
/// Relative Delta decrease below which a candidate counts as non-improving.
inline constexpr double kMinImprovement = 1e-12;

StateVector apply_ansatz(const Ansatz& ansatz, const StateVector& psi0);

/// d|Psi>/d L_j for the 0-based operator index `j`. Unit norm.
Amplitudes tangent_vector(const Ansatz& ansatz, std::size_t j,
                          const StateVector& psi0);

/**
 * @brief Ansatz state, its tangent vectors and the exact direction -iH|Psi>.
 *
 * Holds the N tangent vectors as columns so that scoring a trailing candidate
 * operator (parameter 0, derivative -iP|Psi>) costs N inner products instead
 * of a rebuild.
 */
class TangentSpace {
 public:
  TangentSpace(const Ansatz& ansatz, const Hamiltonian& h,
               const StateVector& psi0);

  const StateVector& state() const noexcept { return state_; }
  const Eigen::MatrixXcd& tangents() const noexcept { return tangents_; }
  /// -iH|Psi>.
  const Amplitudes& target() const noexcept { return target_; }
  double h2() const noexcept { return h2_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(tangents_.cols());
  }

  NormalEquations normal_equations() const;

  /// Normal equations after appending `word` with parameter 0.
  NormalEquations with_trailing(const PauliWord& word) const;

  /// Registers an appended operator with parameter 0. The state is unchanged.
  void push_trailing(const PauliWord& word);

 private:
  StateVector state_;
  Eigen::MatrixXcd tangents_;
  Eigen::MatrixXd a_;
  Eigen::VectorXd c_;
  Amplitudes target_;
  double h2_;
};

NormalEquations build_normal_equations(const Ansatz& ansatz,
                                       const Hamiltonian& h,
                                       const StateVector& psi0);

/// Minimum-norm least-squares solution through the spectral pseudo-inverse.
SolveResult solve_coefficients(const NormalEquations& ne);

/// Minimized Delta of `ansatz`; the empty ansatz gives <H^2> on psi0.
SolveResult compute_delta(const Ansatz& ansatz, const Hamiltonian& h,
                          const StateVector& psi0);

struct GrowthResult {
  Ansatz ansatz;
  SolveResult result;
  int iterations = 0;
  /// Delta before growth followed by Delta after each append.
  std::vector<double> delta_history;
};

/**
 * @brief Greedily appends Hamiltonian words (parameter 0) until Delta drops to
 * `delta_target`.
 *
 * Every iteration scores all terms of `h` not yet appended during this call
 * and keeps the lowest Delta, ties going to the smaller term index.
 * `max_iterations` <= 0 means h.size().
 *
 * Throws GrowthStallError when no candidate improves Delta, the candidates
 * run out, or the iteration cap is hit with Delta above the target.
 */
GrowthResult grow_ansatz(const Ansatz& ansatz, const Hamiltonian& h,
                         const StateVector& psi0, double delta_target,
                         int max_iterations = 0);

/// Second-order error coefficient 2 Re<dPsi2|dPsi1> with every operator
/// applied at the end of the circuit.
double compute_delta3(const Ansatz& ansatz, const Hamiltonian& h,
                      const StateVector& psi0, const Eigen::VectorXd& lambda);

}  // namespace adaptpf
