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

#include "adaptpf/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "adaptpf/errors.hpp"

namespace adaptpf {

namespace {

using cd = std::complex<double>;
constexpr cd kMinusI(0.0, -1.0);

void check_ansatz_state(const Ansatz& ansatz, const StateVector& psi0) {
  if (ansatz.n_qubits() != psi0.n_qubits()) {
    throw DimensionError("ansatz acts on " + std::to_string(ansatz.n_qubits()) +
                         " qubits, state has " +
                         std::to_string(psi0.n_qubits()));
  }
}

void check_hamiltonian(const Ansatz& ansatz, const Hamiltonian& h) {
  if (ansatz.n_qubits() != h.n_qubits()) {
    throw DimensionError("ansatz acts on " + std::to_string(ansatz.n_qubits()) +
                         " qubits, Hamiltonian on " +
                         std::to_string(h.n_qubits()));
  }
}

double clamp_delta(double delta, double h2) {
  if (delta >= 0.0) return delta;
  if (delta >= -kDeltaClamp * std::max(1.0, h2)) return 0.0;
  throw NumericalError("quadratic error evaluated to " + std::to_string(delta) +
                       "; normal equations are inconsistent");
}

// All tangent vectors as columns. O(N^2) rotations: tangent j is
// U_N ... U_{j+1} (-i O_j) U_j ... U_1 |psi0>.
Eigen::MatrixXcd all_tangents(const Ansatz& ansatz, const StateVector& psi0) {
  const auto& ops = ansatz.ops();
  Eigen::MatrixXcd t(psi0.dim(), static_cast<Eigen::Index>(ops.size()));
  Amplitudes prefix = psi0.amps();
  for (std::size_t j = 0; j < ops.size(); ++j) {
    rotate_in_place(ops[j].word, ops[j].param, prefix);
    Amplitudes v = kMinusI * apply_pauli(ops[j].word, prefix);
    for (std::size_t k = j + 1; k < ops.size(); ++k) {
      rotate_in_place(ops[k].word, ops[k].param, v);
    }
    t.col(static_cast<Eigen::Index>(j)) = v;
  }
  return t;
}

}  // namespace

Ansatz::Ansatz(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ContractError("ansatz qubit count out of range");
  }
}

Ansatz::Ansatz(int n_qubits, std::vector<AnsatzOp> ops) : Ansatz(n_qubits) {
  for (const auto& op : ops) append(op.word, op.param);
}

void Ansatz::append(const PauliWord& word, double param) {
  if (word.n_qubits() != n_qubits_) {
    throw DimensionError("operator " + word.to_string() +
                         " does not match ansatz width " +
                         std::to_string(n_qubits_));
  }
  if (!std::isfinite(param)) {
    throw ContractError("ansatz parameters must be finite");
  }
  ops_.push_back({word, param});
}

Ansatz Ansatz::appended(const PauliWord& word, double param) const {
  Ansatz out = *this;
  out.append(word, param);
  return out;
}

void Ansatz::advance(const Eigen::VectorXd& direction, double step) {
  if (direction.size() != static_cast<Eigen::Index>(ops_.size())) {
    throw DimensionError("parameter update has " +
                         std::to_string(direction.size()) + " entries for " +
                         std::to_string(ops_.size()) + " operators");
  }
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    const double next =
        ops_[j].param + step * direction[static_cast<Eigen::Index>(j)];
    if (!std::isfinite(next)) {
      throw NumericalError("non-finite ansatz parameter after update");
    }
    ops_[j].param = next;
  }
}

Eigen::VectorXd Ansatz::params() const {
  Eigen::VectorXd p(static_cast<Eigen::Index>(ops_.size()));
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    p[static_cast<Eigen::Index>(j)] = ops_[j].param;
  }
  return p;
}

StateVector apply_ansatz(const Ansatz& ansatz, const StateVector& psi0) {
  check_ansatz_state(ansatz, psi0);
  Amplitudes amps = psi0.amps();
  for (const auto& op : ansatz.ops()) rotate_in_place(op.word, op.param, amps);
  return StateVector::from_amplitudes(psi0.n_qubits(), std::move(amps));
}

Amplitudes tangent_vector(const Ansatz& ansatz, std::size_t j,
                          const StateVector& psi0) {
  check_ansatz_state(ansatz, psi0);
  const auto& ops = ansatz.ops();
  if (j >= ops.size()) {
    throw ContractError("tangent index " + std::to_string(j) +
                        " out of range for ansatz of size " +
                        std::to_string(ops.size()));
  }
  Amplitudes v = psi0.amps();
  for (std::size_t k = 0; k <= j; ++k) {
    rotate_in_place(ops[k].word, ops[k].param, v);
  }
  v = kMinusI * apply_pauli(ops[j].word, v);
  for (std::size_t k = j + 1; k < ops.size(); ++k) {
    rotate_in_place(ops[k].word, ops[k].param, v);
  }
  return v;
}

TangentSpace::TangentSpace(const Ansatz& ansatz, const Hamiltonian& h,
                           const StateVector& psi0)
    : state_(apply_ansatz(ansatz, psi0)) {
  check_hamiltonian(ansatz, h);
  tangents_ = all_tangents(ansatz, psi0);
  const Amplitudes hpsi = apply_hamiltonian(h, state_);
  h2_ = hpsi.squaredNorm();
  target_ = kMinusI * hpsi;
  a_ = (tangents_.adjoint() * tangents_).real();
  c_ = (tangents_.adjoint() * target_).real();
}

NormalEquations TangentSpace::normal_equations() const {
  return {a_, c_, h2_};
}

NormalEquations TangentSpace::with_trailing(const PauliWord& word) const {
  const Amplitudes t = kMinusI * apply_pauli(word, state_.amps());
  const Eigen::Index n = a_.rows();
  NormalEquations ne;
  ne.a_matrix.resize(n + 1, n + 1);
  ne.a_matrix.topLeftCorner(n, n) = a_;
  const Eigen::VectorXd cross = (tangents_.adjoint() * t).real();
  ne.a_matrix.col(n).head(n) = cross;
  ne.a_matrix.row(n).head(n) = cross.transpose();
  ne.a_matrix(n, n) = t.squaredNorm();
  ne.c_vector.resize(n + 1);
  ne.c_vector.head(n) = c_;
  ne.c_vector[n] = t.dot(target_).real();
  ne.h2 = h2_;
  return ne;
}

void TangentSpace::push_trailing(const PauliWord& word) {
  NormalEquations ne = with_trailing(word);
  const Eigen::Index n = tangents_.cols();
  tangents_.conservativeResize(Eigen::NoChange, n + 1);
  tangents_.col(n) = kMinusI * apply_pauli(word, state_.amps());
  a_ = std::move(ne.a_matrix);
  c_ = std::move(ne.c_vector);
}

NormalEquations build_normal_equations(const Ansatz& ansatz,
                                       const Hamiltonian& h,
                                       const StateVector& psi0) {
  if (ansatz.empty()) {
    throw ContractError(
        "normal equations need a nonempty ansatz; the empty ansatz has "
        "Delta = <H^2>");
  }
  return TangentSpace(ansatz, h, psi0).normal_equations();
}

SolveResult solve_coefficients(const NormalEquations& ne) {
  const auto& a = ne.a_matrix;
  const auto& c = ne.c_vector;
  if (a.rows() != a.cols() || c.size() != a.rows()) {
    throw ContractError("normal equations have mismatched shapes");
  }
  if (!a.allFinite() || !c.allFinite() || !std::isfinite(ne.h2)) {
    throw ContractError("normal equations contain non-finite entries");
  }
  SolveResult out;
  const Eigen::Index n = a.rows();
  if (n == 0) {
    out.lambda = Eigen::VectorXd();
    out.delta = clamp_delta(ne.h2, ne.h2);
    return out;
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw ContractError("A matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of A failed");
  }
  const Eigen::VectorXd& mu = es.eigenvalues();
  const double mu_max = mu.maxCoeff();
  out.lambda = Eigen::VectorXd::Zero(n);
  if (mu_max > 0.0) {
    const Eigen::VectorXd proj = es.eigenvectors().transpose() * c;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mu[i] > kRankTolerance * mu_max) {
        out.lambda += es.eigenvectors().col(i) * (proj[i] / mu[i]);
        ++out.rank;
      }
    }
  }
  const double delta =
      ne.h2 + out.lambda.dot(a * out.lambda) - 2.0 * c.dot(out.lambda);
  out.delta = clamp_delta(delta, ne.h2);
  return out;
}

SolveResult compute_delta(const Ansatz& ansatz, const Hamiltonian& h,
                          const StateVector& psi0) {
  check_hamiltonian(ansatz, h);
  check_ansatz_state(ansatz, psi0);
  if (ansatz.empty()) {
    SolveResult out;
    out.delta = expect_h_and_h2(h, psi0).second;
    return out;
  }
  return solve_coefficients(build_normal_equations(ansatz, h, psi0));
}

GrowthResult grow_ansatz(const Ansatz& ansatz, const Hamiltonian& h,
                         const StateVector& psi0, double delta_target,
                         int max_iterations) {
  if (!(delta_target >= 0.0)) {
    throw ContractError("delta target must be a nonnegative number");
  }
  check_hamiltonian(ansatz, h);
  check_ansatz_state(ansatz, psi0);

  TangentSpace space(ansatz, h, psi0);
  GrowthResult out{ansatz, solve_coefficients(space.normal_equations()), 0,
                   {}};
  const double delta0 = out.result.delta;
  out.delta_history.push_back(delta0);

  const std::size_t n_terms = h.size();
  const int cap =
      max_iterations > 0 ? max_iterations : static_cast<int>(n_terms);
  std::vector<bool> used(n_terms, false);

  auto stall = [&](const std::string& why) {
    if (out.result.delta <= delta_target + kDeltaClamp) return;
    throw GrowthStallError(why + "; residual Delta = " +
                               std::to_string(out.result.delta) +
                               ", target = " + std::to_string(delta_target),
                           out.result.delta);
  };

  while (out.result.delta > delta_target) {
    if (out.iterations >= cap) {
      stall("growth hit the cap of " + std::to_string(cap) + " appends");
      break;
    }
    std::optional<std::size_t> best;
    SolveResult best_result;
    for (std::size_t k = 0; k < n_terms; ++k) {
      if (used[k]) continue;
      SolveResult r = solve_coefficients(space.with_trailing(h[k].word));
      if (!best || r.delta < best_result.delta) {
        best = k;
        best_result = std::move(r);
      }
    }
    if (!best) {
      stall("all " + std::to_string(n_terms) +
            " Hamiltonian words were appended");
      break;
    }
    if (out.result.delta - best_result.delta <= kMinImprovement * delta0) {
      stall("no candidate lowers Delta");
      break;
    }
    used[*best] = true;
    out.ansatz.append(h[*best].word, 0.0);
    space.push_trailing(h[*best].word);
    out.result = std::move(best_result);
    ++out.iterations;
    out.delta_history.push_back(out.result.delta);
  }
  return out;
}

double compute_delta3(const Ansatz& ansatz, const Hamiltonian& h,
                      const StateVector& psi0, const Eigen::VectorXd& lambda) {
  check_hamiltonian(ansatz, h);
  if (lambda.size() != static_cast<Eigen::Index>(ansatz.size())) {
    throw DimensionError("lambda has " + std::to_string(lambda.size()) +
                         " entries for " + std::to_string(ansatz.size()) +
                         " operators");
  }
  const StateVector psi = apply_ansatz(ansatz, psi0);
  const Amplitudes hpsi = apply_hamiltonian(h, psi.amps());
  const Amplitudes h2psi = apply_hamiltonian(h, hpsi);

  // O_lambda = sum_j lambda_j O_j, applied once and twice.
  auto apply_combination = [&](const Amplitudes& v) {
    Amplitudes acc = Amplitudes::Zero(v.size());
    for (std::size_t j = 0; j < ansatz.size(); ++j) {
      acc += lambda[static_cast<Eigen::Index>(j)] *
             apply_pauli(ansatz.ops()[j].word, v);
    }
    return acc;
  };
  const Amplitudes once = apply_combination(psi.amps());
  const Amplitudes twice = apply_combination(once);

  const Amplitudes d1 = kMinusI * (hpsi - once);
  const Amplitudes d2 = -0.5 * (h2psi - twice);
  return 2.0 * d2.dot(d1).real();
}

}  // namespace adaptpf
