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

#include "adaptpf/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "adaptpf/errors.hpp"

namespace adaptpf {

namespace {

using cd = std::complex<double>;

constexpr cd kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

// <k ^ x| P |k> for basis index k.
inline cd pauli_phase(const PauliWord& p, std::uint64_t k) {
  const int sign = std::popcount(k & p.z_mask()) & 1;
  return kIPow[(p.y_count() + 2 * sign) & 3];
}

void check_length(const PauliWord& p, const Amplitudes& psi) {
  if (psi.size() != (Eigen::Index{1} << p.n_qubits())) {
    throw DimensionError("vector of length " + std::to_string(psi.size()) +
                         " does not match a " + std::to_string(p.n_qubits()) +
                         "-qubit operator");
  }
}

void check_length(const Hamiltonian& h, const Amplitudes& psi) {
  if (psi.size() != (Eigen::Index{1} << h.n_qubits())) {
    throw DimensionError("vector of length " + std::to_string(psi.size()) +
                         " does not match a " + std::to_string(h.n_qubits()) +
                         "-qubit Hamiltonian");
  }
}

}  // namespace

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw CapabilityError("state vectors support 1.." +
                          std::to_string(kMaxStateQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw ContractError("basis index out of range");
  }
  Amplitudes amps = Amplitudes::Zero(dim);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_bitstring(std::string_view bits) {
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1') {
      index |= std::uint64_t{1} << q;
    } else if (bits[q] != '0') {
      throw ParseError("bitstring has illegal character at position " +
                           std::to_string(q),
                       q);
    }
  }
  return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::from_amplitudes(int n_qubits, Amplitudes amps) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw CapabilityError("state vectors support 1.." +
                          std::to_string(kMaxStateQubits) + " qubits");
  }
  if (amps.size() != (Eigen::Index{1} << n_qubits)) {
    throw DimensionError("amplitude vector has length " +
                         std::to_string(amps.size()) + ", expected 2^" +
                         std::to_string(n_qubits));
  }
  if (!amps.allFinite() || std::abs(amps.norm() - 1.0) > 1e-8) {
    throw ContractError("amplitudes must be finite with unit norm");
  }
  return StateVector(n_qubits, std::move(amps));
}

Amplitudes apply_pauli(const PauliWord& p, const Amplitudes& psi) {
  check_length(p, psi);
  Amplitudes out(psi.size());
  const std::uint64_t x = p.x_mask();
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    out[static_cast<Eigen::Index>(uk ^ x)] = pauli_phase(p, uk) * psi[k];
  }
  return out;
}

StateVector apply_pauli(const PauliWord& p, const StateVector& psi) {
  return StateVector::from_amplitudes(psi.n_qubits(),
                                      apply_pauli(p, psi.amps()));
}

void rotate_in_place(const PauliWord& p, double theta, Amplitudes& psi) {
  check_length(p, psi);
  if (!std::isfinite(theta)) {
    throw ContractError("rotation angle must be finite");
  }
  const double c = std::cos(theta);
  const cd mis(0.0, -std::sin(theta));
  const std::uint64_t x = p.x_mask();
  if (x == 0) {
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      psi[k] *= c + mis * pauli_phase(p, static_cast<std::uint64_t>(k));
    }
    return;
  }
  // Pair k with k ^ x, visiting each pair once from its smaller index.
  const std::uint64_t top = std::uint64_t{1} << (std::bit_width(x) - 1);
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    if (uk & top) continue;
    const auto kp = static_cast<Eigen::Index>(uk ^ x);
    const cd a = psi[k];
    const cd b = psi[kp];
    psi[k] = c * a + mis * pauli_phase(p, uk ^ x) * b;
    psi[kp] = c * b + mis * pauli_phase(p, uk) * a;
  }
}

StateVector apply_pauli_rotation(const PauliWord& p, double theta,
                                 const StateVector& psi) {
  if (p.n_qubits() != psi.n_qubits()) {
    throw DimensionError("rotation and state disagree on qubit count");
  }
  Amplitudes amps = psi.amps();
  rotate_in_place(p, theta, amps);
  return StateVector::from_amplitudes(psi.n_qubits(), std::move(amps));
}

Amplitudes apply_hamiltonian(const Hamiltonian& h, const Amplitudes& psi) {
  check_length(h, psi);
  Amplitudes out = Amplitudes::Zero(psi.size());
  for (const auto& term : h.terms()) {
    const std::uint64_t x = term.word.x_mask();
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      const auto uk = static_cast<std::uint64_t>(k);
      out[static_cast<Eigen::Index>(uk ^ x)] +=
          term.coeff * pauli_phase(term.word, uk) * psi[k];
    }
  }
  return out;
}

Amplitudes apply_hamiltonian(const Hamiltonian& h, const StateVector& psi) {
  return apply_hamiltonian(h, psi.amps());
}

std::complex<double> inner(const Amplitudes& phi, const Amplitudes& psi) {
  if (phi.size() != psi.size()) {
    throw DimensionError("inner product of vectors with lengths " +
                         std::to_string(phi.size()) + " and " +
                         std::to_string(psi.size()));
  }
  return phi.dot(psi);  // Eigen conjugates the left operand.
}

std::complex<double> inner(const StateVector& phi, const StateVector& psi) {
  return inner(phi.amps(), psi.amps());
}

EnergyMoments expect_h_and_h2(const Hamiltonian& h, const StateVector& psi) {
  const Amplitudes hpsi = apply_hamiltonian(h, psi);
  return {psi.amps().dot(hpsi).real(), hpsi.squaredNorm()};
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian& h) {
  if (h.n_qubits() > kMaxDenseQubits) {
    throw CapabilityError("dense Hamiltonian limited to " +
                          std::to_string(kMaxDenseQubits) + " qubits, got " +
                          std::to_string(h.n_qubits()));
  }
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    const std::uint64_t x = term.word.x_mask();
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto uk = static_cast<std::uint64_t>(k);
      m(static_cast<Eigen::Index>(uk ^ x), k) +=
          term.coeff * pauli_phase(term.word, uk);
    }
  }
  return m;
}

ExactPropagator::ExactPropagator(const Hamiltonian& h)
    : n_qubits_(h.n_qubits()) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  const double scale = std::max(1.0, h.weight_sum());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NumericalError("assembled Hamiltonian matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition failed");
  }
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

StateVector ExactPropagator::evolve(double t, const StateVector& psi) const {
  if (psi.n_qubits() != n_qubits_) {
    throw DimensionError("state and propagator disagree on qubit count");
  }
  if (!std::isfinite(t)) throw ContractError("evolution time must be finite");
  Amplitudes coeffs = evecs_.adjoint() * psi.amps();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs[k] *= std::polar(1.0, -evals_[k] * t);
  }
  Amplitudes out = evecs_ * coeffs;
  return StateVector::from_amplitudes(n_qubits_, std::move(out));
}

StateVector exact_evolve(const Hamiltonian& h, double t,
                         const StateVector& psi) {
  if (h.n_qubits() != psi.n_qubits()) {
    throw DimensionError("state and Hamiltonian disagree on qubit count");
  }
  return ExactPropagator(h).evolve(t, psi);
}

}  // namespace adaptpf
