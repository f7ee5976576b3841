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

#include "adaptpf/krylov.hpp"

#include <cmath>
#include <string>

#include "adaptpf/errors.hpp"
#include "adaptpf/models_io.hpp"

namespace adaptpf {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

void KrylovConfig::validate() const {
  if (m < 0) throw ConfigError("Krylov order m must be >= 0");
  if (!std::isfinite(dt_krylov) || dt_krylov <= 0.0) {
    throw ConfigError("Krylov time spacing must be positive and finite");
  }
  if (!(s_threshold > 0.0 && s_threshold < 1.0)) {
    throw ConfigError("overlap threshold must lie in (0, 1)");
  }
}

KrylovStates build_krylov_states(const Hamiltonian& h, const StateVector& phi0,
                                 const KrylovConfig& config,
                                 const KrylovBackend& backend) {
  config.validate();
  if (h.n_qubits() != phi0.n_qubits()) {
    throw DimensionError("state and Hamiltonian disagree on qubit count");
  }
  KrylovStates out;
  out.states.reserve(static_cast<std::size_t>(config.m) + 1);

  std::visit(
      Overloaded{
          [&](const ExactBackend&) {
            const ExactPropagator prop(h);
            out.states.push_back(phi0);
            for (int n = 1; n <= config.m; ++n) {
              out.states.push_back(prop.evolve(-n * config.dt_krylov, phi0));
            }
          },
          [&](const TrotterBackend& b) {
            if (b.steps < 1) throw ConfigError("Trotter steps must be >= 1");
            out.states.push_back(phi0);
            for (int n = 1; n <= config.m; ++n) {
              out.states.push_back(
                  trotter_evolve(h, phi0, -n * config.dt_krylov, b.steps)
                      .state);
            }
            if (config.m > 0) {
              out.cnot_count = b.steps * trotter_step_cnot_count(h);
            }
          },
          [&](const AdaptiveBackend& b) {
            EvolutionConfig cfg = b.config;
            if (!std::isfinite(cfg.dt) || cfg.dt <= 0.0) {
              throw ConfigError("adaptive time step must be positive");
            }
            const double ratio = config.dt_krylov / cfg.dt;
            const long stride = std::lround(ratio);
            if (stride < 1 || std::abs(ratio - stride) > 1e-9) {
              throw ConfigError("Krylov spacing " +
                                std::to_string(config.dt_krylov) +
                                " is not an integer multiple of dt " +
                                std::to_string(cfg.dt));
            }
            if (config.m == 0) {
              out.states.push_back(phi0);
              return;
            }
            cfg.total_time = config.m * config.dt_krylov;
            // exp(+iHt) is the forward evolution under -H.
            const Hamiltonian reversed = h.scaled(-1.0);
            long index = 0;
            out.trace = adaptive_evolve(
                reversed, phi0, cfg,
                [&](const StepRecord&, const StateVector& state) {
                  if (index % stride == 0) out.states.push_back(state);
                  ++index;
                });
            out.cnot_count = out.trace->records.back().cnot_count;
          }},
      backend);
  return out;
}

KrylovMatrices build_krylov_matrices(const std::vector<StateVector>& states,
                                     const Hamiltonian& h) {
  if (states.empty()) throw ContractError("Krylov basis is empty");
  const Eigen::Index dim = states.front().dim();
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd basis(dim, n);
  Eigen::MatrixXcd h_basis(dim, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& s = states[static_cast<std::size_t>(k)];
    if (s.dim() != dim || s.n_qubits() != h.n_qubits()) {
      throw DimensionError("Krylov states disagree on dimension");
    }
    basis.col(k) = s.amps();
    h_basis.col(k) = apply_hamiltonian(h, s);
  }
  KrylovMatrices km;
  km.s_matrix = basis.adjoint() * basis;
  km.h_matrix = basis.adjoint() * h_basis;
  km.s_matrix = (0.5 * (km.s_matrix + km.s_matrix.adjoint())).eval();
  km.h_matrix = (0.5 * (km.h_matrix + km.h_matrix.adjoint())).eval();
  return km;
}

KrylovSpectrum solve_generalized_eig(const KrylovMatrices& km,
                                     double s_threshold) {
  const auto& s = km.s_matrix;
  const auto& hm = km.h_matrix;
  if (s.rows() != s.cols() || hm.rows() != s.rows() || hm.cols() != s.cols() ||
      s.rows() == 0) {
    throw ContractError("Krylov matrices must be square and equally sized");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
  if (es.info() != Eigen::Success) {
    throw NumericalError("overlap eigendecomposition failed");
  }
  const Eigen::VectorXd& sigma = es.eigenvalues();
  const double cutoff = s_threshold * sigma.maxCoeff();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > cutoff && sigma[i] > 0.0) kept.push_back(i);
  }
  if (kept.empty()) {
    throw DegenerateSubspaceError(
        "every overlap eigenvalue is below the threshold; lower "
        "s_threshold or use fewer Krylov vectors");
  }
  Eigen::MatrixXcd x(s.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    x.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(kept[c]) / std::sqrt(sigma[kept[c]]);
  }
  Eigen::MatrixXcd reduced = x.adjoint() * hm * x;
  reduced = (0.5 * (reduced + reduced.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rs(
      reduced, Eigen::EigenvaluesOnly);
  if (rs.info() != Eigen::Success) {
    throw NumericalError("reduced Hamiltonian eigendecomposition failed");
  }
  return {rs.eigenvalues(), static_cast<int>(kept.size())};
}

KrylovResult krylov_ground_energy(const Hamiltonian& h, const StateVector& phi0,
                                  const KrylovConfig& config,
                                  const KrylovBackend& backend) {
  KrylovStates ks = build_krylov_states(h, phi0, config, backend);
  KrylovResult out;
  out.matrices = build_krylov_matrices(ks.states, h);
  out.spectrum = solve_generalized_eig(out.matrices, config.s_threshold);
  out.energy = out.spectrum.energies[0];
  out.cnot_count = ks.cnot_count;
  out.trace = std::move(ks.trace);
  return out;
}

}  // namespace adaptpf
