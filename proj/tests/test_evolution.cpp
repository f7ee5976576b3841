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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "adaptpf/evolution.hpp"
#include "adaptpf/models_io.hpp"
#include "oracle.hpp"

using namespace adaptpf;
using cd = std::complex<double>;

namespace {

StateVector dense_evolve(const Hamiltonian& h, double t, const StateVector& psi) {
  const Amplitudes out =
      oracle::expm_minus_i(oracle::hamiltonian_matrix(h), t) * psi.amps();
  return StateVector::from_amplitudes(psi.n_qubits(), out);
}

Hamiltonian commuting_3q() {
  return Hamiltonian(3, {{0.7, parse_word("ZZI", 3)},
                         {-0.4, parse_word("IZZ", 3)},
                         {0.9, parse_word("ZIZ", 3)},
                         {0.3, parse_word("XXX", 3)}});
}

}  // namespace

TEST(SingleStep, OneTermHamiltonian) {
  std::mt19937_64 rng(31);
  const auto psi = oracle::random_state(rng, 2);
  const auto p = parse_word("XZ", 2);
  const Hamiltonian h(2, {{0.6, p}});
  const auto s = adaptive_single_step(h, psi, 0.01, 0.0);
  ASSERT_EQ(s.ops.size(), 1u);
  EXPECT_EQ(s.ops[0].word, p);
  EXPECT_NEAR(s.ops[0].param, 0.6, 1e-14);
  EXPECT_NEAR(s.result.delta, 0.0, 1e-14);
  EXPECT_LT(oracle::max_abs_diff(s.psi_next.amps(),
                                 apply_pauli_rotation(p, 0.006, psi).amps()),
            1e-14);
}

TEST(SingleStep, CommutingHamiltonianIsExact) {
  std::mt19937_64 rng(32);
  const auto h = commuting_3q();
  const auto psi = oracle::random_state(rng, 3);
  const auto s = adaptive_single_step(h, psi, 1e-2, 1e-12);
  EXPECT_GE(fidelity(s.psi_next, dense_evolve(h, 1e-2, psi)), 1 - 1e-8);
}

TEST(SingleStep, ErrorBound) {
  std::mt19937_64 rng(33);
  const double dt = 1e-3;
  const double cut = 1e-6;
  for (int i = 0; i < 10; ++i) {
    const auto h = oracle::random_hamiltonian(rng, 3, 6);
    const auto psi = oracle::random_state(rng, 3);
    const auto s = adaptive_single_step(h, psi, dt, cut);
    EXPECT_LE(s.result.delta, cut);
    const double err = (s.psi_next.amps() - exact_evolve(h, dt, psi).amps()).norm();
    const double w = h.weight_sum();
    EXPECT_LE(err, std::sqrt(cut) * dt + 10 * dt * dt * w * w);
  }
  EXPECT_THROW(adaptive_single_step(commuting_3q(), StateVector::basis(3, 0),
                                    dt, -1.0),
               ContractError);
}

TEST(Config, Validation) {
  EvolutionConfig ok;
  EXPECT_NO_THROW(ok.validate());
  EXPECT_EQ(ok.step_count(), 200);

  auto bad = ok;
  bad.dt = 0.3;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = ok;
  bad.dt = 2.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = ok;
  bad.delta_cut = 0.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = ok;
  bad.dt = -1e-3;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = ok;
  bad.max_growths_per_step = -1;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(AdaptiveEvolve, OneTermHamiltonianTracksLinearAngle) {
  std::mt19937_64 rng(34);
  const auto psi0 = oracle::random_state(rng, 2);
  const auto p = parse_word("YY", 2);
  const Hamiltonian h(2, {{0.45, p}});
  EvolutionConfig cfg{0.5, 0.01, 1e-4, true, 0};
  const auto trace = adaptive_evolve(h, psi0, cfg);
  ASSERT_EQ(trace.records.size(), 51u);
  ASSERT_EQ(trace.final_ansatz.size(), 1u);
  EXPECT_NEAR(trace.final_ansatz.ops()[0].param, 0.45 * 0.5, 1e-12);
  for (const auto& r : trace.records) {
    EXPECT_EQ(r.ansatz_size, 1);
    EXPECT_EQ(r.cnot_count, 2);
    ASSERT_TRUE(r.fidelity.has_value());
    EXPECT_NEAR(*r.fidelity, 1.0, 1e-12);
  }
}

TEST(AdaptiveEvolve, RecordsAndMonotoneInvariants) {
  std::mt19937_64 rng(35);
  const auto h = oracle::random_hamiltonian(rng, 3, 6);
  EvolutionConfig cfg{0.2, 0.01, 1e-3, true, 0};
  std::vector<double> seen_t;
  const auto trace = adaptive_evolve(
      h, StateVector::from_bitstring("010"), cfg,
      [&](const StepRecord& r, const StateVector& s) {
        seen_t.push_back(r.t);
        EXPECT_NEAR(s.amps().norm(), 1.0, 1e-10);
      });
  ASSERT_EQ(trace.records.size(), 21u);
  EXPECT_EQ(seen_t.size(), 21u);
  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    const auto& r = trace.records[k];
    EXPECT_NEAR(r.t, 0.01 * static_cast<double>(k), 1e-12);
    EXPECT_LE(r.delta_after, r.delta + 1e-15);
    EXPECT_LE(r.delta_after, cfg.delta_cut);
    EXPECT_LE(*r.fidelity, 1 + 1e-9);
    EXPECT_GE(*r.fidelity, 0.0);
    if (k > 0) {
      EXPECT_GE(r.ansatz_size, trace.records[k - 1].ansatz_size);
      EXPECT_GE(r.cnot_count, trace.records[k - 1].cnot_count);
    }
  }
  EXPECT_EQ(trace.records.back().ansatz_size,
            static_cast<int>(trace.final_ansatz.size()));
  EXPECT_NEAR(trace.records.front().delta,
              expect_h_and_h2(h, StateVector::from_bitstring("010")).second,
              1e-12);
}

TEST(AdaptiveEvolve, TfimInstance) {
  const auto h = gen_tfim({6, 7, 6.0});
  EvolutionConfig cfg;
  cfg.record_fidelity = true;
  const auto trace = adaptive_evolve(h, StateVector::from_bitstring("010101"), cfg);
  const auto& last = trace.records.back();
  EXPECT_NEAR(last.t, 1.0, 1e-12);
  EXPECT_GE(*last.fidelity, 0.99);
  EXPECT_GE(last.cnot_count, 30);
  EXPECT_LE(last.cnot_count, 150);
  for (const auto& r : trace.records) EXPECT_LE(r.delta_after, cfg.delta_cut);
}

TEST(AdaptiveEvolve, TightCutoffMatchesExact) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 2; ++i) {
    const auto h = oracle::rescaled_to_weight(oracle::random_hamiltonian(rng, 4, 6), 3.0);
    const auto psi0 = StateVector::basis(4, 5);
    const auto trace = adaptive_evolve(h, psi0, {1.0, 1e-3, 1e-10, false, 0});
    const auto final_state = apply_ansatz(trace.final_ansatz, psi0);
    EXPECT_GE(fidelity(final_state, dense_evolve(h, 1.0, psi0)), 0.9999);
  }
}

TEST(AdaptiveEvolve, ErrorTrendWithStepSize) {
  std::mt19937_64 rng(37);
  const auto h = oracle::rescaled_to_weight(oracle::random_hamiltonian(rng, 3, 5), 3.0);
  const auto psi0 = StateVector::basis(3, 2);
  const auto exact = dense_evolve(h, 1.0, psi0);
  auto err = [&](double dt) {
    const auto tr = adaptive_evolve(h, psi0, {1.0, dt, 1e-8, false, 0});
    return (apply_ansatz(tr.final_ansatz, psi0).amps() - exact.amps()).norm();
  };
  const double coarse = err(0.02);
  const double fine = err(0.01);
  EXPECT_LE(fine, coarse);
  EXPECT_LE(fine, std::sqrt(1e-8) * 1.0 + 1.0 * std::sqrt(0.01));
}

TEST(Trotter, CommutingOneStepIsExact) {
  std::mt19937_64 rng(38);
  const auto h = commuting_3q();
  const auto psi0 = oracle::random_state(rng, 3);
  const auto r = trotter_evolve(h, psi0, 0.8, 1);
  EXPECT_NEAR(fidelity(r.state, dense_evolve(h, 0.8, psi0)), 1.0, 1e-10);
  EXPECT_EQ(r.cnot_count, 2 + 2 + 2 + 4);
}

TEST(Trotter, TfimCnotTotals) {
  const auto h = gen_tfim({6, 1, 6.0});
  const auto psi0 = StateVector::from_bitstring("010101");
  EXPECT_EQ(trotter_evolve(h, psi0, 1.0, 100).cnot_count, 3000);
  EXPECT_EQ(trotter_evolve(h, psi0, 1.0, 150).cnot_count, 4500);
}

TEST(Trotter, ObserverSeesEveryStep) {
  int calls = 0;
  trotter_evolve(commuting_3q(), StateVector::basis(3, 0), 1.0, 8,
                 [&](int step, double t, const StateVector&) {
                   EXPECT_EQ(step, calls);
                   EXPECT_NEAR(t, step / 8.0, 1e-15);
                   ++calls;
                 });
  EXPECT_EQ(calls, 9);
  EXPECT_THROW(trotter_evolve(commuting_3q(), StateVector::basis(3, 0), 1.0, 0),
               ContractError);
}

TEST(Trotter, FirstOrderScalingAndConvergence) {
  std::mt19937_64 rng(39);
  const auto h = oracle::rescaled_to_weight(oracle::random_hamiltonian(rng, 3, 6), 6.0);
  const auto psi0 = oracle::random_state(rng, 3);
  const auto exact = dense_evolve(h, 1.0, psi0);
  auto infid = [&](int steps) {
    return 1 - fidelity(trotter_evolve(h, psi0, 1.0, steps).state, exact);
  };
  for (int steps : {64, 128}) {
    const double ratio = infid(steps) / infid(2 * steps);
    EXPECT_GE(ratio, 3.5) << steps;
    EXPECT_LE(ratio, 4.5) << steps;
  }
  EXPECT_LE(infid(1024), 1e-4);
}

TEST(Fidelity, Examples) {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  Amplitudes plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-15);
  EXPECT_EQ(fidelity(zero, one), 0.0);
  EXPECT_NEAR(fidelity(zero, StateVector::from_amplitudes(1, plus)), 0.5, 1e-15);
  EXPECT_THROW(fidelity(zero, StateVector::basis(2, 0)), DimensionError);
}
