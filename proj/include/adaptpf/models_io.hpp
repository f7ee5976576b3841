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
#include <filesystem>
#include <string>
#include <string_view>

#include "adaptpf/adaptive.hpp"
#include "adaptpf/evolution.hpp"
#include "adaptpf/pauli.hpp"

namespace adaptpf {

// ---------------------------------------------------------------------------
// Gate accounting

/// CNOTs in the staircase compilation of exp(-i theta P): 2 (w - 1) for
/// weight w >= 2, otherwise 0.
int cnot_cost(const PauliWord& word);

/// Sum of cnot_cost over the ansatz operators.
std::int64_t ansatz_cnot_count(const Ansatz& ansatz);

/// CNOTs in one first-order Trotter step of `h`.
std::int64_t trotter_step_cnot_count(const Hamiltonian& h);

// ---------------------------------------------------------------------------
// Random transverse-field Ising model

struct TfimSpec {
  int n_spins = 6;
  std::uint64_t seed = 0;
  double coeff_sum = 6.0;
};

/**
 * @brief H = sum_{i>j} w_ij Z_i Z_j + sum_k h_k X_k with w, h ~ U[0, 1).
 *
 * Draws come from std::mt19937_64 constructed with `seed`; each uniform is
 * (draw >> 11) * 2^-53. All w_ij are drawn first in (i, j) lexicographic order
 * with i > j, then h_k for ascending k. Coefficients are rescaled so that
 * they sum to `coeff_sum`. Terms appear in the same order as the draws.
 */
Hamiltonian gen_tfim(const TfimSpec& spec);

// ---------------------------------------------------------------------------
// Hamiltonian text files
//
//   # comment
//   <n_qubits>
//   <coefficient> <Pauli string of length n over IXYZ>
//   ...
//
// '#' starts a comment anywhere on a line. Duplicate words are merged.

Hamiltonian parse_hamiltonian_file(std::string_view text);
Hamiltonian read_hamiltonian(const std::filesystem::path& path);

/// Text form that parses back to an identical Hamiltonian (shortest
/// round-trip representation of every coefficient).
std::string format_hamiltonian(const Hamiltonian& h);
void write_hamiltonian(const Hamiltonian& h, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Evolution traces

inline constexpr int kTraceSchemaVersion = 1;

std::string trace_to_json(const EvolutionTrace& trace);
EvolutionTrace trace_from_json(std::string_view text);

/// One header row, then one row per record. Missing fidelity is an empty
/// cell.
std::string trace_to_csv(const EvolutionTrace& trace);

void write_trace(const EvolutionTrace& trace, const std::filesystem::path& path);
EvolutionTrace read_trace(const std::filesystem::path& path);
void write_trace_csv(const EvolutionTrace& trace,
                     const std::filesystem::path& path);

/// Whole-file helpers that raise IoError with the path in the message.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace adaptpf
