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

#include "adaptpf/pauli.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "adaptpf/errors.hpp"

namespace adaptpf {

namespace {

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ContractError("qubit count must lie in [1, 64], got " +
                        std::to_string(n));
  }
}

void check_same(const PauliWord& p, const PauliWord& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw DimensionError("Pauli words act on " + std::to_string(p.n_qubits()) +
                         " and " + std::to_string(q.n_qubits()) + " qubits");
  }
}

}  // namespace

PauliWord::PauliWord(int n_qubits) : PauliWord(n_qubits, 0, 0) {}

PauliWord::PauliWord(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  check_qubits(n_qubits);
  if (((x_mask | z_mask) & ~full_mask(n_qubits)) != 0) {
    throw ContractError("Pauli mask has bits beyond qubit " +
                        std::to_string(n_qubits - 1));
  }
}

PauliWord PauliWord::parse(std::string_view text, int n_qubits) {
  check_qubits(n_qubits);
  if (text.size() != static_cast<std::size_t>(n_qubits)) {
    throw ParseError("Pauli string '" + std::string(text) + "' has length " +
                         std::to_string(text.size()) + ", expected " +
                         std::to_string(n_qubits),
                     std::min(text.size(), static_cast<std::size_t>(n_qubits)));
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw ParseError("illegal Pauli letter '" + std::string(1, text[q]) +
                             "' at position " + std::to_string(q),
                         q);
    }
  }
  return PauliWord(n_qubits, x, z);
}

PauliWord PauliWord::single(int n_qubits, int qubit, char letter) {
  check_qubits(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw ContractError("qubit index " + std::to_string(qubit) +
                        " out of range");
  }
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  s[static_cast<std::size_t>(qubit)] = letter;
  return parse(s, n_qubits);
}

int PauliWord::weight() const noexcept { return std::popcount(x_ | z_); }

int PauliWord::y_count() const noexcept { return std::popcount(x_ & z_); }

char PauliWord::letter(int q) const {
  if (q < 0 || q >= n_qubits_) {
    throw ContractError("qubit index " + std::to_string(q) + " out of range");
  }
  const bool xb = (x_ >> q) & 1U;
  const bool zb = (z_ >> q) & 1U;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliWord::to_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_qubits_));
  for (int q = 0; q < n_qubits_; ++q) s.push_back(letter(q));
  return s;
}

PauliProduct multiply(const PauliWord& p, const PauliWord& q) {
  check_same(p, q);
  // Write each word as i^{#Y} X^x Z^z. Moving Z^{z_p} past X^{x_q} costs
  // (-1)^{|z_p & x_q|}; the product's own Y count is divided back out.
  const std::uint64_t x = p.x_mask() ^ q.x_mask();
  const std::uint64_t z = p.z_mask() ^ q.z_mask();
  const int ys_out = std::popcount(x & z);
  int power = p.y_count() + q.y_count() - ys_out +
              2 * std::popcount(p.z_mask() & q.x_mask());
  power = ((power % 4) + 4) % 4;
  static constexpr std::complex<double> kPhase[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return {kPhase[power], PauliWord(p.n_qubits(), x, z)};
}

bool commutes(const PauliWord& p, const PauliWord& q) {
  check_same(p, q);
  const int s = std::popcount(p.x_mask() & q.z_mask()) +
                std::popcount(p.z_mask() & q.x_mask());
  return s % 2 == 0;
}

PauliWord parse_word(std::string_view text, int n_qubits) {
  return PauliWord::parse(text, n_qubits);
}

Hamiltonian::Hamiltonian(int n_qubits, const std::vector<PauliTerm>& terms)
    : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  std::unordered_map<PauliWord, std::size_t, PauliWordHash> slot;
  std::vector<PauliTerm> merged;
  for (const auto& term : terms) {
    if (term.word.n_qubits() != n_qubits) {
      throw DimensionError("term " + term.word.to_string() + " acts on " +
                           std::to_string(term.word.n_qubits()) +
                           " qubits, Hamiltonian has " +
                           std::to_string(n_qubits));
    }
    if (!std::isfinite(term.coeff)) {
      throw ContractError("non-finite coefficient on term " +
                          term.word.to_string());
    }
    auto [it, fresh] = slot.try_emplace(term.word, merged.size());
    if (fresh) {
      merged.push_back(term);
    } else {
      merged[it->second].coeff += term.coeff;
    }
  }
  terms_.reserve(merged.size());
  for (auto& term : merged) {
    if (std::abs(term.coeff) >= kDropTolerance) terms_.push_back(term);
  }
}

double Hamiltonian::weight_sum() const noexcept {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

Hamiltonian Hamiltonian::scaled(double factor) const {
  if (!std::isfinite(factor) || factor == 0.0) {
    throw ContractError("scale factor must be finite and nonzero");
  }
  std::vector<PauliTerm> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return Hamiltonian(n_qubits_, out);
}

}  // namespace adaptpf
