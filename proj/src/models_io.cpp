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

#include "adaptpf/models_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "adaptpf/errors.hpp"
#include "json.hpp"

namespace adaptpf {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw NumericalError("cannot format number");
  return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

ParseError line_error(std::size_t line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what, line);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int cnot_cost(const PauliWord& word) {
  const int w = word.weight();
  return w >= 2 ? 2 * (w - 1) : 0;
}

std::int64_t ansatz_cnot_count(const Ansatz& ansatz) {
  std::int64_t total = 0;
  for (const auto& op : ansatz.ops()) total += cnot_cost(op.word);
  return total;
}

std::int64_t trotter_step_cnot_count(const Hamiltonian& h) {
  std::int64_t total = 0;
  for (const auto& term : h.terms()) total += cnot_cost(term.word);
  return total;
}

Hamiltonian gen_tfim(const TfimSpec& spec) {
  if (spec.n_spins < 2 || spec.n_spins > kMaxQubits) {
    throw ConfigError("TFIM needs between 2 and 64 spins");
  }
  if (!std::isfinite(spec.coeff_sum) || spec.coeff_sum <= 0.0) {
    throw ConfigError("TFIM coefficient sum must be positive and finite");
  }
  const int n = spec.n_spins;
  std::mt19937_64 rng(spec.seed);
  std::vector<PauliTerm> terms;
  terms.reserve(static_cast<std::size_t>(n * (n - 1) / 2 + n));
  double total = 0.0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double w = uniform01(rng);
      const std::uint64_t z = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      terms.push_back({w, PauliWord(n, 0, z)});
      total += w;
    }
  }
  for (int k = 0; k < n; ++k) {
    const double hk = uniform01(rng);
    terms.push_back({hk, PauliWord(n, std::uint64_t{1} << k, 0)});
    total += hk;
  }
  const double scale = spec.coeff_sum / total;
  for (auto& t : terms) t.coeff *= scale;
  return Hamiltonian(n, terms);
}

Hamiltonian parse_hamiltonian_file(std::string_view text) {
  std::optional<int> n_qubits;
  std::vector<PauliTerm> terms;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto fields = split_ws(line);

    if (!n_qubits) {
      int n = 0;
      const auto tok = fields[0];
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (fields.size() != 1 || ec != std::errc() ||
          end != tok.data() + tok.size() || n < 1 || n > kMaxQubits) {
        throw line_error(line_no, "expected a qubit count in [1, 64], got '" +
                                      std::string(line) + "'");
      }
      n_qubits = n;
      continue;
    }

    if (fields.size() != 2) {
      throw line_error(line_no,
                       "expected '<coefficient> <pauli string>', got '" +
                           std::string(line) + "'");
    }
    double coeff = 0.0;
    const auto tok = fields[0];
    auto [end, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), coeff);
    if (ec != std::errc() || end != tok.data() + tok.size() ||
        !std::isfinite(coeff)) {
      throw line_error(line_no, "bad coefficient '" + std::string(tok) + "'");
    }
    try {
      terms.push_back({coeff, PauliWord::parse(fields[1], *n_qubits)});
    } catch (const ParseError& e) {
      throw line_error(line_no, e.what());
    }
  }
  if (!n_qubits) throw line_error(line_no, "missing qubit count");
  Hamiltonian h(*n_qubits, terms);
  if (h.size() == 0) throw line_error(line_no, "Hamiltonian has no terms");
  return h;
}

Hamiltonian read_hamiltonian(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_hamiltonian_file(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  }
}

std::string format_hamiltonian(const Hamiltonian& h) {
  std::string out = std::to_string(h.n_qubits()) + "\n";
  for (const auto& term : h.terms()) {
    out += format_double(term.coeff);
    out += ' ';
    out += term.word.to_string();
    out += '\n';
  }
  return out;
}

void write_hamiltonian(const Hamiltonian& h,
                       const std::filesystem::path& path) {
  write_text_file(path, format_hamiltonian(h));
}

std::string trace_to_json(const EvolutionTrace& trace) {
  Json doc;
  doc["schema_version"] = kTraceSchemaVersion;
  doc["config"] = {
      {"total_time", trace.config.total_time},
      {"dt", trace.config.dt},
      {"delta_cut", trace.config.delta_cut},
      {"record_fidelity", trace.config.record_fidelity},
      {"max_growths_per_step", trace.config.max_growths_per_step},
  };
  Json ops = Json::array();
  for (const auto& op : trace.final_ansatz.ops()) {
    ops.push_back({{"word", op.word.to_string()}, {"param", op.param}});
  }
  doc["final_ansatz"] = {{"n_qubits", trace.final_ansatz.n_qubits()},
                         {"ops", std::move(ops)}};
  Json rows = Json::array();
  for (const auto& r : trace.records) {
    Json row = {{"t", r.t},
                {"delta", r.delta},
                {"delta_after", r.delta_after},
                {"ansatz_size", r.ansatz_size},
                {"cnot_count", r.cnot_count}};
    if (r.fidelity) row["fidelity"] = *r.fidelity;
    rows.push_back(std::move(row));
  }
  doc["records"] = std::move(rows);
  return doc.dump(2) + "\n";
}

EvolutionTrace trace_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("trace is not valid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kTraceSchemaVersion) {
      throw SchemaError("unsupported trace schema_version " +
                        std::to_string(version) + ", expected " +
                        std::to_string(kTraceSchemaVersion));
    }
    const auto& cfg = doc.at("config");
    EvolutionConfig config;
    config.total_time = cfg.at("total_time").get<double>();
    config.dt = cfg.at("dt").get<double>();
    config.delta_cut = cfg.at("delta_cut").get<double>();
    config.record_fidelity = cfg.at("record_fidelity").get<bool>();
    config.max_growths_per_step = cfg.at("max_growths_per_step").get<int>();

    const auto& fa = doc.at("final_ansatz");
    const int n = fa.at("n_qubits").get<int>();
    Ansatz ansatz(n);
    for (const auto& op : fa.at("ops")) {
      ansatz.append(PauliWord::parse(op.at("word").get<std::string>(), n),
                    op.at("param").get<double>());
    }

    EvolutionTrace trace{config, {}, std::move(ansatz)};
    for (const auto& row : doc.at("records")) {
      StepRecord r;
      r.t = row.at("t").get<double>();
      r.delta = row.at("delta").get<double>();
      r.delta_after = row.at("delta_after").get<double>();
      r.ansatz_size = row.at("ansatz_size").get<int>();
      r.cnot_count = row.at("cnot_count").get<std::int64_t>();
      if (row.contains("fidelity")) r.fidelity = row["fidelity"].get<double>();
      trace.records.push_back(r);
    }
    return trace;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed trace: ") + e.what());
  } catch (const ParseError& e) {
    throw SchemaError(std::string("malformed trace ansatz: ") + e.what());
  }
}

std::string trace_to_csv(const EvolutionTrace& trace) {
  std::string out = "t,delta,delta_after,ansatz_size,cnot_count,fidelity\r\n";
  for (const auto& r : trace.records) {
    out += format_double(r.t) + ',' + format_double(r.delta) + ',' +
           format_double(r.delta_after) + ',' + std::to_string(r.ansatz_size) +
           ',' + std::to_string(r.cnot_count) + ',';
    if (r.fidelity) out += format_double(*r.fidelity);
    out += "\r\n";
  }
  return out;
}

void write_trace(const EvolutionTrace& trace,
                 const std::filesystem::path& path) {
  write_text_file(path, trace_to_json(trace));
}

EvolutionTrace read_trace(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return trace_from_json(text);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_trace_csv(const EvolutionTrace& trace,
                     const std::filesystem::path& path) {
  write_text_file(path, trace_to_csv(trace));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return text;
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace adaptpf
