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

// Command-line front end. Standard output carries exactly one JSON document;
// diagnostics go to standard error. Exit codes: 0 success, 1 runtime or
// numerical failure, 2 usage error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adaptpf/adaptpf.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace adaptpf;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kOutputSchemaVersion = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit_error(int code, const std::string& kind, const std::string& message) {
  Json err = {{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

Json header(const std::string& command) {
  return {{"schema_version", kOutputSchemaVersion}, {"command", command}};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_positive(double v, const std::string& flag) {
  require(std::isfinite(v) && v > 0.0, flag + " must be positive and finite");
}

// Input problems are the caller's fault: they map to a usage error.
Hamiltonian load_hamiltonian(const std::string& path) {
  try {
    return read_hamiltonian(path);
  } catch (const IoError& e) {
    throw UsageError(e.what());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

StateVector load_init(const std::string& bits, const Hamiltonian& h) {
  require(static_cast<int>(bits.size()) == h.n_qubits(),
          "--init has " + std::to_string(bits.size()) +
              " characters but the Hamiltonian acts on " +
              std::to_string(h.n_qubits()) + " qubits");
  require(bits.find_first_not_of("01") == std::string::npos,
          "--init must contain only '0' and '1'");
  require(h.n_qubits() <= kMaxStateQubits,
          "state vectors are limited to " + std::to_string(kMaxStateQubits) +
              " qubits");
  return StateVector::from_bitstring(bits);
}

void require_dense(const Hamiltonian& h, const std::string& why) {
  require(h.n_qubits() <= kMaxDenseQubits,
          why + " needs the exact propagator, limited to " +
              std::to_string(kMaxDenseQubits) + " qubits");
}

EvolutionConfig evolution_config(double time, double dt, double delta_cut,
                                 bool fidelity, int max_growths) {
  require_positive(time, "--time");
  require_positive(dt, "--dt");
  require_positive(delta_cut, "--delta-cut");
  require(max_growths >= 0, "--max-growths must be >= 0");
  EvolutionConfig cfg{time, dt, delta_cut, fidelity, max_growths};
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

std::vector<int> parse_step_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    require(!tok.empty() && ec == std::errc() && end == tok.data() + tok.size() &&
                v >= 1,
            "--trotter-steps entries must be integers >= 1, got '" + tok + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  require(!out.empty(), "--trotter-steps needs at least one step count");
  return out;
}

Json complex_matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_json_file(const std::string& path, const Json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

// Subcommand options -------------------------------------------------------

struct GenTfimOptions {
  int spins = 6;
  std::uint64_t seed = 0;
  double coeff_sum = 6.0;
  std::string out;
};

struct EvolveOptions {
  std::string ham;
  std::string init;
  double time = 1.0;
  double dt = 5e-3;
  double delta_cut = 1e-4;
  int max_growths = 0;
  std::string trace;
  std::string csv;
  bool fidelity = false;
};

struct TrotterOptions {
  std::string ham;
  std::string init;
  double time = 1.0;
  int steps = 100;
  bool fidelity = false;
};

struct CompareOptions {
  std::string ham;
  std::string init;
  double time = 1.0;
  double dt = 5e-3;
  double delta_cut = 1e-4;
  int max_growths = 0;
  std::string trotter_steps;
  std::string out;
};

struct KrylovOptions {
  std::string ham;
  std::string init;
  int m = 0;
  double dt_krylov = 0.3;
  std::string backend = "exact";
  std::optional<double> delta_cut;
  std::optional<double> dt;
  double s_threshold = 1e-10;
  std::string out;
};

// Subcommands ---------------------------------------------------------------

int run_gen_tfim(const GenTfimOptions& o) {
  require(o.spins >= 2, "--spins must be >= 2");
  require(o.spins <= kMaxQubits, "--spins must be <= 64");
  require_positive(o.coeff_sum, "--coeff-sum");
  const Hamiltonian h = gen_tfim({o.spins, o.seed, o.coeff_sum});
  write_hamiltonian(h, o.out);
  Json doc = header("gen-tfim");
  doc["n_qubits"] = h.n_qubits();
  doc["terms"] = h.size();
  doc["weight_sum"] = h.weight_sum();
  doc["out"] = o.out;
  emit(doc);
  return 0;
}

int run_evolve(const EvolveOptions& o) {
  const auto cfg = evolution_config(o.time, o.dt, o.delta_cut, o.fidelity,
                                    o.max_growths);
  const Hamiltonian h = load_hamiltonian(o.ham);
  const StateVector psi0 = load_init(o.init, h);
  if (o.fidelity) require_dense(h, "--fidelity");

  const EvolutionTrace trace = adaptive_evolve(h, psi0, cfg);
  write_trace(trace, o.trace);
  if (!o.csv.empty()) write_trace_csv(trace, o.csv);

  const StepRecord& last = trace.records.back();
  Json doc = header("evolve");
  doc["steps"] = cfg.step_count();
  doc["ansatz_size"] = last.ansatz_size;
  doc["cnot_count"] = last.cnot_count;
  doc["final_delta"] = last.delta_after;
  if (last.fidelity) doc["final_fidelity"] = *last.fidelity;
  doc["trace"] = o.trace;
  emit(doc);
  return 0;
}

int run_trotter(const TrotterOptions& o) {
  require_positive(o.time, "--time");
  require(o.steps >= 1, "--steps must be >= 1");
  const Hamiltonian h = load_hamiltonian(o.ham);
  const StateVector psi0 = load_init(o.init, h);
  if (o.fidelity) require_dense(h, "--fidelity");

  const TrotterResult r = trotter_evolve(h, psi0, o.time, o.steps);
  Json doc = header("trotter");
  doc["steps"] = o.steps;
  doc["cnot_count"] = r.cnot_count;
  if (o.fidelity) {
    doc["final_fidelity"] = fidelity(exact_evolve(h, o.time, psi0), r.state);
  }
  emit(doc);
  return 0;
}

int run_compare(const CompareOptions& o) {
  const auto cfg =
      evolution_config(o.time, o.dt, o.delta_cut, true, o.max_growths);
  const std::vector<int> step_list = parse_step_list(o.trotter_steps);
  const Hamiltonian h = load_hamiltonian(o.ham);
  const StateVector psi0 = load_init(o.init, h);
  require_dense(h, "compare");

  const ExactPropagator exact(h);
  Json methods = Json::array();
  Json summary = Json::array();

  const EvolutionTrace trace = adaptive_evolve(h, psi0, cfg);
  {
    Json series = Json::array();
    for (const auto& r : trace.records) {
      series.push_back({{"t", r.t},
                        {"fidelity", *r.fidelity},
                        {"cnot_count", r.cnot_count}});
    }
    const auto& last = trace.records.back();
    methods.push_back({{"method", "adaptive"},
                       {"delta_cut", cfg.delta_cut},
                       {"dt", cfg.dt},
                       {"cnot_count", last.cnot_count},
                       {"final_fidelity", *last.fidelity},
                       {"series", std::move(series)}});
    summary.push_back({{"method", "adaptive"},
                       {"cnot_count", last.cnot_count},
                       {"final_fidelity", *last.fidelity}});
  }

  const std::int64_t per_step = trotter_step_cnot_count(h);
  for (int steps : step_list) {
    Json series = Json::array();
    const TrotterResult r = trotter_evolve(
        h, psi0, o.time, steps,
        [&](int step, double t, const StateVector& state) {
          series.push_back({{"t", t},
                            {"fidelity", fidelity(exact.evolve(t, psi0), state)},
                            {"cnot_count", step * per_step}});
        });
    const double f = series.back()["fidelity"].get<double>();
    const std::string name = "trotter:" + std::to_string(steps);
    methods.push_back({{"method", name},
                       {"steps", steps},
                       {"cnot_count", r.cnot_count},
                       {"final_fidelity", f},
                       {"series", std::move(series)}});
    summary.push_back(
        {{"method", name}, {"cnot_count", r.cnot_count}, {"final_fidelity", f}});
  }

  Json file = header("compare");
  file["total_time"] = o.time;
  file["init"] = o.init;
  file["methods"] = std::move(methods);
  write_json_file(o.out, file);

  Json doc = header("compare");
  doc["methods"] = std::move(summary);
  doc["out"] = o.out;
  emit(doc);
  return 0;
}

KrylovBackend parse_backend(const KrylovOptions& o) {
  const std::string& b = o.backend;
  const bool adaptive_flags = o.delta_cut.has_value() || o.dt.has_value();
  if (b == "exact" || b.rfind("trotter:", 0) == 0) {
    require(!adaptive_flags,
            "--delta-cut and --dt apply only to --backend adaptive");
  }
  if (b == "exact") return ExactBackend{};
  if (b.rfind("trotter:", 0) == 0) {
    const std::string tok = b.substr(8);
    int steps = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), steps);
    require(!tok.empty() && ec == std::errc() &&
                end == tok.data() + tok.size() && steps >= 1,
            "--backend trotter:STEPS needs an integer STEPS >= 1");
    return TrotterBackend{steps};
  }
  require(b == "adaptive",
          "--backend must be exact, trotter:STEPS or adaptive, got '" + b + "'");
  EvolutionConfig cfg;
  cfg.delta_cut = o.delta_cut.value_or(cfg.delta_cut);
  cfg.dt = o.dt.value_or(cfg.dt);
  require_positive(cfg.delta_cut, "--delta-cut");
  require_positive(cfg.dt, "--dt");
  const double ratio = o.dt_krylov / cfg.dt;
  require(std::abs(ratio - std::round(ratio)) <= 1e-9 && std::round(ratio) >= 1,
          "--dt-krylov must be an integer multiple of --dt");
  return AdaptiveBackend{cfg};
}

int run_krylov(const KrylovOptions& o) {
  require(o.m >= 0, "--m must be >= 0");
  require_positive(o.dt_krylov, "--dt-krylov");
  require(o.s_threshold > 0.0 && o.s_threshold < 1.0,
          "--s-threshold must lie in (0, 1)");
  const KrylovBackend backend = parse_backend(o);
  const Hamiltonian h = load_hamiltonian(o.ham);
  const StateVector phi0 = load_init(o.init, h);
  if (std::holds_alternative<ExactBackend>(backend)) {
    require_dense(h, "--backend exact");
  }

  const KrylovConfig cfg{o.m, o.dt_krylov, o.s_threshold};
  const KrylovResult r = krylov_ground_energy(h, phi0, cfg, backend);

  Json energies = Json::array();
  for (double e : r.spectrum.energies) energies.push_back(e);
  Json file = header("krylov");
  file["backend"] = o.backend;
  file["m"] = o.m;
  file["dt_krylov"] = o.dt_krylov;
  file["s_threshold"] = o.s_threshold;
  file["energy"] = r.energy;
  file["kept_rank"] = r.spectrum.kept_rank;
  file["cnot_count"] = r.cnot_count;
  file["energies"] = energies;
  file["s_matrix"] = complex_matrix_json(r.matrices.s_matrix);
  file["h_matrix"] = complex_matrix_json(r.matrices.h_matrix);
  write_json_file(o.out, file);

  Json doc = header("krylov");
  doc["energy"] = r.energy;
  doc["kept_rank"] = r.spectrum.kept_rank;
  if (!std::holds_alternative<ExactBackend>(backend)) {
    doc["cnot_count"] = r.cnot_count;
  }
  doc["out"] = o.out;
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive product-formula Hamiltonian simulation"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GenTfimOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-tfim", "Write a random TFIM Hamiltonian");
  gen_cmd->add_option("--spins", gen.spins, "Number of spins (>= 2)")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--coeff-sum", gen.coeff_sum, "Target coefficient sum");
  gen_cmd->add_option("--out", gen.out, "Output Hamiltonian file")->required();

  EvolveOptions ev;
  auto* ev_cmd = app.add_subcommand("evolve", "Adaptive product-formula evolution");
  ev_cmd->add_option("--ham", ev.ham, "Hamiltonian file")->required();
  ev_cmd->add_option("--init", ev.init, "Initial bitstring, qubit 0 first")->required();
  ev_cmd->add_option("--time", ev.time, "Total time");
  ev_cmd->add_option("--dt", ev.dt, "Time step");
  ev_cmd->add_option("--delta-cut", ev.delta_cut, "Growth threshold on Delta");
  ev_cmd->add_option("--max-growths", ev.max_growths, "Cap on appends per step (0 = term count)");
  ev_cmd->add_option("--trace", ev.trace, "Trace JSON output")->required();
  ev_cmd->add_option("--csv", ev.csv, "Optional trace CSV output");
  ev_cmd->add_flag("--fidelity", ev.fidelity, "Record fidelity against exact evolution");

  TrotterOptions tr;
  auto* tr_cmd = app.add_subcommand("trotter", "First-order Trotter evolution");
  tr_cmd->add_option("--ham", tr.ham, "Hamiltonian file")->required();
  tr_cmd->add_option("--init", tr.init, "Initial bitstring, qubit 0 first")->required();
  tr_cmd->add_option("--time", tr.time, "Total time");
  tr_cmd->add_option("--steps", tr.steps, "Trotter steps");
  tr_cmd->add_flag("--fidelity", tr.fidelity, "Report fidelity against exact evolution");

  CompareOptions cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Adaptive evolution against Trotter");
  cmp_cmd->add_option("--ham", cmp.ham, "Hamiltonian file")->required();
  cmp_cmd->add_option("--init", cmp.init, "Initial bitstring, qubit 0 first")->required();
  cmp_cmd->add_option("--time", cmp.time, "Total time");
  cmp_cmd->add_option("--dt", cmp.dt, "Adaptive time step");
  cmp_cmd->add_option("--delta-cut", cmp.delta_cut, "Growth threshold on Delta");
  cmp_cmd->add_option("--max-growths", cmp.max_growths, "Cap on appends per step (0 = term count)");
  cmp_cmd->add_option("--trotter-steps", cmp.trotter_steps, "Comma-separated step counts")->required();
  cmp_cmd->add_option("--out", cmp.out, "Comparison JSON output")->required();

  KrylovOptions kr;
  auto* kr_cmd = app.add_subcommand("krylov", "Quantum Krylov ground-energy estimate");
  kr_cmd->add_option("--ham", kr.ham, "Hamiltonian file")->required();
  kr_cmd->add_option("--init", kr.init, "Reference bitstring, qubit 0 first")->required();
  kr_cmd->add_option("--m", kr.m, "Highest Krylov power (dimension m + 1)");
  kr_cmd->add_option("--dt-krylov", kr.dt_krylov, "Time spacing of Krylov states");
  kr_cmd->add_option("--backend", kr.backend, "exact | trotter:STEPS | adaptive");
  kr_cmd->add_option("--delta-cut", kr.delta_cut, "Adaptive backend growth threshold");
  kr_cmd->add_option("--dt", kr.dt, "Adaptive backend time step");
  kr_cmd->add_option("--s-threshold", kr.s_threshold, "Relative overlap eigenvalue cutoff");
  kr_cmd->add_option("--out", kr.out, "Krylov JSON output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cerr << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cerr << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(kExitUsage, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen_tfim(gen);
    if (*ev_cmd) return run_evolve(ev);
    if (*tr_cmd) return run_trotter(tr);
    if (*cmp_cmd) return run_compare(cmp);
    if (*kr_cmd) return run_krylov(kr);
  } catch (const UsageError& e) {
    emit_error(kExitUsage, "usage", e.what());
    return kExitUsage;
  } catch (const ConfigError& e) {
    emit_error(kExitUsage, "usage", e.what());
    return kExitUsage;
  } catch (const GrowthStallError& e) {
    emit_error(kExitRuntime, "growth_stall",
               std::string(e.what()) + " (residual " +
                   std::to_string(e.residual()) + ")");
    return kExitRuntime;
  } catch (const DegenerateSubspaceError& e) {
    emit_error(kExitRuntime, "degenerate_subspace",
               std::string(e.what()) + "; try a smaller --s-threshold or --m");
    return kExitRuntime;
  } catch (const IoError& e) {
    emit_error(kExitRuntime, "io", e.what());
    return kExitRuntime;
  } catch (const Error& e) {
    emit_error(kExitRuntime, "runtime", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    emit_error(kExitRuntime, "internal", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
