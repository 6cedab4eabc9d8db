// Copyright 2026 the pfgsynth authors
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

// Command-line surface: generate model Hamiltonians, synthesize Trotter
// circuits with either pipeline, certify circuits against their rotation
// manifests, and run benchmark suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pfg/bench.hpp"
#include "pfg/circuit.hpp"
#include "pfg/frame.hpp"
#include "pfg/ham.hpp"
#include "pfg/synth_baseline.hpp"
#include "pfg/synth_pfg.hpp"
#include "pfg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int fail_usage(const std::string& msg) {
  std::cerr << "pfgsynth: " << msg << "\n";
  return kExitUsage;
}

int fail_io(const std::string& msg) {
  std::cerr << "pfgsynth: " << msg << "\n";
  return kExitIo;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed on " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write failed on " + path);
}

std::size_t default_workers() {
  if (const char* env = std::getenv("PFGSYNTH_WORKERS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

struct GenArgs {
  std::string model;
  std::size_t sites = 2;
  std::size_t modes = 2;
  std::string mapping = "jw";
  std::string encoding = "std";
  std::size_t levels = 4;
  double t = 1.0;
  double u = 4.0;
  bool periodic = false;
  std::uint64_t seed = 1;
  std::string output;
};

int run_gen(const GenArgs& a, bool mapping_given, bool encoding_given,
            bool levels_given) {
  const bool fermionic = a.model == "fermi-hubbard";
  const bool bosonic = a.model == "bose-hubbard" || a.model == "vibronic";
  if (fermionic && (encoding_given || levels_given)) {
    return fail_usage("--encoding/--levels apply to bosonic models only");
  }
  if (bosonic && mapping_given) {
    return fail_usage("--mapping applies to fermionic models only");
  }

  pfg::PauliSumHamiltonian h;
  try {
    if (a.model == "fermi-hubbard") {
      const auto map = a.mapping == "bk" ? pfg::FermionMapping::kBravyiKitaev
                                         : pfg::FermionMapping::kJordanWigner;
      h = pfg::fermi_hubbard(a.sites, a.t, a.u, map, a.periodic);
    } else {
      const pfg::BosonEncoding enc{a.encoding == "gray"
                                       ? pfg::BosonCode::kGray
                                       : pfg::BosonCode::kStandardBinary,
                                   a.levels};
      h = a.model == "bose-hubbard"
              ? pfg::bose_hubbard(a.sites, a.t, a.u, enc)
              : pfg::vibronic(a.modes, enc, a.seed);
    }
  } catch (const std::invalid_argument& e) {
    return fail_usage(e.what());
  }

  try {
    if (a.output.empty()) {
      std::cout << pfg::format_hamiltonian_text(h);
    } else {
      pfg::save_hamiltonian(h, a.output);
      std::cout << "qubits " << h.n_qubits << "\nterms " << h.terms.size()
                << "\n";
    }
  } catch (const std::exception& e) {
    return fail_io(e.what());
  }
  return kExitOk;
}

struct SynthArgs {
  std::string input;
  std::string method = "pfg";
  double credit = 0.1;
  double dt = 1.0;
  std::string tie_break = "zxy";
  bool retrace = false;
  bool close_cycle = false;
  bool expand_tqe = false;
  std::size_t workers = 1;
  double cancel_seconds = 60.0;
  std::string output;
  std::string manifest_path;
  std::string metrics_path;
};

std::string format_metrics(std::size_t n_qubits, std::size_t n_terms,
                           const pfg::Metrics& m) {
  std::ostringstream ss;
  ss << "n_qubits " << n_qubits << "\n"
     << "n_terms " << n_terms << "\n"
     << "tqe_count " << m.tqe_count << "\n"
     << "rotation_count " << m.rotation_count << "\n"
     << "depth_all " << m.depth_all << "\n"
     << "depth_tqe " << m.depth_tqe << "\n"
     << "tqe_per_term " << m.tqe_per_term << "\n";
  return ss.str();
}

int run_synth(const SynthArgs& a) {
  if (a.retrace && a.close_cycle) {
    return fail_usage("--retrace cannot be combined with --close-cycle");
  }

  pfg::PauliSumHamiltonian h;
  try {
    h = pfg::load_hamiltonian(a.input);
  } catch (const std::exception& e) {
    return fail_io(e.what());
  }

  pfg::Circuit circuit(h.n_qubits);
  pfg::Metrics metrics;
  std::vector<pfg::RotationRecord> manifest;
  try {
    if (a.method == "pfg") {
      pfg::SynthConfig cfg;
      cfg.credit = a.credit;
      cfg.dt = a.dt;
      cfg.tie_break = a.tie_break;
      cfg.retrace = a.retrace;
      cfg.close_cycle = a.close_cycle;
      cfg.n_workers = a.workers;
      pfg::SynthResult res = pfg::synth(h, cfg);
      circuit = std::move(res.circuit);
      metrics = res.metrics;
      manifest = std::move(res.manifest);
    } else {
      if (a.retrace || a.close_cycle) {
        return fail_usage(
            "--retrace/--close-cycle apply to the pfg method only");
      }
      pfg::CancelConfig cc;
      cc.time_limit = a.cancel_seconds;
      pfg::BaselineResult res = pfg::synth_baseline(h, a.dt, cc);
      circuit = std::move(res.circuit);
      metrics = res.metrics;
      manifest = std::move(res.manifest);
    }
  } catch (const std::invalid_argument& e) {
    return fail_usage(e.what());
  }

  const std::string circuit_text = pfg::export_text(circuit, a.expand_tqe);
  const std::string manifest_text =
      pfg::format_manifest(h.n_qubits, manifest);
  const std::string metrics_text =
      format_metrics(h.n_qubits, h.terms.size(), metrics);
  try {
    if (a.output.empty()) {
      std::cout << circuit_text;
    } else {
      write_file(a.output, circuit_text);
      const std::string mpath = a.manifest_path.empty()
                                    ? a.output + ".manifest"
                                    : a.manifest_path;
      write_file(mpath, manifest_text);
      std::cout << metrics_text;
    }
    if (!a.metrics_path.empty()) write_file(a.metrics_path, metrics_text);
    if (a.output.empty() && !a.manifest_path.empty()) {
      write_file(a.manifest_path, manifest_text);
    }
  } catch (const std::exception& e) {
    return fail_io(e.what());
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string ham_path;
  std::string circuit_path;
  std::string manifest_path;
  double tol = 1e-9;
};

int run_verify(const VerifyArgs& a) {
  pfg::PauliSumHamiltonian h;
  pfg::Circuit circuit(1);
  pfg::ParsedManifest manifest;
  try {
    h = pfg::load_hamiltonian(a.ham_path);
    circuit = pfg::import_text(read_file(a.circuit_path));
    manifest = pfg::parse_manifest(read_file(a.manifest_path));
  } catch (const std::exception& e) {
    return fail_io(e.what());
  }

  if (h.n_qubits > pfg::kPathCheckQubitCap) {
    return fail_usage("dense verification is capped at " +
                      std::to_string(pfg::kPathCheckQubitCap) +
                      " qubits; this instance has " +
                      std::to_string(h.n_qubits));
  }
  if (circuit.n_qubits != h.n_qubits || manifest.n_qubits != h.n_qubits) {
    std::cerr << "pfgsynth: register size mismatch between inputs\n";
    return kExitVerifyFail;
  }

  // Every manifest rotation must be a Hamiltonian term.
  for (const pfg::RotationRecord& r : manifest.records) {
    bool known = false;
    for (const pfg::HamTerm& t : h.terms) {
      if (t.pauli == r.pauli) {
        known = true;
        break;
      }
    }
    if (!known) {
      std::cerr << "FAIL manifest rotation " << pfg::format_pauli(r.pauli)
                << " is not a Hamiltonian term\n";
      return kExitVerifyFail;
    }
  }

  // The final frame is implied by the circuit's Clifford content.
  pfg::SignedFrame frame(h.n_qubits);
  for (const pfg::Gate& g : circuit.gates) {
    if (!g.is_rotation()) frame.apply(g);
  }

  const pfg::PathCheck pc =
      pfg::check_path_equivalence(circuit, manifest.records, frame, a.tol);
  if (!pc.pass) {
    std::cout << "FAIL defect " << pc.defect << " frobenius " << pc.frobenius
              << "\n";
    return kExitVerifyFail;
  }
  std::cout << "PASS defect " << pc.defect << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string suite_path;
  std::string out_dir;
  std::size_t workers = 0;  // 0: keep the suite's own setting
};

int run_bench(const BenchArgs& a) {
  std::string text;
  try {
    text = read_file(a.suite_path);
  } catch (const std::exception& e) {
    return fail_io(e.what());
  }
  pfg::BenchSuite suite;
  try {
    suite = pfg::parse_suite_json(text);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  if (a.workers > 0) suite.config.workers = a.workers;

  const std::vector<pfg::BenchRow> rows = pfg::run_sweep(suite);
  try {
    pfg::emit_report(rows, a.out_dir);
  } catch (const std::exception& e) {
    return fail_io(e.what());
  }
  std::size_t failures = 0;
  for (const pfg::BenchRow& r : rows) {
    if (!r.error.empty()) {
      ++failures;
      std::cerr << "FAILED " << r.error << "\n";
    }
  }
  std::cout << "rows " << rows.size() << " failed " << failures
            << " report " << a.out_dir << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Trotter-circuit synthesis: Pauli-frame walks and the staircase "
      "baseline"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate a model Hamiltonian file");
  gen_cmd
      ->add_option("--model", gen.model,
                   "fermi-hubbard | bose-hubbard | vibronic")
      ->required()
      ->check(CLI::IsMember({"fermi-hubbard", "bose-hubbard", "vibronic"}));
  gen_cmd->add_option("--sites", gen.sites, "lattice sites (Hubbard models)");
  gen_cmd->add_option("--modes", gen.modes, "vibrational modes (vibronic)");
  CLI::Option* mapping_opt =
      gen_cmd->add_option("--mapping", gen.mapping, "jw | bk (fermionic)")
          ->check(CLI::IsMember({"jw", "bk"}));
  CLI::Option* encoding_opt =
      gen_cmd->add_option("--encoding", gen.encoding, "std | gray (bosonic)")
          ->check(CLI::IsMember({"std", "gray"}));
  CLI::Option* levels_opt = gen_cmd->add_option(
      "--levels", gen.levels, "boson levels per mode (power of two)");
  gen_cmd->add_option("--t", gen.t, "hopping strength");
  gen_cmd->add_option("--u", gen.u, "interaction strength");
  gen_cmd->add_flag("--periodic", gen.periodic,
                    "periodic boundary (fermi-hubbard)");
  gen_cmd->add_option("--seed", gen.seed, "sampling seed (vibronic)");
  gen_cmd->add_option("-o,--output", gen.output,
                      "output path (default: stdout)");

  SynthArgs synth_args;
  synth_args.workers = default_workers();
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Synthesize a Trotter-step circuit");
  synth_cmd->add_option("input", synth_args.input, "Hamiltonian file")
      ->required();
  synth_cmd
      ->add_option("--method", synth_args.method, "pfg | staircase")
      ->check(CLI::IsMember({"pfg", "staircase"}));
  synth_cmd->add_option("--credit", synth_args.credit,
                        "parallelization credit weight (pfg)");
  synth_cmd->add_option("--dt", synth_args.dt, "Trotter step size");
  synth_cmd
      ->add_option("--tie-break", synth_args.tie_break,
                   "candidate axis order: zxy | xyz")
      ->check(CLI::IsMember({"zxy", "xyz"}));
  synth_cmd->add_flag("--retrace", synth_args.retrace,
                      "append the reversed step (second order)");
  synth_cmd->add_flag("--close-cycle", synth_args.close_cycle,
                      "walk the frame back to the origin");
  synth_cmd->add_flag("--expand-tqe", synth_args.expand_tqe,
                      "write entanglers as basis changes around CX");
  synth_cmd->add_option("--workers", synth_args.workers,
                        "cost-evaluation threads (env PFGSYNTH_WORKERS)");
  synth_cmd->add_option("--cancel-seconds", synth_args.cancel_seconds,
                        "staircase cancellation budget");
  synth_cmd->add_option("-o,--output", synth_args.output,
                        "circuit path (default: stdout)");
  synth_cmd->add_option("--manifest", synth_args.manifest_path,
                        "rotation manifest path (default: <output>.manifest)");
  synth_cmd->add_option("--metrics", synth_args.metrics_path,
                        "also write the metrics record here");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Certify a circuit against its rotation manifest");
  verify_cmd->add_option("hamiltonian", verify_args.ham_path, "Hamiltonian file")
      ->required();
  verify_cmd->add_option("circuit", verify_args.circuit_path, "circuit file")
      ->required();
  verify_cmd
      ->add_option("manifest", verify_args.manifest_path,
                   "rotation manifest file")
      ->required();
  verify_cmd->add_option("--tol", verify_args.tol,
                         "Frobenius tolerance (default 1e-9)");

  BenchArgs bench_args;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run a benchmark suite file");
  bench_cmd->add_option("suite", bench_args.suite_path, "suite JSON file")
      ->required();
  bench_cmd->add_option("-o,--output", bench_args.out_dir, "report directory")
      ->required();
  bench_cmd->add_option("--workers", bench_args.workers,
                        "instance pool size (overrides the suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*gen_cmd) {
    return run_gen(gen, mapping_opt->count() > 0, encoding_opt->count() > 0,
                   levels_opt->count() > 0);
  }
  if (*synth_cmd) return run_synth(synth_args);
  if (*verify_cmd) return run_verify(verify_args);
  return run_bench(bench_args);
}
