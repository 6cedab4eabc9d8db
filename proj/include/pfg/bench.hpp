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

/**
 * Size sweeps over the model generators under both synthesizers, collected
 * into deterministic tables: entangler counts, depths, and timing columns
 * for scaling fits. Suites are described in a small JSON format so runs are
 * reproducible from a single file.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pfg/ham.hpp"

namespace pfg {

/** One model family plus the instance sizes to sweep. */
struct ModelSpec {
  std::string model;        ///< fermi-hubbard | bose-hubbard | vibronic | file
  std::string mapping = "jw";    ///< fermionic models: jw | bk
  std::string encoding = "std";  ///< bosonic models: std | gray
  std::size_t levels = 4;        ///< bosonic truncation (power of two)
  std::vector<std::size_t> sizes;  ///< sites or modes, one instance each
  double t = 1.0;                ///< hopping strength
  double u = 4.0;                ///< interaction strength
  bool periodic = false;         ///< fermi-hubbard boundary
  std::string path;              ///< file model: Hamiltonian file to load
  std::string label;             ///< file model: instance name override
};

/** Knobs shared by every instance in a suite. */
struct BenchConfig {
  std::size_t workers = 1;        ///< instance pool size
  std::size_t synth_workers = 1;  ///< inner cost-evaluation threads (pfg)
  double dt = 1.0;
  double credit = 0.1;
  std::string tie_break = "zxy";
  double cancel_time_limit = 60.0;  ///< baseline sweep budget; 10 in CI
  std::uint64_t seed = 1;           ///< sampled-parameter models
};

struct BenchSuite {
  std::vector<ModelSpec> models;
  std::vector<std::string> methods = {"pfg", "baseline"};
  BenchConfig config;
};

/**
 * Parse a suite from JSON text. Top-level keys: "models" (required array),
 * "methods", and flat config keys (dt, credit, tie_break, workers,
 * synth_workers, cancel_time_limit, seed). Model objects take the ModelSpec
 * fields by name, with "sizes" required for generator models and "path" for
 * file models. Malformed input throws std::runtime_error.
 */
BenchSuite parse_suite_json(const std::string& text);

/** One (instance, method) outcome. Timing fields vary run to run; all other
 * fields are deterministic for a fixed suite. */
struct BenchRow {
  std::string instance;  ///< e.g. "fermi-hubbard-jw-8"
  std::string group;     ///< instance minus the size, e.g. "fermi-hubbard-jw"
  std::string method;    ///< pfg | baseline
  std::size_t n_qubits = 0;
  std::size_t n_terms = 0;
  std::size_t tqe_count = 0;
  double tqe_per_term = 0.0;
  std::int64_t depth_all = 0;
  std::int64_t depth_tqe = 0;
  double wall_s = 0.0;
  double cpu_s = 0.0;  ///< wall time times the worker count that produced it
  std::string error;   ///< nonempty: the instance failed and metrics are void
};

/**
 * Run every (model instance, method) pair over a worker pool. Rows come back
 * in suite order regardless of the pool size. The pfg method synthesizes the
 * Trotter path (no closing walk). Instances up to ten qubits are also
 * certified against the dense path identity; any per-instance failure —
 * generation, synthesis, or certification — is captured in that row's error
 * field without stopping the rest of the suite.
 */
std::vector<BenchRow> run_sweep(const BenchSuite& suite);

/**
 * Write results.csv (one header plus one line per successful row, timing
 * columns last) and summary.txt (per-group log-log cpu-time slopes and any
 * failed instances) into dir, creating it if needed. Throws
 * std::runtime_error on I/O failure.
 */
void emit_report(const std::vector<BenchRow>& rows, const std::string& dir);

/** Least-squares slope of log(y) against log(x). Nonpositive values are
 * clamped to avoid infinities; fewer than two points give 0. */
double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y);

}  // namespace pfg
