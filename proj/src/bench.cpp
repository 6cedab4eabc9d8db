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

#include "pfg/bench.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "pfg/frame.hpp"
#include "pfg/synth_baseline.hpp"
#include "pfg/synth_pfg.hpp"
#include "pfg/verify.hpp"

namespace pfg {

namespace {

using nlohmann::json;

[[noreturn]] void suite_fail(const std::string& what) {
  throw std::runtime_error("suite: " + what);
}

bool power_of_two(std::size_t v) { return v >= 2 && (v & (v - 1)) == 0; }

ModelSpec parse_model(const json& j) {
  if (!j.is_object()) suite_fail("model entries must be objects");
  ModelSpec m;
  m.model = j.value("model", std::string());
  if (m.model != "fermi-hubbard" && m.model != "bose-hubbard" &&
      m.model != "vibronic" && m.model != "file") {
    suite_fail("unknown model '" + m.model + "'");
  }
  m.mapping = j.value("mapping", m.mapping);
  if (m.mapping != "jw" && m.mapping != "bk") {
    suite_fail("unknown mapping '" + m.mapping + "'");
  }
  m.encoding = j.value("encoding", m.encoding);
  if (m.encoding != "std" && m.encoding != "gray") {
    suite_fail("unknown encoding '" + m.encoding + "'");
  }
  m.levels = j.value("levels", m.levels);
  if (m.model == "bose-hubbard" || m.model == "vibronic") {
    if (!power_of_two(m.levels)) {
      suite_fail("levels must be a power of two, got " +
                 std::to_string(m.levels));
    }
  }
  m.t = j.value("t", m.t);
  m.u = j.value("u", m.u);
  m.periodic = j.value("periodic", m.periodic);
  m.path = j.value("path", m.path);
  m.label = j.value("label", m.label);
  if (j.contains("sizes")) {
    if (!j["sizes"].is_array() || j["sizes"].empty()) {
      suite_fail("sizes must be a non-empty array");
    }
    for (const auto& s : j["sizes"]) {
      if (!s.is_number_unsigned() || s.get<std::size_t>() == 0) {
        suite_fail("sizes must be positive integers");
      }
      m.sizes.push_back(s.get<std::size_t>());
    }
  }
  if (m.model == "file") {
    if (m.path.empty()) suite_fail("file model needs a path");
    if (m.sizes.empty()) m.sizes.push_back(0);  // one instance, size unused
  } else if (m.sizes.empty()) {
    suite_fail("model '" + m.model + "' needs sizes");
  }
  return m;
}

}  // namespace

BenchSuite parse_suite_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    suite_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) suite_fail("top level must be an object");
  // A mistyped key would silently fall back to a default, so reject any
  // name outside the schema outright.
  static const std::set<std::string> known = {
      "models",  "methods",   "workers", "synth_workers",
      "dt",      "credit",    "tie_break", "cancel_time_limit",
      "seed"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) suite_fail("unknown key '" + it.key() + "'");
  }
  BenchSuite suite;
  if (!j.contains("models") || !j["models"].is_array() || j["models"].empty()) {
    suite_fail("a non-empty models array is required");
  }
  for (const auto& m : j["models"]) suite.models.push_back(parse_model(m));
  if (j.contains("methods")) {
    if (!j["methods"].is_array() || j["methods"].empty()) {
      suite_fail("methods must be a non-empty array");
    }
    suite.methods.clear();
    for (const auto& m : j["methods"]) {
      const std::string name = m.get<std::string>();
      if (name != "pfg" && name != "baseline") {
        suite_fail("unknown method '" + name + "'");
      }
      suite.methods.push_back(name);
    }
  }
  BenchConfig& cfg = suite.config;
  cfg.workers = j.value("workers", cfg.workers);
  cfg.synth_workers = j.value("synth_workers", cfg.synth_workers);
  cfg.dt = j.value("dt", cfg.dt);
  cfg.credit = j.value("credit", cfg.credit);
  cfg.tie_break = j.value("tie_break", cfg.tie_break);
  cfg.cancel_time_limit = j.value("cancel_time_limit", cfg.cancel_time_limit);
  cfg.seed = j.value("seed", cfg.seed);
  if (cfg.workers == 0 || cfg.synth_workers == 0) {
    suite_fail("worker counts must be positive");
  }
  return suite;
}

namespace {

struct Task {
  const ModelSpec* model;
  std::size_t size;
  std::string method;
  std::string instance;
  std::string group;
};

std::string group_label(const ModelSpec& m) {
  if (m.model == "file") return m.label.empty() ? "file" : m.label;
  std::string g = m.model;
  if (m.model == "fermi-hubbard") {
    g += "-" + m.mapping;
  } else {
    g += "-" + m.encoding + std::to_string(m.levels);
  }
  return g;
}

PauliSumHamiltonian build_instance(const ModelSpec& m, std::size_t size,
                                   const BenchConfig& cfg) {
  if (m.model == "fermi-hubbard") {
    const FermionMapping map = m.mapping == "bk"
                                   ? FermionMapping::kBravyiKitaev
                                   : FermionMapping::kJordanWigner;
    return fermi_hubbard(size, m.t, m.u, map, m.periodic);
  }
  const BosonEncoding enc{
      m.encoding == "gray" ? BosonCode::kGray : BosonCode::kStandardBinary,
      m.levels};
  if (m.model == "bose-hubbard") return bose_hubbard(size, m.t, m.u, enc);
  if (m.model == "vibronic") return vibronic(size, enc, cfg.seed);
  return load_hamiltonian(m.path);
}

BenchRow run_task(const Task& task, const BenchConfig& cfg) {
  BenchRow row;
  row.instance = task.instance;
  row.group = task.group;
  row.method = task.method;
  try {
    const PauliSumHamiltonian h = build_instance(*task.model, task.size, cfg);
    row.n_qubits = h.n_qubits;
    row.n_terms = h.terms.size();

    Metrics metrics;
    Circuit circuit(h.n_qubits);
    std::vector<RotationRecord> manifest;
    SignedFrame final_frame(h.n_qubits);
    double workers_used = 1.0;

    const auto start = std::chrono::steady_clock::now();
    if (task.method == "pfg") {
      SynthConfig sc;
      sc.credit = cfg.credit;
      sc.dt = cfg.dt;
      sc.tie_break = cfg.tie_break;
      sc.n_workers = cfg.synth_workers;
      SynthResult res = synth(h, sc);
      metrics = res.metrics;
      circuit = std::move(res.circuit);
      manifest = std::move(res.manifest);
      final_frame = std::move(res.final_frame);
      workers_used = static_cast<double>(cfg.synth_workers);
    } else {
      CancelConfig cc;
      cc.time_limit = cfg.cancel_time_limit;
      BaselineResult res = synth_baseline(h, cfg.dt, cc);
      metrics = res.metrics;
      circuit = std::move(res.circuit);
      manifest = std::move(res.manifest);
    }
    const auto stop = std::chrono::steady_clock::now();

    row.tqe_count = metrics.tqe_count;
    row.tqe_per_term = metrics.tqe_per_term;
    row.depth_all = metrics.depth_all;
    row.depth_tqe = metrics.depth_tqe;
    row.wall_s = std::chrono::duration<double>(stop - start).count();
    row.cpu_s = row.wall_s * workers_used;

    if (h.n_qubits <= kPathCheckQubitCap) {
      const PathCheck pc =
          check_path_equivalence(circuit, manifest, final_frame);
      if (!pc.pass) {
        throw std::runtime_error("dense certification failed, defect " +
                                 std::to_string(pc.defect));
      }
    }
  } catch (const std::exception& e) {
    row.error = task.instance + " (" + task.method + "): " + e.what();
  }
  return row;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_sweep(const BenchSuite& suite) {
  std::vector<Task> tasks;
  for (const ModelSpec& m : suite.models) {
    const std::string group = group_label(m);
    for (const std::size_t size : m.sizes) {
      const std::string instance =
          m.model == "file" ? group : group + "-" + std::to_string(size);
      for (const std::string& method : suite.methods) {
        tasks.push_back(Task{&m, size, method, instance, group});
      }
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  const std::size_t pool =
      std::max<std::size_t>(1, std::min(suite.config.workers, tasks.size()));
  if (pool == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      rows[i] = run_task(tasks[i], suite.config);
    }
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (std::size_t w = 0; w < pool; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        rows[i] = run_task(tasks[i], suite.config);
      }
    });
  }
  for (std::thread& t : threads) t.join();
  return rows;
}

double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(std::max(x[i], 1e-300));
    const double ly = std::log(std::max(y[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  return denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
}

void emit_report(const std::vector<BenchRow>& rows, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("emit_report: cannot create " + dir + ": " +
                             ec.message());
  }

  const std::string csv_path = dir + "/results.csv";
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("emit_report: cannot write " + csv_path);
  csv << "instance,method,n_qubits,n_terms,tqe_count,tqe_per_term,"
         "depth_all,depth_tqe,wall_s,cpu_s\n";
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) continue;
    csv << r.instance << ',' << r.method << ',' << r.n_qubits << ','
        << r.n_terms << ',' << r.tqe_count << ','
        << format_double(r.tqe_per_term) << ',' << r.depth_all << ','
        << r.depth_tqe << ',' << format_double(r.wall_s) << ','
        << format_double(r.cpu_s) << '\n';
  }
  csv.close();
  if (!csv) throw std::runtime_error("emit_report: write failed: " + csv_path);

  // Per-(group, method) scaling fit of cpu time against problem size.
  std::map<std::pair<std::string, std::string>,
           std::pair<std::vector<double>, std::vector<double>>>
      fits;
  std::size_t failures = 0;
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) {
      ++failures;
      continue;
    }
    auto& [xs, ys] = fits[{r.group, r.method}];
    xs.push_back(static_cast<double>(r.n_qubits) *
                 static_cast<double>(r.n_terms));
    ys.push_back(r.cpu_s);
  }

  const std::string sum_path = dir + "/summary.txt";
  std::ofstream sum(sum_path);
  if (!sum) throw std::runtime_error("emit_report: cannot write " + sum_path);
  sum << "instances: " << rows.size() << " (" << failures << " failed)\n";
  for (const auto& [key, data] : fits) {
    sum << key.first << " " << key.second << ": ";
    if (data.first.size() < 2) {
      sum << data.first.size() << " point(s), no fit\n";
      continue;
    }
    sum << "cpu-time slope "
        << format_double(fit_loglog_slope(data.first, data.second)) << " over "
        << data.first.size() << " instances\n";
  }
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) sum << "FAILED " << r.error << '\n';
  }
  sum.close();
  if (!sum) throw std::runtime_error("emit_report: write failed: " + sum_path);
}

}  // namespace pfg
