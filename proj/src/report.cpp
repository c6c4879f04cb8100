// Copyright 2026 The Hypervert Authors
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

#include "hypervert/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hypervert/moss.hpp"
#include "hypervert/oracle.hpp"

namespace hypervert {
namespace {

std::vector<Point> sorted_points(const EnumerationResult& r) {
  std::vector<Point> pts;
  pts.reserve(r.vertices.size());
  for (const auto& v : r.vertices) pts.push_back(v.coords);
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::string join_counts(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

nlohmann::json stats_json(const SearchStats& s) {
  return {{"dictionaries_visited", s.dictionaries_visited},
          {"pivots", s.pivots},
          {"reverse_tests", s.reverse_tests},
          {"lexmin_tests", s.lexmin_tests},
          {"max_depth", s.max_depth},
          {"layer_counts", s.layer_counts},
          {"vertices_emitted", s.vertices_emitted},
          {"stored_cobases", s.stored_cobases}};
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "zero") return Algorithm::kZero;
  if (name == "crisscross") return Algorithm::kCrissCross;
  if (name == "crisscross-af") return Algorithm::kCrissCrossAf;
  if (name == "moss") return Algorithm::kMoss;
  if (name == "oracle") return Algorithm::kOracle;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kZero: return "zero";
    case Algorithm::kCrissCross: return "crisscross";
    case Algorithm::kCrissCrossAf: return "crisscross-af";
    case Algorithm::kMoss: return "moss";
    case Algorithm::kOracle: return "oracle";
  }
  return "?";
}

EnumerationResult oracle_as_result(const Arrangement& arr) {
  const OracleResult oracle = oracle_enumerate(arr);
  EnumerationResult out;
  for (const auto& v : oracle.vertices) out.vertices.push_back(v.record);
  out.stats.vertices_emitted = oracle.count();
  out.stats.stored_cobases = oracle.cobasis_count;
  return out;
}

RunOutcome run_algorithm(const Arrangement& arr, Algorithm algo, std::size_t step_budget) {
  RunOutcome run;
  run.algorithm = algo;
  const auto start = std::chrono::steady_clock::now();
  switch (algo) {
    case Algorithm::kZero:
      run.result = enumerate_zero(arr);
      break;
    case Algorithm::kMoss:
      run.result = enumerate_moss(arr);
      break;
    case Algorithm::kOracle:
      run.result = oracle_as_result(arr);
      break;
    case Algorithm::kCrissCross:
    case Algorithm::kCrissCrossAf: {
      CrissCrossOptions options;
      options.step_budget = step_budget;
      auto cc = enumerate_cc(
          arr,
          algo == Algorithm::kCrissCross ? ReverseMode::kComplemented : ReverseMode::kOriginal,
          options);
      run.stopped_early = cc.stopped_early();
      run.result = std::move(cc.enumeration);
      run.cycle = std::move(cc.cycle);
      if (cc.budget_exceeded && run.cycle && !run.cycle->detected) {
        run.cycle->steps_before_detection = run.result.stats.pivots;
      }
      break;
    }
  }
  run.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

bool same_vertex_set(const EnumerationResult& a, const EnumerationResult& b) {
  return sorted_points(a) == sorted_points(b);
}

std::string format_label_set(const LabelSet& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

std::string format_vertex(const VertexRecord& v) {
  std::string out = "cobasis=" + format_label_set(v.cobasis) +
                    " basis=" + format_label_set(v.basis) + " y=(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ", ";
    out += v.coords[i].str();
  }
  return out + ")";
}

std::string format_vertices(const EnumerationResult& result) {
  std::string out;
  for (const auto& v : result.vertices) out += format_vertex(v) + '\n';
  return out;
}

std::string format_stats(const SearchStats& s) {
  std::ostringstream out;
  out << "# stats\n"
      << "vertices=" << s.vertices_emitted << '\n'
      << "dictionaries_visited=" << s.dictionaries_visited << '\n'
      << "pivots=" << s.pivots << '\n'
      << "reverse_tests=" << s.reverse_tests << '\n'
      << "lexmin_tests=" << s.lexmin_tests << '\n'
      << "max_depth=" << s.max_depth << '\n'
      << "layer_counts=" << join_counts(s.layer_counts) << '\n'
      << "stored_cobases=" << s.stored_cobases << '\n';
  return out.str();
}

std::string format_cycle(const CycleReport& cycle) {
  if (!cycle.detected) return "";
  std::string out = "# cycle detected after " +
                    std::to_string(cycle.steps_before_detection) + " steps\n";
  for (std::size_t i = 0; i < cycle.cycle_cobases.size(); ++i) {
    out += i ? " -> " : "";
    out += format_label_set(cycle.cycle_cobases[i]);
  }
  return out + '\n';
}

std::string format_json(const RunOutcome& run, bool with_stats) {
  nlohmann::json doc;
  doc["algorithm"] = algorithm_name(run.algorithm);
  auto& vertices = doc["vertices"] = nlohmann::json::array();
  for (const auto& v : run.result.vertices) {
    std::vector<std::string> y;
    for (const auto& q : v.coords) y.push_back(q.str());
    vertices.push_back({{"cobasis", v.cobasis}, {"basis", v.basis}, {"y", y}});
  }
  doc["stopped_early"] = run.stopped_early;
  if (with_stats) doc["stats"] = stats_json(run.result.stats);
  if (run.cycle && run.cycle->detected) {
    doc["cycle"] = {{"steps_before_detection", run.cycle->steps_before_detection},
                    {"cobases", run.cycle->cycle_cobases}};
  }
  return doc.dump(2) + '\n';
}

RunReport compare_algorithms(const Arrangement& arr, std::string instance,
                             const std::vector<Algorithm>& algos, std::size_t step_budget) {
  RunReport report;
  report.instance = std::move(instance);
  const EnumerationResult truth = oracle_as_result(arr);
  report.oracle_vertices = truth.vertices.size();
  for (Algorithm algo : algos) {
    RunOutcome run = run_algorithm(arr, algo, step_budget);
    RunReport::Row row;
    row.algorithm = algo;
    row.vertices = run.result.vertices.size();
    row.stats = run.result.stats;
    row.seconds = run.seconds;
    row.agrees = same_vertex_set(run.result, truth);
    row.stopped_early = run.stopped_early;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_report(const RunReport& r) {
  std::ostringstream out;
  out << "instance: " << r.instance << "\n"
      << "oracle vertices: " << r.oracle_vertices << "\n";
  out << std::left << std::setw(15) << "algorithm" << std::right << std::setw(10) << "vertices"
      << std::setw(12) << "dicts" << std::setw(12) << "pivots" << std::setw(14)
      << "rev_tests" << std::setw(8) << "depth" << std::setw(10) << "stored" << std::setw(11)
      << "seconds" << std::setw(8) << "agree" << "  note\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(15) << algorithm_name(row.algorithm) << std::right
        << std::setw(10) << row.vertices << std::setw(12) << row.stats.dictionaries_visited
        << std::setw(12) << row.stats.pivots << std::setw(14) << row.stats.reverse_tests
        << std::setw(8) << row.stats.max_depth << std::setw(10) << row.stats.stored_cobases
        << std::setw(11) << std::fixed << std::setprecision(4) << row.seconds
        << std::setw(8) << (row.agrees ? "yes" : "no")
        << (row.stopped_early ? "  stopped (cycle/budget)" : "") << '\n';
  }
  return out.str();
}

}  // namespace hypervert
