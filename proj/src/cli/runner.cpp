// Copyright 2026 The sbm Authors.
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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sbm/cli.hpp"
#include "sbm/parallel.hpp"

namespace sbm {
namespace {

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used != text.size()) throw UsageError("");
    return x;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "lazy") return Algorithm::kLazy;
  if (name == "llg") return Algorithm::kLlg;
  if (name == "pllg") return Algorithm::kPllg;
  throw UsageError("unknown algorithm '" + name + "' (greedy|lazy|llg|pllg)");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kLazy:
      return "lazy";
    case Algorithm::kLlg:
      return "llg";
    case Algorithm::kPllg:
      return "pllg";
  }
  return "?";
}

MatchResult run_algorithm(Algorithm algorithm, const Graph& graph, const BVector& b,
                          const Objective& objective, int threads) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return greedy(graph, b, objective);
    case Algorithm::kLazy:
      return lazy_greedy(graph, b, objective);
    case Algorithm::kLlg:
      return local_lazy_greedy(graph, b, objective);
    case Algorithm::kPllg:
      return parallel_local_lazy_greedy(graph, b, objective, ParallelConfig{threads, 64});
  }
  throw UsageError("unknown algorithm");
}

WeightSpec parse_weight_spec(const std::string& text) {
  WeightSpec spec;
  if (text == "native") {
    spec.native = true;
    return spec;
  }
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4 || parts[0] != "random") {
    throw UsageError("weights must be 'native' or 'random:lo:hi[:int]', got '" + text + "'");
  }
  spec.lo = parse_double(parts[1], "weight lower bound");
  spec.hi = parse_double(parts[2], "weight upper bound");
  if (parts.size() == 4) {
    if (parts[3] != "int") throw UsageError("weight mode suffix must be ':int'");
    spec.mode = WeightMode::kInteger;
  }
  if (!(spec.lo <= spec.hi) || spec.lo < 0.0) {
    throw UsageError("weight range needs 0 <= lo <= hi");
  }
  return spec;
}

Graph apply_weight_spec(const Graph& graph, const WeightSpec& spec, std::uint64_t seed) {
  if (spec.native) return graph;
  return assign_random_weights(graph, spec.lo, spec.hi, seed, spec.mode);
}

BVector resolve_b(const Graph& graph, const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw ParseError("cannot open b file '" + text.substr(1) + "'");
    const auto list = read_b_list(in);
    return make_b_vector(graph, list);
  }
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw UsageError("");
    if (value < 0) throw UsageError("");
    return make_b_vector(graph, value);
  } catch (const std::exception&) {
    throw UsageError("--b must be a non-negative integer or @file, got '" + text + "'");
  }
}

RunReport make_run_report(Algorithm algorithm, const Graph& graph, const Objective& objective,
                          const MatchResult& result, int threads, std::uint64_t seed,
                          const std::string& input) {
  RunReport r;
  r.algorithm = algorithm_name(algorithm);
  r.objective = evaluate_matching(result.edges, graph, objective);
  double telescoped = 0.0;
  for (const auto& entry : result.trace) telescoped += entry.gain;
  if (std::abs(telescoped - r.objective) > 1e-9 * std::max(1.0, std::abs(r.objective))) {
    throw Error("objective re-evaluation disagrees with the trace: " +
                std::to_string(r.objective) + " vs " + std::to_string(telescoped));
  }
  r.cardinality = result.edges.size();
  r.rounds = result.stats.rounds;
  r.pushes = result.stats.pushes;
  r.pops = result.stats.pops;
  r.gain_evaluations = result.stats.gain_evaluations;
  r.time_ms = result.stats.main_ms;
  r.init_ms = result.stats.init_ms;
  r.threads = algorithm == Algorithm::kPllg ? threads : 1;
  r.seed = seed;
  r.input = input;
  if (algorithm == Algorithm::kLlg || algorithm == Algorithm::kPllg) {
    r.per_round_matches = result.stats.per_round_matches;
  }
  return r;
}

std::string run_report_json(const RunReport& r) {
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  j["objective"] = r.objective;
  j["cardinality"] = r.cardinality;
  j["rounds"] = r.rounds;
  j["pushes"] = r.pushes;
  j["pops"] = r.pops;
  j["gain_evaluations"] = r.gain_evaluations;
  j["time_ms"] = r.time_ms;
  j["init_ms"] = r.init_ms;
  j["threads"] = r.threads;
  j["seed"] = r.seed;
  j["input"] = r.input;
  if (!r.per_round_matches.empty()) j["per_round_matches"] = r.per_round_matches;
  return j.dump(2);
}

BenchReport run_bench(const Graph& graph, const BVector& b, const Objective& objective,
                      const BenchOptions& options) {
  const int repeat = std::max(1, options.repeat);
  BenchReport report;
  std::optional<double> lazy_total, llg_total;
  for (Algorithm algorithm : options.algorithms) {
    std::vector<double> total, main, init;
    MatchResult last;
    for (int r = 0; r < repeat; ++r) {
      last = run_algorithm(algorithm, graph, b, objective, 1);
      total.push_back(last.stats.init_ms + last.stats.main_ms);
      main.push_back(last.stats.main_ms);
      init.push_back(last.stats.init_ms);
    }
    BenchRow row;
    row.algorithm = algorithm_name(algorithm);
    row.objective = evaluate_matching(last.edges, graph, objective);
    row.cardinality = last.edges.size();
    row.median_total_ms = median(total);
    row.median_main_ms = median(main);
    row.median_init_ms = median(init);
    if (algorithm == Algorithm::kLazy) lazy_total = row.median_total_ms;
    if (algorithm == Algorithm::kLlg) llg_total = row.median_total_ms;
    report.rows.push_back(row);
  }
  for (const auto& row : report.rows) {
    const double ref = report.rows.front().objective;
    if (std::abs(row.objective - ref) > 1e-9 * std::max(1.0, std::abs(ref))) {
      report.weights_agree = false;
    }
  }
  if (lazy_total && llg_total && *llg_total > 0.0) {
    report.lazy_over_llg = *lazy_total / *llg_total;
  }

  if (!options.threads_sweep.empty()) {
    const auto reference = local_lazy_greedy(graph, b, objective).edges;
    auto timed = [&](int threads, bool& identical) {
      std::vector<double> main;
      identical = true;
      for (int r = 0; r < repeat; ++r) {
        const auto result =
            parallel_local_lazy_greedy(graph, b, objective, ParallelConfig{threads, 64});
        identical = identical && result.edges == reference;
        main.push_back(result.stats.main_ms);
      }
      return median(main);
    };
    bool base_identical = true;
    const double base = timed(1, base_identical);
    for (int threads : options.threads_sweep) {
      ScalingPoint p;
      p.threads = threads;
      p.median_main_ms = threads == 1 ? base : timed(threads, p.identical_edges);
      if (threads == 1) p.identical_edges = base_identical;
      p.speedup = p.median_main_ms > 0.0 ? base / p.median_main_ms : 0.0;
      report.scaling.push_back(p);
    }
  }
  return report;
}

}  // namespace sbm
