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

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "sbm/cli.hpp"
#include "sbm/loadbalance.hpp"

namespace sbm {
namespace {

using nlohmann::json;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// Maps library exceptions onto the exit-status contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

json stats_json(const LoadStats& s) {
  return {{"max", s.max},       {"min", s.min}, {"mean", s.mean},
          {"std", s.stddev},    {"cv", s.cv},   {"zero_mean", s.zero_mean}};
}

Capacity parse_capacity(const std::string& text) {
  if (text == "auto") return Capacity::automatic();
  if (text == "inf") return Capacity::unbounded();
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used == text.size() && value >= 0) return Capacity::fixed(value);
  } catch (const std::exception&) {
  }
  throw UsageError("--capacity must be auto, inf, or a non-negative integer");
}

Graph generate_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(spec);
  while (std::getline(in, part, ':')) parts.push_back(part);
  if (parts.size() != 4 || (parts[0] != "g500" && parts[0] != "ssca")) {
    throw UsageError("--generate expects kind:scale:edge_factor:seed with kind g500|ssca");
  }
  try {
    const int scale = std::stoi(parts[1]);
    const int edge_factor = std::stoi(parts[2]);
    const auto seed = static_cast<std::uint64_t>(std::stoull(parts[3]));
    return generate_rmat(parts[0] == "g500" ? RmatParams::g500(scale, edge_factor, seed)
                                            : RmatParams::ssca(scale, edge_factor, seed));
  } catch (const std::invalid_argument&) {
    throw UsageError("--generate fields must be integers");
  }
}

}  // namespace

int cmd_match(const MatchOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Algorithm algorithm = parse_algorithm(o.algorithm);
    const WeightSpec weights = parse_weight_spec(o.weights);
    if (o.threads < 1) throw UsageError("--threads must be at least 1");
    if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw UsageError("--alpha must lie in [0,1]");
    const ConcavePolynomial objective(o.alpha);
    const Graph graph = apply_weight_spec(parse_matrix_market_file(o.input), weights, o.seed);
    const BVector b = resolve_b(graph, o.b);

    const MatchResult result = run_algorithm(algorithm, graph, b, objective, o.threads);
    const RunReport report =
        make_run_report(algorithm, graph, objective, result, o.threads, o.seed, o.input);
    const std::string text = run_report_json(report);

    auto tsv = open_output(o.out + ".tsv");
    write_matching_tsv(tsv, graph, result.edges);
    auto js = open_output(o.out + ".json");
    js << text << '\n';
    out << text << '\n';
    return 0;
  });
}

int cmd_assign(const AssignOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Capacity capacity = parse_capacity(o.capacity);
    std::optional<BaselinePolicy> baseline;
    if (o.baseline == "round_robin") {
      baseline = BaselinePolicy::kRoundRobin;
    } else if (o.baseline == "first_fit_counter") {
      baseline = BaselinePolicy::kFirstFitCounter;
    } else if (o.baseline != "none") {
      throw UsageError("--baseline must be none, round_robin or first_fit_counter");
    }
    if (o.machines < 1) throw UsageError("--machines must be at least 1");
    if (o.threads < 1) throw UsageError("--threads must be at least 1");
    if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw UsageError("--alpha must lie in [0,1]");

    std::ifstream in(o.loads);
    if (!in) throw ParseError("cannot open loads file '" + o.loads + "'");
    const TaskSet tasks = read_task_loads(in);

    const Assignment a = assign(tasks, o.machines, o.alpha, capacity, o.threads);
    const LoadStats stats = load_stats(a);

    auto tsv = open_output(o.out + ".tsv");
    tsv << "# task_id\tmachine_id\tload\n";
    for (std::size_t t = 0; t < tasks.loads.size(); ++t) {
      tsv << t << '\t';
      if (a.machine_of[t] == kUnassigned) {
        tsv << "-";
      } else {
        tsv << a.machine_of[t];
      }
      tsv << '\t' << tasks.loads[t] << '\n';
    }

    json j;
    j["tasks"] = tasks.loads.size();
    j["machines"] = o.machines;
    j["alpha"] = o.alpha;
    j["capacity"] = o.capacity;
    j["machine_loads"] = a.machine_loads;
    j["messages"] = a.messages;
    j["stats"] = stats_json(stats);
    if (baseline) {
      const Assignment base = baseline_assign(tasks, o.machines, *baseline);
      const LoadStats base_stats = load_stats(base);
      j["baseline"] = {{"policy", o.baseline},
                       {"machine_loads", base.machine_loads},
                       {"stats", stats_json(base_stats)}};
      j["comparison"] = {{"cv_submodular", stats.cv}, {"cv_baseline", base_stats.cv}};
      out << std::setprecision(6) << "policy\tmax\tmin\tmean\tstd\tcv\n"
          << "submodular\t" << stats.max << '\t' << stats.min << '\t' << stats.mean << '\t'
          << stats.stddev << '\t' << stats.cv << '\n'
          << o.baseline << '\t' << base_stats.max << '\t' << base_stats.min << '\t'
          << base_stats.mean << '\t' << base_stats.stddev << '\t' << base_stats.cv << '\n';
    }
    auto js = open_output(o.out + ".json");
    js << j.dump(2) << '\n';
    out << j.dump(2) << '\n';
    return 0;
  });
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RmatParams params;
    if (o.kind == "g500") {
      params = RmatParams::g500(o.scale, o.edge_factor, o.seed);
    } else if (o.kind == "ssca") {
      params = RmatParams::ssca(o.scale, o.edge_factor, o.seed);
    } else {
      throw UsageError("--kind must be g500 or ssca");
    }
    if (o.scale < 1 || o.edge_factor < 1) {
      throw UsageError("--scale and --edge-factor must be at least 1");
    }
    const Graph graph = generate_rmat(params);
    std::ostringstream p;
    p << std::setprecision(17) << " rmat kind=" << o.kind << " a=" << params.a
      << " b=" << params.b << " c=" << params.c << " d=" << params.d;
    const std::vector<std::string> comments{
        p.str(), " scale=" + std::to_string(o.scale) +
                     " edge_factor=" + std::to_string(o.edge_factor) +
                     " seed=" + std::to_string(o.seed)};
    auto file = open_output(o.out);
    write_matrix_market(file, graph, comments);
    out << "wrote " << o.out << ": n=" << graph.num_vertices() << " m=" << graph.num_edges()
        << '\n';
    return 0;
  });
}

int cmd_bench(const BenchCliOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.input.empty() == o.generate.empty()) {
      throw UsageError("bench needs exactly one of --input or --generate");
    }
    BenchOptions options;
    options.algorithms.clear();
    for (const auto& name : split_csv(o.algorithms)) {
      options.algorithms.push_back(parse_algorithm(name));
    }
    for (const auto& t : split_csv(o.threads_sweep)) {
      int threads = 0;
      try {
        threads = std::stoi(t);
      } catch (const std::exception&) {
        throw UsageError("--threads-sweep must be a list of integers");
      }
      if (threads < 1) throw UsageError("--threads-sweep entries must be >= 1");
      options.threads_sweep.push_back(threads);
    }
    if (o.repeat < 1) throw UsageError("--repeat must be at least 1");
    options.repeat = o.repeat;
    const WeightSpec weights = parse_weight_spec(o.weights);
    if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw UsageError("--alpha must lie in [0,1]");
    const ConcavePolynomial objective(o.alpha);

    const std::string label = o.input.empty() ? o.generate : o.input;
    const Graph raw = o.input.empty() ? generate_from_spec(o.generate)
                                      : parse_matrix_market_file(o.input);
    const Graph graph = apply_weight_spec(raw, weights, o.seed);
    const BVector b = resolve_b(graph, o.b);
    const BenchReport report = run_bench(graph, b, objective, options);

    auto table = open_output(o.out + ".tsv");
    table << "problem\tn\tm\talgorithm\tweight\ttime_ms\tinit_ms\tmain_ms\trel_perf\n";
    for (const auto& row : report.rows) {
      table << label << '\t' << graph.num_vertices() << '\t' << graph.num_edges() << '\t'
            << row.algorithm << '\t' << row.objective << '\t' << row.median_total_ms << '\t'
            << row.median_init_ms << '\t' << row.median_main_ms << '\t';
      if (row.algorithm == "llg" && report.lazy_over_llg) {
        table << *report.lazy_over_llg;
      } else {
        table << '-';
      }
      table << '\n';
    }
    if (!report.scaling.empty()) {
      auto scaling = open_output(o.out + "_scaling.tsv");
      scaling << "threads\tmain_ms\tspeedup\tidentical\n";
      for (const auto& p : report.scaling) {
        scaling << p.threads << '\t' << p.median_main_ms << '\t' << p.speedup << '\t'
                << (p.identical_edges ? 1 : 0) << '\n';
      }
    }

    json j;
    j["input"] = label;
    j["n"] = graph.num_vertices();
    j["m"] = graph.num_edges();
    j["repeat"] = o.repeat;
    j["weights_agree"] = report.weights_agree;
    if (report.lazy_over_llg) j["lazy_over_llg"] = *report.lazy_over_llg;
    for (const auto& row : report.rows) {
      j["rows"].push_back({{"algorithm", row.algorithm},
                           {"weight", row.objective},
                           {"cardinality", row.cardinality},
                           {"time_ms", row.median_total_ms},
                           {"init_ms", row.median_init_ms},
                           {"main_ms", row.median_main_ms}});
    }
    for (const auto& p : report.scaling) {
      j["scaling"].push_back({{"threads", p.threads},
                              {"main_ms", p.median_main_ms},
                              {"speedup", p.speedup},
                              {"identical", p.identical_edges}});
    }
    out << j.dump(2) << '\n';
    bool identical = true;
    for (const auto& p : report.scaling) identical = identical && p.identical_edges;
    if (!report.weights_agree || !identical) {
      err << "warning: algorithms disagree (weights_agree=" << report.weights_agree
          << ", identical=" << identical << ")\n";
    }
    return 0;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph graph = parse_matrix_market_file(o.input);
    const BVector b = resolve_b(graph, o.b);
    std::ifstream in(o.matching);
    if (!in) throw ParseError("cannot open matching file '" + o.matching + "'");
    const auto edges = read_matching_tsv(in, graph);
    const VerifyReport report = verify_matching(graph, b, edges);

    std::vector<VertexId> degree(graph.num_vertices(), 0);
    for (EdgeId e : edges) {
      ++degree[graph.endpoints(e).u];
      ++degree[graph.endpoints(e).v];
    }
    for (VertexId v : report.over_capacity) {
      err << "vertex " << v << " has " << degree[v] << " matched edges, b=" << b[v] << '\n';
    }
    if (o.require_maximal) {
      for (EdgeId e : report.addable) {
        err << "edge " << e << " (" << graph.endpoints(e).u << "," << graph.endpoints(e).v
            << ") could still be added\n";
      }
    }
    const bool ok = report.feasible && (!o.require_maximal || report.maximal);
    out << "feasible=" << report.feasible << " maximal=" << report.maximal
        << " cardinality=" << edges.size() << '\n';
    return ok ? 0 : 1;
  });
}

}  // namespace sbm
