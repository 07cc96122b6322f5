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

#ifndef SBM_CLI_HPP_
#define SBM_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sbm/errors.hpp"
#include "sbm/graph.hpp"
#include "sbm/matching.hpp"
#include "sbm/objective.hpp"

namespace sbm {

// Bad flag values; maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Algorithm { kGreedy, kLazy, kLlg, kPllg };

Algorithm parse_algorithm(const std::string& name);  // throws UsageError
std::string algorithm_name(Algorithm algorithm);

MatchResult run_algorithm(Algorithm algorithm, const Graph& graph, const BVector& b,
                          const Objective& objective, int threads = 1);

// `native` or `random:lo:hi[:int]`.
struct WeightSpec {
  bool native = false;
  double lo = 1.0;
  double hi = 5.0;
  WeightMode mode = WeightMode::kReal;
};
WeightSpec parse_weight_spec(const std::string& text);  // throws UsageError
Graph apply_weight_spec(const Graph& graph, const WeightSpec& spec, std::uint64_t seed);

// `<int>` or `@path` to a one-integer-per-line file.
BVector resolve_b(const Graph& graph, const std::string& text);

struct RunReport {
  std::string algorithm;
  double objective = 0.0;
  std::size_t cardinality = 0;
  std::size_t rounds = 0;
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t gain_evaluations = 0;
  double time_ms = 0.0;  // main loop, excludes I/O and initialization
  double init_ms = 0.0;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string input;
  std::vector<std::size_t> per_round_matches;
};

// Re-evaluates the matching and cross-checks it against the trace's summed
// gains; throws Error when they disagree beyond 1e-9 relative.
RunReport make_run_report(Algorithm algorithm, const Graph& graph, const Objective& objective,
                          const MatchResult& result, int threads, std::uint64_t seed,
                          const std::string& input);
std::string run_report_json(const RunReport& report);

// ---------------------------------------------------------------------------
// Benchmark harness

struct BenchOptions {
  std::vector<Algorithm> algorithms{Algorithm::kLazy, Algorithm::kLlg};
  int repeat = 3;
  std::vector<int> threads_sweep;  // pllg scaling points; empty skips the sweep
};

struct BenchRow {
  std::string algorithm;
  double objective = 0.0;
  std::size_t cardinality = 0;
  double median_total_ms = 0.0;
  double median_main_ms = 0.0;
  double median_init_ms = 0.0;
};

struct ScalingPoint {
  int threads = 1;
  double median_main_ms = 0.0;
  double speedup = 1.0;         // T(first sweep entry) / T(threads), main loop only
  bool identical_edges = true;  // same edge set as serial LLG
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::optional<double> lazy_over_llg;  // relative performance on total time
  bool weights_agree = true;            // all rows report the same objective within 1e-9
  std::vector<ScalingPoint> scaling;
};

BenchReport run_bench(const Graph& graph, const BVector& b, const Objective& objective,
                      const BenchOptions& options);

// ---------------------------------------------------------------------------
// Subcommands. Each returns the process exit status: 0 success, 1 data or
// infeasibility error, 2 usage error.

struct MatchOptions {
  std::string input;
  std::string algorithm = "llg";
  std::string b = "5";
  double alpha = 0.5;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string weights = "random:1:5";
  std::string out = "matching";  // writes <out>.tsv and <out>.json
};

struct AssignOptions {
  std::string loads;
  std::size_t machines = 1;
  double alpha = 0.5;
  std::string capacity = "auto";  // auto | inf | <int>
  std::string baseline = "none";  // none | round_robin | first_fit_counter
  int threads = 1;
  std::string out = "assignment";
};

struct GenerateOptions {
  std::string kind = "g500";  // g500 | ssca
  int scale = 10;
  int edge_factor = 16;
  std::uint64_t seed = 1;
  std::string out;
};

struct BenchCliOptions {
  std::string input;     // Matrix Market file, or
  std::string generate;  // kind:scale:edge_factor:seed
  std::string algorithms = "lazy,llg";
  int repeat = 3;
  std::string threads_sweep;
  std::string b = "5";
  double alpha = 0.5;
  std::uint64_t seed = 1;
  std::string weights = "random:1:5";
  std::string out = "bench";
};

struct VerifyOptions {
  std::string input;
  std::string matching;
  std::string b = "5";
  bool require_maximal = false;
};

int cmd_match(const MatchOptions& options, std::ostream& out, std::ostream& err);
int cmd_assign(const AssignOptions& options, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchCliOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace sbm

#endif  // SBM_CLI_HPP_
