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

// Command-line front end: match, assign, generate, bench, verify.

#include <iostream>

#include "CLI11.hpp"
#include "sbm/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Submodular b-matching: greedy, lazy greedy and local lazy greedy"};
  app.require_subcommand(1);

  sbm::MatchOptions match;
  auto* m = app.add_subcommand("match", "Compute a b-matching of a Matrix Market graph");
  m->add_option("--input", match.input, "Matrix Market file")->required();
  m->add_option("--algorithm", match.algorithm, "greedy|lazy|llg|pllg")
      ->capture_default_str();
  m->add_option("--b", match.b, "Uniform capacity or @file")->capture_default_str();
  m->add_option("--alpha", match.alpha, "Concave polynomial exponent in [0,1]")
      ->capture_default_str();
  m->add_option("--threads", match.threads, "Worker threads for pllg")->capture_default_str();
  m->add_option("--seed", match.seed, "Seed for random weights")->capture_default_str();
  m->add_option("--weights", match.weights, "native | random:lo:hi[:int]")
      ->capture_default_str();
  m->add_option("--out", match.out, "Output prefix for .tsv and .json")
      ->capture_default_str();

  sbm::AssignOptions assign;
  auto* a = app.add_subcommand("assign", "Assign weighted tasks to machines");
  a->add_option("--loads", assign.loads, "One task load per line")->required();
  a->add_option("--machines", assign.machines, "Number of machines")->required();
  a->add_option("--alpha", assign.alpha)->capture_default_str();
  a->add_option("--capacity", assign.capacity, "auto | inf | <int>")->capture_default_str();
  a->add_option("--baseline", assign.baseline, "none | round_robin | first_fit_counter")
      ->capture_default_str();
  a->add_option("--threads", assign.threads)->capture_default_str();
  a->add_option("--out", assign.out, "Output prefix for .tsv and .json")
      ->capture_default_str();

  sbm::GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Write an RMAT graph as Matrix Market");
  g->add_option("--kind", gen.kind, "g500 | ssca")->capture_default_str();
  g->add_option("--scale", gen.scale, "log2 of the vertex count")->capture_default_str();
  g->add_option("--edge-factor", gen.edge_factor)->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--out", gen.out, "Output .mtx path")->required();

  sbm::BenchCliOptions bench;
  auto* bn = app.add_subcommand("bench", "Time algorithms and the pllg thread sweep");
  bn->add_option("--input", bench.input, "Matrix Market file");
  bn->add_option("--generate", bench.generate, "kind:scale:edge_factor:seed");
  bn->add_option("--algorithms", bench.algorithms, "Comma-separated list")
      ->capture_default_str();
  bn->add_option("--repeat", bench.repeat)->capture_default_str();
  bn->add_option("--threads-sweep", bench.threads_sweep, "Comma-separated thread counts");
  bn->add_option("--b", bench.b)->capture_default_str();
  bn->add_option("--alpha", bench.alpha)->capture_default_str();
  bn->add_option("--seed", bench.seed)->capture_default_str();
  bn->add_option("--weights", bench.weights)->capture_default_str();
  bn->add_option("--out", bench.out, "Output prefix")->capture_default_str();

  sbm::VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a matching file for feasibility");
  v->add_option("--input", verify.input, "Matrix Market file")->required();
  v->add_option("--matching", verify.matching, "Matching TSV")->required();
  v->add_option("--b", verify.b)->capture_default_str();
  v->add_flag("--require-maximal", verify.require_maximal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (m->parsed()) return sbm::cmd_match(match, std::cout, std::cerr);
  if (a->parsed()) return sbm::cmd_assign(assign, std::cout, std::cerr);
  if (g->parsed()) return sbm::cmd_generate(gen, std::cout, std::cerr);
  if (bn->parsed()) return sbm::cmd_bench(bench, std::cout, std::cerr);
  return sbm::cmd_verify(verify, std::cout, std::cerr);
}
