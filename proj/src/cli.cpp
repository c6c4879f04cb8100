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

#include "hypervert/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypervert/generators.hpp"
#include "hypervert/report.hpp"

namespace hypervert {
namespace {

struct Options {
  std::string kind;
  int d = 0;
  int n = 0;
  int k = 1;
  std::uint64_t seed = 1;
  int coeff_bound = 10;
  std::string input;
  std::string output;
  std::string algo = "zero";
  std::vector<std::string> algos;
  bool stats = false;
  std::string signs;
  std::size_t step_budget = 0;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + opt.output + "'");
  file << text;
  if (!file) throw std::runtime_error("write failed for '" + opt.output + "'");
}

std::size_t step_budget(const Options& opt) {
  if (opt.step_budget != 0) return opt.step_budget;
  if (const char* env = std::getenv(kStepBudgetEnv)) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kStepBudgetEnv) + " is not a number");
    }
  }
  return 0;
}

Arrangement generate(const Options& opt) {
  if (opt.kind == "hypercube") return gen_hypercube(opt.d);
  if (opt.kind == "cube-cone") return gen_cube_cone(opt.d);
  if (opt.kind == "stacked") return gen_stacked_cubes(opt.d, opt.k);
  if (opt.kind == "random") return gen_random(opt.d, opt.n, opt.seed, opt.coeff_bound);
  throw std::invalid_argument("unknown generator '" + opt.kind + "'");
}

int cmd_generate(const Options& opt, std::ostream& out) {
  const Arrangement arr = generate(opt);
  emit(opt, format_arrangement(arr), out);
  if (!opt.output.empty()) out << "n=" << arr.size() << " d=" << arr.dim() << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& opt, Algorithm algo, std::ostream& out) {
  const Arrangement arr = parse_arrangement(read_file(opt.input));
  RunOutcome run = run_algorithm(arr, algo, step_budget(opt));
  if (!opt.signs.empty()) {
    run.result = filter_by_signs(run.result, arr, SignPattern::parse(opt.signs));
  }
  std::string text;
  if (opt.format == "json") {
    text = format_json(run, opt.stats);
  } else {
    text = format_vertices(run.result);
    if (opt.stats) text += format_stats(run.result.stats);
    if (run.cycle) text += format_cycle(*run.cycle);
    if (run.stopped_early && !(run.cycle && run.cycle->detected)) {
      text += "# step budget exceeded\n";
    }
  }
  emit(opt, text, out);
  return run.stopped_early ? kExitStopped : kExitOk;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  const Arrangement arr = parse_arrangement(read_file(opt.input));
  std::vector<Algorithm> algos;
  for (const auto& name : opt.algos) algos.push_back(parse_algorithm(name));
  const RunReport report = compare_algorithms(arr, opt.input, algos, step_budget(opt));
  emit(opt, render_report(report), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Vertex enumeration for hyperplane arrangements"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("kind", opt.kind, "hypercube | cube-cone | stacked | random")->required();
  gen->add_option("-d,--dim", opt.d, "Dimension")->required();
  gen->add_option("-n,--count", opt.n, "Hyperplane count (random)");
  gen->add_option("-k,--stack", opt.k, "Extra stacked planes (stacked)");
  gen->add_option("--seed", opt.seed, "Seed (random)");
  gen->add_option("--coeff-bound", opt.coeff_bound, "Coefficient bound (random)");
  gen->add_option("-o,--output", opt.output, "Output path (default stdout)");

  auto* en = app.add_subcommand("enumerate", "Enumerate the vertices of an instance");
  en->add_option("--algo", opt.algo, "zero | crisscross | crisscross-af | moss | oracle");
  en->add_option("-i,--input", opt.input, "Instance file")->required();
  en->add_option("-o,--output", opt.output, "Output path (default stdout)");
  en->add_flag("--stats", opt.stats, "Append the statistics block");
  en->add_option("--signs", opt.signs, "Side per hyperplane: + above, - below, . free");
  en->add_option("--step-budget", opt.step_budget, "Criss-Cross pivot budget");
  en->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ora = app.add_subcommand("oracle", "Brute-force vertex enumeration");
  ora->add_option("-i,--input", opt.input, "Instance file")->required();
  ora->add_option("-o,--output", opt.output, "Output path (default stdout)");
  ora->add_flag("--stats", opt.stats, "Append the statistics block");
  ora->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmp = app.add_subcommand("compare", "Run several enumerators against the oracle");
  cmp->add_option("-i,--input", opt.input, "Instance file")->required();
  cmp->add_option("--algos", opt.algos, "Comma-separated algorithm list")
      ->delimiter(',')
      ->default_str("zero,moss,crisscross");
  cmp->add_option("-o,--output", opt.output, "Output path (default stdout)");
  cmp->add_option("--step-budget", opt.step_budget, "Criss-Cross pivot budget");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(opt, out);
    if (*en) return cmd_enumerate(opt, parse_algorithm(opt.algo), out);
    if (*ora) return cmd_enumerate(opt, Algorithm::kOracle, out);
    if (opt.algos.empty()) opt.algos = {"zero", "moss", "crisscross"};
    return cmd_compare(opt, out);
  } catch (const NoVertexError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoVertex;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hypervert
