// Copyright 2026 The Contract Menus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// contracts: generate instances, solve and evaluate contracts, run the claim
// suites. Exit status: 0 success, 1 a hard claim failed, 2 usage or I/O error.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "contracts/envelope.h"
#include "contracts/general_contracts.h"
#include "contracts/generators.h"
#include "contracts/instance.h"
#include "contracts/instance_io.h"
#include "contracts/linear_contract.h"
#include "contracts/rational.h"
#include "contracts/rlc_menu.h"
#include "contracts/suites.h"

namespace {

using namespace contracts;  // NOLINT(build/namespaces)

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational ParseRational(const std::string& text, const std::string& what) {
  try {
    return Rational::Parse(text);
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::vector<Rational> Weights(const Instance& instance, const std::string& kind) {
  if (kind == "prior") return instance.prior;
  if (kind == "unit") return std::vector<Rational>(instance.num_types(), Rational(1));
  if (kind == "uniform") return UniformPrior(instance.num_types());
  throw UsageError("unknown weights: " + kind);
}

void PrintValue(const Rational& value) {
  std::cout << "value " << value << " (" << ToDecimal(value) << ")\n";
}

struct GenArgs {
  std::string family;
  std::string out;
  std::string menu_out;
  std::string eps = "1/10";
  std::string gamma = "1/3";
  int n = 12;
  int levels = 3;
  int types = 3;
  uint64_t seed = 1;
  int actions = 3;
  int outcomes = 2;
  std::string structure = "general";
};

int RunGen(const GenArgs& a) {
  Instance instance;
  std::optional<Menu> menu;
  if (a.family == "example-rlc") {
    RlcFamily f = GenExampleRlc(ParseRational(a.eps, "--eps"));
    instance = std::move(f.instance);
    menu = std::move(f.menu);
  } else if (a.family == "unbounded-rlc") {
    RlcFamily f = GenUnboundedRlc();
    instance = std::move(f.instance);
    menu = std::move(f.menu);
  } else if (a.family == "omega-n") {
    DetFamily f = GenOmegaN(a.n, ParseRational(a.gamma, "--gamma"));
    instance = std::move(f.instance);
    menu = std::move(f.menu);
  } else if (a.family == "omega-logt") {
    DetFamily f = GenOmegaLogT(a.levels);
    instance = std::move(f.instance);
    menu = std::move(f.menu);
  } else if (a.family == "omega-t") {
    RlcFamily f = GenOmegaTRlc(a.types);
    instance = std::move(f.instance);
    menu = std::move(f.menu);
  } else if (a.family == "random") {
    RandomParams p;
    p.seed = a.seed;
    p.types = a.types;
    p.actions = a.actions;
    p.outcomes = a.outcomes;
    if (a.structure == "general") {
      p.structure = RandomStructure::kGeneral;
    } else if (a.structure == "two-action") {
      p.structure = RandomStructure::kTwoAction;
    } else {
      throw UsageError("unknown structure: " + a.structure);
    }
    instance = GenRandom(p);
  } else {
    throw UsageError("unknown family: " + a.family);
  }
  WriteInstance(instance, a.out);
  std::cout << "wrote " << a.out << " digest " << InstanceDigest(instance) << "\n";
  if (!a.menu_out.empty()) {
    if (!menu) throw UsageError("family " + a.family + " has no menu");
    WriteMenu(*menu, a.menu_out);
    std::cout << "wrote " << a.menu_out << "\n";
  }
  return kExitOk;
}

struct SolveArgs {
  std::string kind;
  std::string file;
  std::string weights = "prior";
  int64_t cap = 200000;
  int threads = 0;
  bool no_prune = false;
  std::string menu_out;
};

int RunSolve(const SolveArgs& a) {
  const Instance instance = ReadInstance(a.file);
  const std::vector<Rational> w = Weights(instance, a.weights);
  EnumOptions eo;
  eo.profile_cap = a.cap;
  eo.threads = a.threads;
  eo.prune = !a.no_prune;
  std::optional<Menu> menu;
  if (a.kind == "linear") {
    const LinearResult r = OptLinear(instance, w);
    PrintValue(r.value);
    std::cout << "alpha " << r.alpha_star << "\n";
    for (size_t t = 0; t < r.per_type.size(); ++t) {
      std::cout << "type " << t << " action " << r.per_type[t].action
                << " profit " << r.per_type[t].profit << "\n";
    }
    GeneralContract x;
    for (const Rational& reward : instance.rewards) {
      x.push_back(r.alpha_star * reward);
    }
    menu = std::move(x);
  } else if (a.kind == "rlc" || a.kind == "rlc-bounded") {
    const RlcResult r = OptRlcMenu(instance, w, a.kind == "rlc-bounded");
    PrintValue(r.value);
    std::cout << "pivots " << r.pivots << "\n";
    std::cout << MenuToJson(Menu(r.menu)).dump(2) << "\n";
    menu = r.menu;
  } else if (a.kind == "single" || a.kind == "detmenu") {
    try {
      if (a.kind == "single") {
        const SingleResult r = OptSingle(instance, w, eo);
        PrintValue(r.value);
        std::cout << "profiles " << r.stats.profiles << " feasible "
                  << r.stats.feasible << " pivots " << r.stats.pivots << "\n";
        std::cout << MenuToJson(Menu(r.contract)).dump(2) << "\n";
        menu = r.contract;
      } else {
        const DetMenuResult r = OptDetMenu(instance, w, eo);
        PrintValue(r.value);
        std::cout << "profiles " << r.stats.profiles << " feasible "
                  << r.stats.feasible << " pivots " << r.stats.pivots << "\n";
        std::cout << MenuToJson(Menu(r.menu)).dump(2) << "\n";
        menu = r.menu;
      }
    } catch (const ProfileCapExceeded& e) {
      std::cerr << "out of desk scale: " << e.profiles()
                << " profiles exceed the cap of " << a.cap << "\n";
      return kExitUsage;
    }
  } else {
    throw UsageError("unknown solver: " + a.kind);
  }
  if (!a.menu_out.empty()) WriteMenu(*menu, a.menu_out);
  return kExitOk;
}

struct EvalArgs {
  std::string kind;
  std::string file;
  std::string menu_file;
  std::string weights = "prior";
};

int RunEval(const EvalArgs& a) {
  const Instance instance = ReadInstance(a.file);
  const Menu menu = ReadMenu(a.menu_file);
  const std::vector<Rational> w = Weights(instance, a.weights);
  if (a.kind == "rlc") {
    const auto* m = std::get_if<RlcMenu>(&menu);
    if (!m) throw UsageError("menu file is not an rlc menu");
    ValidateMenu(*m, instance.num_types());
    const RlcEvaluation ev = EvaluateRlcMenu(instance, *m, w);
    PrintValue(ev.value);
    for (size_t t = 0; t < ev.chosen.size(); ++t) {
      std::cout << "type " << t << " takes list " << ev.chosen[t] << " profit "
                << ev.profits[t] << (ev.strict[t] ? " strict" : "") << "\n";
    }
    std::cout << "incentive compatible " << (ev.incentive_compatible ? "yes" : "no")
              << "\n";
    return kExitOk;
  }
  ContractEvaluation ev;
  if (a.kind == "single") {
    const auto* x = std::get_if<GeneralContract>(&menu);
    if (!x) throw UsageError("menu file is not a single contract");
    ev = EvaluateSingle(instance, *x, w);
  } else if (a.kind == "detmenu") {
    const auto* m = std::get_if<DetMenu>(&menu);
    if (!m) throw UsageError("menu file is not a deterministic menu");
    ev = EvaluateDetMenu(instance, *m, w);
  } else {
    throw UsageError("unknown menu kind: " + a.kind);
  }
  PrintValue(ev.value);
  for (size_t t = 0; t < ev.responses.size(); ++t) {
    const Response& r = ev.responses[t];
    std::cout << "type " << t << " item " << r.item << " action " << r.action
              << " utility " << r.utility << " profit " << r.profit
              << (r.tie_broken ? " tie" : "") << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string format = "text";
  std::optional<uint64_t> seed;
  int threads = 0;
};

int RunVerify(const VerifyArgs& a) {
  if (a.format != "text" && a.format != "machine") {
    throw UsageError("unknown format: " + a.format);
  }
  std::vector<std::string> ids;
  if (a.suite == "all") {
    ids = SuiteIds();
  } else {
    ids = {a.suite};
  }
  SuiteOptions options;
  options.seed = a.seed;
  options.threads = a.threads;
  bool passed = true;
  for (const std::string& id : ids) {
    SuiteReport report;
    try {
      report = RunSuite(id, options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << (a.format == "text" ? FormatText(report) : FormatMachine(report))
              << std::flush;
    passed = passed && report.Passed();
  }
  return passed ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and claim suites for typed contract design"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("family", gen.family,
                      "example-rlc, unbounded-rlc, omega-n, omega-logt, omega-t, random")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "Instance file to write")->required();
  gen_cmd->add_option("--menu-out", gen.menu_out, "Also write the family's menu");
  gen_cmd->add_option("--eps", gen.eps, "example-rlc gap parameter");
  gen_cmd->add_option("--n", gen.n, "omega-n size");
  gen_cmd->add_option("--gamma", gen.gamma, "omega-n scale");
  gen_cmd->add_option("--levels", gen.levels, "omega-logt level count");
  gen_cmd->add_option("--types", gen.types, "omega-t and random type count");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--actions", gen.actions, "random actions per type");
  gen_cmd->add_option("--outcomes", gen.outcomes, "random outcome count");
  gen_cmd->add_option("--structure", gen.structure, "general or two-action");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute an optimal contract");
  solve_cmd->add_option("kind", solve.kind, "linear, rlc, rlc-bounded, single, detmenu")
      ->required();
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--weights", solve.weights, "prior, unit or uniform");
  solve_cmd->add_option("--cap", solve.cap, "Profile cap for enumeration");
  solve_cmd->add_option("--threads", solve.threads, "Enumeration threads");
  solve_cmd->add_flag("--no-prune", solve.no_prune, "Enumerate every action");
  solve_cmd->add_option("--menu-out", solve.menu_out, "Write the solution as a menu file");

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a menu or contract");
  eval_cmd->add_option("kind", eval.kind, "rlc, single, detmenu")->required();
  eval_cmd->add_option("file", eval.file, "Instance file")->required();
  eval_cmd->add_option("menu", eval.menu_file, "Menu file")->required();
  eval_cmd->add_option("--weights", eval.weights, "prior, unit or uniform");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a claim suite");
  verify_cmd->add_option("suite", verify.suite, "Suite id or all");
  verify_cmd->add_option("--format", verify.format, "text or machine");
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized suites");
  verify_cmd->add_option("--threads", verify.threads, "Enumeration threads");

  VerifyArgs report;
  CLI::App* report_cmd = app.add_subcommand("report", "Run every claim suite");
  report_cmd->add_option("--format", report.format, "text or machine");
  report_cmd->add_option("--seed", report.seed, "Seed for randomized suites");
  report_cmd->add_option("--threads", report.threads, "Enumeration threads");

  app.add_subcommand("suites", "List suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*solve_cmd) return RunSolve(solve);
    if (*eval_cmd) return RunEval(eval);
    if (*verify_cmd) return RunVerify(verify);
    if (*report_cmd) return RunVerify(report);
    for (const std::string& id : SuiteIds()) std::cout << id << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
