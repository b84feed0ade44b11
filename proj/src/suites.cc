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

#include "contracts/suites.h"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "contracts/envelope.h"
#include "contracts/general_contracts.h"
#include "contracts/generators.h"
#include "contracts/instance.h"
#include "contracts/instance_io.h"
#include "contracts/linear_contract.h"
#include "contracts/oracles.h"
#include "contracts/rlc_menu.h"
#include "contracts/simplex.h"
#include "json.hpp"

namespace contracts {

std::string ToString(Comparator cmp) {
  switch (cmp) {
    case Comparator::kEq:
      return "=";
    case Comparator::kLe:
      return "<=";
    case Comparator::kGe:
      return ">=";
    case Comparator::kLt:
      return "<";
    case Comparator::kGt:
      return ">";
  }
  return "?";
}

std::string ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
    case Verdict::kWarn:
      return "warn";
  }
  return "?";
}

bool Compare(const Rational& lhs, Comparator cmp, const Rational& rhs) {
  switch (cmp) {
    case Comparator::kEq:
      return lhs == rhs;
    case Comparator::kLe:
      return lhs <= rhs;
    case Comparator::kGe:
      return lhs >= rhs;
    case Comparator::kLt:
      return lhs < rhs;
    case Comparator::kGt:
      return lhs > rhs;
  }
  return false;
}

bool SuiteReport::Passed() const {
  for (const Claim& c : claims) {
    if (c.hard && c.verdict == Verdict::kFail) return false;
  }
  return true;
}

int SuiteReport::Count(Verdict verdict) const {
  int n = 0;
  for (const Claim& c : claims) n += c.verdict == verdict;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Rational> Ones(int n) { return std::vector<Rational>(n, Rational(1)); }

Rational Indicator(bool b) { return Rational(b ? 1 : 0); }

// Collects claims; the wall time of a claim is the time since the previous
// claim or the last call to Restart.
class Builder {
 public:
  Builder(std::string suite, uint64_t seed) {
    report_.suite = std::move(suite);
    report_.seed = seed;
  }

  void Restart() { mark_ = Clock::now(); }

  Claim& Add(std::string id, std::string anchor, const Rational& computed,
             Comparator cmp, const Rational& reference, std::string weights,
             bool hard = true, std::string note = "") {
    Claim c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.computed = computed;
    c.cmp = cmp;
    c.reference = reference;
    c.weights = std::move(weights);
    c.hard = hard;
    c.note = std::move(note);
    if (Compare(computed, cmp, reference)) {
      c.verdict = Verdict::kPass;
    } else {
      c.verdict = hard ? Verdict::kFail : Verdict::kWarn;
    }
    return Push(std::move(c));
  }

  Claim& Skip(std::string id, std::string anchor, Comparator cmp,
              const Rational& reference, std::string weights,
              std::string note) {
    Claim c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.cmp = cmp;
    c.reference = reference;
    c.weights = std::move(weights);
    c.verdict = Verdict::kSkipped;
    c.note = std::move(note);
    return Push(std::move(c));
  }

  void Digest(std::string label, const Instance& instance) {
    report_.digests.emplace_back(std::move(label), InstanceDigest(instance));
  }
  void Digest(std::string label, std::string digest) {
    report_.digests.emplace_back(std::move(label), std::move(digest));
  }
  void Stat(const std::string& key, int64_t value) { report_.stats[key] += value; }

  SuiteReport Finish(Clock::time_point start) {
    report_.seconds = Since(start);
    return std::move(report_);
  }

 private:
  Claim& Push(Claim c) {
    c.seconds = Since(mark_);
    mark_ = Clock::now();
    report_.claims.push_back(std::move(c));
    return report_.claims.back();
  }

  SuiteReport report_;
  Clock::time_point mark_ = Clock::now();
};

// Order-sensitive digest of a batch of instance digests.
std::string BatchDigest(const std::vector<std::string>& digests) {
  uint64_t h = 14695981039346656037ULL;
  for (const std::string& d : digests) {
    for (unsigned char ch : d + "\n") {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Portable bounded draw in [lo, hi].
int Draw(std::mt19937_64& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<uint64_t>(hi - lo + 1));
}

Instance RandomInstance(std::mt19937_64& g, int max_types, int max_actions,
                        int max_outcomes, RandomStructure structure) {
  RandomParams p;
  p.types = Draw(g, 1, max_types);
  p.actions = structure == RandomStructure::kTwoAction ? 2 : Draw(g, 2, max_actions);
  p.outcomes = Draw(g, 2, max_outcomes);
  p.structure = structure;
  p.seed = g();
  return GenRandom(p);
}

Instance SubInstance(const Instance& instance, const std::vector<int>& types,
                     std::vector<Rational> prior) {
  Instance out;
  out.rewards = instance.rewards;
  for (int t : types) out.actions.push_back(instance.actions[t]);
  out.prior = std::move(prior);
  return out;
}

// Profit the principal earns from a type taking its own list.
Rational OwnListProfit(const Envelope& env, const std::vector<RlcItem>& items) {
  Rational total = 0;
  for (const RlcItem& item : items) {
    total += item.prob * (Rational(1) - item.alpha) * RightSlope(env, item.alpha);
  }
  return total;
}

std::string DescribeResponse(int type, const Response& r) {
  return "type " + std::to_string(type) + " takes item " +
         std::to_string(r.item) + " with action " + std::to_string(r.action);
}

constexpr uint64_t kDefaultSeed = 20260101;

SuiteReport ExampleRlc(const SuiteOptions& options) {
  const auto start = Clock::now();
  Builder b("example-rlc", options.seed.value_or(0));
  const Rational eps = rat(1, 10);
  const RlcFamily f = GenExampleRlc(eps);
  const std::vector<Rational> w = Ones(2);
  b.Digest("example eps=1/10", f.instance);

  const LinearResult lin = OptLinear(f.instance, w);
  b.Add("linear-opt", "best single linear contract, two-type example",
        lin.value, Comparator::kEq, rat(1, 2), "unit",
        true, "alpha* = " + lin.alpha_star.ToString());

  const RlcEvaluation ev = EvaluateRlcMenu(f.instance, f.menu, w);
  b.Add("menu-value", "two-list randomized menu earns 2/3 - eps/3",
        ev.value, Comparator::kEq, rat(2, 3) - eps / 3, "unit");
  b.Add("menu-ic", "each type takes its own list",
        Indicator(ev.incentive_compatible), Comparator::kEq, 1, "unit");
  b.Add("menu-strict-type2", "the second type strictly prefers its own list",
        Indicator(ev.strict.at(1)), Comparator::kEq, 1, "unit");

  const RlcResult opt = OptRlcMenu(f.instance, w, false);
  b.Stat("rlc_pivots", opt.pivots);
  b.Add("rlc-opt", "optimal randomized menu is at least the explicit menu",
        opt.value, Comparator::kGe, rat(2, 3) - eps / 3, "unit");
  b.Add("rlc-beats-linear", "randomized menu strictly beats linear contracts",
        opt.value, Comparator::kGt, lin.value, "unit");
  return b.Finish(start);
}

SuiteReport UnboundedRlc(const SuiteOptions& options) {
  const auto start = Clock::now();
  Builder b("unbounded-rlc", options.seed.value_or(0));
  const RlcFamily f = GenUnboundedRlc();
  const std::vector<Rational> w = Ones(2);
  const std::vector<Envelope> envs = TypeEnvelopes(f.instance);
  b.Digest("unbounded example", f.instance);

  b.Add("list1-revenue", "first list earns 359/2400 from its own type",
        OwnListProfit(envs[0], f.menu.items[0]), Comparator::kEq,
        rat(359, 2400), "unit");
  b.Add("list2-revenue", "second list earns 1/6 from its own type",
        OwnListProfit(envs[1], f.menu.items[1]), Comparator::kEq, rat(1, 6),
        "unit");
  const RlcEvaluation ev = EvaluateRlcMenu(envs, f.menu, w);
  std::string picks;
  for (size_t t = 0; t < ev.chosen.size(); ++t) {
    picks += (t ? ", " : "") + std::string("type ") + std::to_string(t) +
             " takes list " + std::to_string(ev.chosen[t]);
  }
  b.Add("menu-ic", "explicit unbounded menu is incentive compatible",
        Indicator(ev.incentive_compatible), Comparator::kEq, 1, "unit", false,
        picks + "; evaluated value " + ev.value.ToString());

  const RlcResult unbounded = OptRlcMenu(f.instance, w, false);
  const RlcResult bounded = OptRlcMenu(f.instance, w, true);
  b.Stat("rlc_pivots", unbounded.pivots + bounded.pivots);
  b.Add("unbounded-opt", "optimal unbounded menu reaches 253/800",
        unbounded.value, Comparator::kGe, rat(253, 800), "unit");
  b.Add("bounded-opt", "optimal bounded menu stays below 31/100",
        bounded.value, Comparator::kLt, rat(31, 100), "unit");
  b.Add("unbounded-gap", "unbounded optimum strictly exceeds bounded optimum",
        unbounded.value - bounded.value, Comparator::kGt, 0, "unit", true,
        "unbounded " + unbounded.value.ToString() + ", bounded " +
            bounded.value.ToString());
  return b.Finish(start);
}

SuiteReport OmegaN(const SuiteOptions& options) {
  const auto start = Clock::now();
  Builder b("omega-n", options.seed.value_or(0));
  EnumOptions eo;
  eo.threads = options.threads;
  for (int n : {12, 16}) {
    b.Restart();
    const std::string tag = "n=" + std::to_string(n);
    const DetFamily f = GenOmegaN(n);
    const Instance& inst = f.instance;
    b.Digest("omega-n " + tag, inst);
    std::vector<Rational> w;
    for (const Rational& p : inst.prior) w.push_back(p / inst.prior[0]);
    const Rational nn = Rational(n);

    int welfare_mismatch = 0;
    for (int i = 1; i <= n; ++i) {
      const Rational welfare =
          inst.ExpectedReward(0, i) - inst.actions[0][i].cost;
      if (welfare != Rational(i) * PowInt(nn, -(n + 1))) ++welfare_mismatch;
    }
    b.Add("welfare-" + tag, "first type: action i has welfare i/n^(n+1)",
          welfare_mismatch, Comparator::kEq, 0, "unit");

    const ContractEvaluation ev = EvaluateDetMenu(inst, f.menu, w);
    const Response& r0 = ev.responses[0];
    const Response& r1 = ev.responses[1];
    b.Add("type1-profit-" + tag, "first type earns exactly 1/n^n under the menu",
          r0.profit, Comparator::kEq, PowInt(nn, -n), "unit",
          true, DescribeResponse(0, r0));
    b.Add("type2-profit-" + tag, "second type earns a nonnegative profit",
          r1.profit, Comparator::kGe, 0, "unit", true,
          DescribeResponse(1, r1));
    b.Add("responses-" + tag,
          "first type takes contract 0 with action n, second takes contract 1 with action 2n",
          Indicator(r0.item == 0 && r0.action == n && r1.item == 1 &&
                    r1.action == 2 * n),
          Comparator::kEq, 1, "unit");
    b.Add("types12-profit-" + tag, "first two types together earn at least 1/n^n",
          r0.profit + r1.profit, Comparator::kGe, PowInt(nn, -n), "unit");

    const int64_t profiles = CountProfiles(inst, true);
    b.Stat("profiles_unpruned_" + tag, CountProfiles(inst, false));
    b.Add("profiles-" + tag, "pruned enumeration fits under the profile cap",
          Rational(static_cast<long>(profiles)), Comparator::kLe,
          Rational(static_cast<long>(eo.profile_cap)), "unit");

    const SingleResult single = OptSingle(inst, w, eo);
    b.Stat("single_profiles_" + tag, single.stats.profiles);
    b.Stat("single_pivots_" + tag, single.stats.pivots);
    b.Stat("collapsed_actions_" + tag, single.stats.collapsed_actions);
    b.Add("single-opt-" + tag, "every single contract earns at most 14/n^(n+1)",
          single.value, Comparator::kLe, 14 * PowInt(nn, -(n + 1)), "unit");

    const DetMenuResult det = OptDetMenu(inst, w, eo);
    b.Stat("det_profiles_" + tag, det.stats.profiles);
    b.Stat("det_pivots_" + tag, det.stats.pivots);
    b.Add("det-opt-" + tag, "optimal deterministic menu is at least the explicit menu",
          det.value, Comparator::kGe, ev.value, "unit");
    if (single.value.sign() > 0) {
      b.Add("ratio-" + tag, "menu to single-contract ratio is at least n/14",
            det.value / single.value, Comparator::kGe, rat(n, 14), "unit");
    } else {
      b.Add("ratio-" + tag, "menu to single-contract ratio is at least n/14",
            det.value, Comparator::kGt, 0, "unit", true,
            "single contract earns 0; ratio unbounded");
    }
  }
  return b.Finish(start);
}

SuiteReport OmegaLogT(const SuiteOptions& options) {
  const auto start = Clock::now();
  Builder b("omega-logt", options.seed.value_or(0));
  const int levels = 3;
  const DetFamily f = GenOmegaLogT(levels);
  const Instance& inst = f.instance;
  const std::vector<Rational>& w = inst.prior;
  const int num_types = inst.num_types();
  const int m = inst.num_outcomes();
  b.Digest("omega-logt N=3", inst);

  const ContractEvaluation ev = EvaluateDetMenu(inst, f.menu, w);
  b.Add("menu-value", "explicit menu earns at least 1/16^(N+1)", ev.value,
        Comparator::kGe, PowInt(Rational(16), -(levels + 1)), "prior");

  int violations = 0;
  std::string which;
  for (int t = 0; t + 1 < num_types; ++t) {
    const Response& r = ev.responses[t];
    if (r.item != t || r.action != 1) {
      ++violations;
      which += (which.empty() ? "" : "; ") + DescribeResponse(t, r);
    }
  }
  b.Add("own-contract", "every menu type takes its own contract with action 1",
        violations, Comparator::kEq, 0, "prior", true,
        which.empty() ? "" : which);

  const Rational cap = Rational(6) / (levels * PowInt(Rational(16), levels));
  Rational best_linear = 0;
  const std::vector<Rational> bps = MergedBreakpoints(inst);
  for (const Rational& alpha : bps) {
    GeneralContract x(m);
    for (int j = 0; j < m; ++j) x[j] = alpha * inst.rewards[j];
    best_linear = Max(best_linear, EvaluateSingle(inst, x, w).value);
  }
  b.Add("candidate-linear", "breakpoint linear contracts earn at most 6/(N 16^N)",
        best_linear, Comparator::kLe, cap, "prior", true,
        std::to_string(bps.size()) + " coefficients checked");
  Rational best_item = EvaluateSingle(inst, f.menu.contracts[0], w).value;
  for (const GeneralContract& x : f.menu.contracts) {
    best_item = Max(best_item, EvaluateSingle(inst, x, w).value);
  }
  b.Add("candidate-items", "each menu contract offered alone earns at most 6/(N 16^N)",
        best_item, Comparator::kLe, cap, "prior");
  b.Add("candidate-zero", "the zero contract earns at most 6/(N 16^N)",
        EvaluateSingle(inst, GeneralContract(m), w).value, Comparator::kLe, cap,
        "prior");

  EnumOptions eo;
  eo.threads = options.threads;
  try {
    const SingleResult single = OptSingle(inst, w, eo);
    b.Add("single-opt", "best single contract earns at most 6/(N 16^N)",
          single.value, Comparator::kLe, cap, "prior");
  } catch (const ProfileCapExceeded& e) {
    b.Skip("single-opt", "best single contract earns at most 6/(N 16^N)",
           Comparator::kLe, cap, "prior",
           "skipped: out of desk scale (" + std::to_string(e.profiles()) +
               " profiles)");
  }
  return b.Finish(start);
}

SuiteReport OmegaTRlc(const SuiteOptions& options) {
  const auto start = Clock::now();
  Builder b("omega-t-rlc", options.seed.value_or(0));
  for (int num_types : {3, 5, 8}) {
    b.Restart();
    const std::string tag = "T=" + std::to_string(num_types);
    const RlcFamily f = GenOmegaTRlc(num_types);
    const Instance& inst = f.instance;
    const std::vector<Rational>& w = inst.prior;
    b.Digest("omega-t " + tag, inst);
    const int pieces = 2 * num_types + 3;
    const Rational eta = rat(1, 2 * num_types);
    const Rational scale = 10 * pieces * (Rational(1) - eta);

    b.Add("round-trip-" + tag, "utility envelopes reproduce the slope spec",
          Indicator(UtilitiesOf(inst).types == f.spec.types), Comparator::kEq,
          1, "uniform");

    const RlcEvaluation ev = EvaluateRlcMenu(inst, f.menu, w);
    b.Add("strict-ic-" + tag, "every type strictly prefers its own list",
          Indicator(ev.incentive_compatible && ev.all_strict), Comparator::kEq,
          1, "uniform");
    const Rational per_type = (Rational(1) + rat(num_types, 2)) / scale;
    int mismatches = 0;
    for (const Rational& p : ev.profits) mismatches += p != per_type;
    b.Add("per-type-profit-" + tag, "each type yields (1 + T/2)/(10n(1 - eta))",
          mismatches, Comparator::kEq, 0, "uniform", true,
          "reference " + per_type.ToString());

    const LinearResult lin = OptLinear(inst, w);
    b.Add("linear-opt-" + tag, "every linear contract earns at most (5/2)/(10n(1 - eta))",
          lin.value, Comparator::kLe, rat(5, 2) / scale, "uniform");
    const RlcResult opt = OptRlcMenu(inst, w, false);
    b.Stat("rlc_pivots_" + tag, opt.pivots);
    b.Add("rlc-opt-" + tag, "optimal randomized menu is at least the explicit menu",
          opt.value, Comparator::kGe, ev.value, "uniform");
    const Rational ratio = lin.value.is_zero() ? Rational(0) : opt.value / lin.value;
    b.Add("ratio-" + tag, "randomized menu to linear ratio is at least (2 + T)/5",
          ratio, Comparator::kGe, rat(2 + num_types, 5), "uniform");
  }
  return b.Finish(start);
}

SuiteReport HierarchyRandom(const SuiteOptions& options) {
  const auto start = Clock::now();
  const uint64_t seed = options.seed.value_or(kDefaultSeed);
  Builder b("hierarchy-random", seed);
  std::mt19937_64 g(seed);
  EnumOptions eo;
  eo.threads = options.threads;
  const int count = 200;

  int lin_single = 0, single_det = 0, lin_rlc = 0, rlc_uniform = 0;
  int collapse_one_rlc = 0, collapse_one_det = 0;
  int collapse_dup_rlc = 0, collapse_dup_det = 0;
  int reeval_single = 0, reeval_det = 0, reeval_rlc = 0, prune_agree = 0;
  std::vector<std::string> digests;
  for (int k = 0; k < count; ++k) {
    const Instance inst = RandomInstance(g, 3, 4, 3, RandomStructure::kGeneral);
    digests.push_back(InstanceDigest(inst));
    const std::vector<Rational>& w = inst.prior;
    const int num_types = inst.num_types();

    const LinearResult lin = OptLinear(inst, w);
    const SingleResult single = OptSingle(inst, w, eo);
    const DetMenuResult det = OptDetMenu(inst, w, eo);
    const RlcResult rlc = OptRlcMenu(inst, w, false);
    b.Stat("profiles", single.stats.profiles + det.stats.profiles);
    b.Stat("pivots", single.stats.pivots + det.stats.pivots + rlc.pivots);
    lin_single += lin.value > single.value;
    single_det += single.value > det.value;
    lin_rlc += lin.value > rlc.value;

    const std::vector<Rational> u = UniformPrior(num_types);
    const Rational lin_u = OptLinear(inst, u).value;
    const Rational rlc_u = OptRlcMenu(inst, u, false).value;
    rlc_uniform += rlc_u > num_types * lin_u;

    reeval_single += EvaluateSingle(inst, single.contract, w).value != single.value;
    reeval_det += EvaluateDetMenu(inst, det.menu, w).value != det.value;
    reeval_rlc += EvaluateRlcMenu(inst, rlc.menu, w).value != rlc.value;

    if (k < 50) {
      EnumOptions full = eo;
      full.prune = false;
      prune_agree += OptSingle(inst, w, full).value != single.value ||
                     OptDetMenu(inst, w, full).value != det.value;
    }

    const Instance one = SubInstance(inst, {0}, {Rational(1)});
    const Rational one_lin = OptLinear(one, one.prior).value;
    collapse_one_rlc += OptRlcMenu(one, one.prior, false).value != one_lin;
    collapse_one_det += OptDetMenu(one, one.prior, eo).value !=
                        OptSingle(one, one.prior, eo).value;

    const Rational p = rat(Draw(g, 1, 4), 5);
    const Instance dup = SubInstance(inst, {0, 0}, {p, Rational(1) - p});
    const Rational dup_lin = OptLinear(dup, dup.prior).value;
    collapse_dup_rlc += OptRlcMenu(dup, dup.prior, false).value != dup_lin;
    collapse_dup_det += OptDetMenu(dup, dup.prior, eo).value !=
                        OptSingle(dup, dup.prior, eo).value;
  }
  b.Digest("batch of 200", BatchDigest(digests));
  const std::string of = " (violations of 200)";
  b.Add("linear-le-single", "best linear contract never beats best single contract" + of,
        lin_single, Comparator::kEq, 0, "prior");
  b.Add("single-le-det", "best single contract never beats best deterministic menu" + of,
        single_det, Comparator::kEq, 0, "prior");
  b.Add("linear-le-rlc", "best linear contract never beats best randomized menu" + of,
        lin_rlc, Comparator::kEq, 0, "prior");
  b.Add("rlc-le-t-linear", "randomized menu earns at most T times the best linear contract" + of,
        rlc_uniform, Comparator::kEq, 0, "uniform");
  b.Add("single-type-rlc", "with one type the randomized menu equals the linear optimum" + of,
        collapse_one_rlc, Comparator::kEq, 0, "prior");
  b.Add("single-type-det", "with one type the deterministic menu equals the single contract" + of,
        collapse_one_det, Comparator::kEq, 0, "prior");
  b.Add("duplicate-type-rlc", "two copies of one type: randomized menu equals linear optimum" + of,
        collapse_dup_rlc, Comparator::kEq, 0, "prior");
  b.Add("duplicate-type-det", "two copies of one type: deterministic menu equals single contract" + of,
        collapse_dup_det, Comparator::kEq, 0, "prior");
  b.Add("reeval-single", "optimal single contract re-evaluates to its value" + of,
        reeval_single, Comparator::kEq, 0, "prior");
  b.Add("reeval-det", "optimal deterministic menu re-evaluates to its value" + of,
        reeval_det, Comparator::kEq, 0, "prior");
  b.Add("reeval-rlc", "extracted randomized menu re-evaluates to its value" + of,
        reeval_rlc, Comparator::kEq, 0, "prior");
  b.Add("prune-agrees", "pruned and full enumeration agree (violations of 50)",
        prune_agree, Comparator::kEq, 0, "prior");
  return b.Finish(start);
}

SuiteReport BreakpointAugmentation(const SuiteOptions& options) {
  const auto start = Clock::now();
  const uint64_t seed = options.seed.value_or(kDefaultSeed + 1);
  Builder b("column-augmentation", seed);
  std::mt19937_64 g(seed);
  int changed = 0, instances = 0, skipped = 0;
  std::vector<std::string> digests;
  while (instances < 50) {
    const Instance inst = RandomInstance(g, 3, 4, 3, RandomStructure::kGeneral);
    const std::vector<Rational> bps = MergedBreakpoints(inst);
    if (bps.size() < 2) {
      ++skipped;
      continue;
    }
    ++instances;
    digests.push_back(InstanceDigest(inst));
    const std::set<Rational> taken(bps.begin(), bps.end());
    const Rational upper = bps.back() + 1;
    std::set<Rational> extra;
    while (extra.size() < 20) {
      const int q = Draw(g, 7, 97);
      const Rational alpha = upper * rat(Draw(g, 1, q - 1), q);
      if (!taken.count(alpha)) extra.insert(alpha);
    }
    const RlcResult base = OptRlcMenu(inst, inst.prior, false);
    const RlcResult aug = OptRlcMenu(inst, inst.prior, false,
                                     std::vector<Rational>(extra.begin(), extra.end()));
    b.Stat("pivots", base.pivots + aug.pivots);
    changed += base.value != aug.value;
  }
  b.Stat("single_segment_instances_skipped", skipped);
  b.Digest("batch of 50", BatchDigest(digests));
  b.Add("augmented-optimum", "20 extra non-breakpoint columns leave the optimum unchanged (changes of 50)",
        changed, Comparator::kEq, 0, "prior");
  return b.Finish(start);
}

LinearProgram RandomLp(std::mt19937_64& g) {
  LinearProgram lp;
  const int n = Draw(g, 1, 4);
  const int k = Draw(g, 1, 5);
  for (int j = 0; j < n; ++j) lp.AddVariable(Draw(g, -3, 3));
  bool has_equality = false;
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) row.push_back(Draw(g, -2, 3));
    const int r = Draw(g, 0, 9);
    Relation rel = Relation::kLessEqual;
    if (r >= 7) rel = Relation::kGreaterEqual;
    if (r == 9 && !has_equality) {
      rel = Relation::kEqual;
      has_equality = true;
    }
    lp.AddConstraint(std::move(row), rel, Draw(g, -1, 6));
  }
  // Half of the programs get a box row so that most of them are bounded.
  if (Draw(g, 0, 1) == 1) {
    lp.AddConstraint(std::vector<Rational>(n, Rational(1)), Relation::kLessEqual,
                     Draw(g, 1, 6));
  }
  return lp;
}

// Number of violated duality conditions for an optimal solution.
int DualityViolations(const LinearProgram& lp, const LpOutcome& out) {
  int bad = 0;
  Rational by = 0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const Constraint& c = lp.constraints[i];
    const Rational& y = out.duals[i];
    by += c.rhs * y;
    if (c.relation == Relation::kLessEqual && y.sign() < 0) ++bad;
    if (c.relation == Relation::kGreaterEqual && y.sign() > 0) ++bad;
    const Rational slack = c.rhs - Dot(c.row, out.x);
    if (!slack.is_zero() && !y.is_zero()) ++bad;
  }
  if (by != out.value) ++bad;
  for (int j = 0; j < lp.num_variables(); ++j) {
    Rational col = 0;
    for (int i = 0; i < lp.num_constraints(); ++i) {
      col += lp.constraints[i].row[j] * out.duals[i];
    }
    if (col < lp.objective[j]) ++bad;
    if (out.x[j].sign() > 0 && col != lp.objective[j]) ++bad;
  }
  return bad;
}

SuiteReport Oracles(const SuiteOptions& options) {
  const auto start = Clock::now();
  const uint64_t seed = options.seed.value_or(kDefaultSeed + 2);
  Builder b("oracles", seed);
  std::mt19937_64 g(seed);
  EnumOptions eo;
  eo.threads = options.threads;

  int grid_beats = 0;
  std::vector<std::string> digests;
  for (int k = 0; k < 50; ++k) {
    RandomParams p;
    p.types = 2;
    p.actions = 3;
    p.outcomes = 2;
    p.seed = g();
    const Instance inst = GenRandom(p);
    digests.push_back(InstanceDigest(inst));
    const Rational opt = OptSingle(inst, inst.prior, eo).value;
    grid_beats += GridBestSingle(inst, inst.prior, 200, rat(1, 100)) > opt;
  }
  b.Digest("tiny batch of 50", BatchDigest(digests));
  b.Add("single-vs-grid", "enumeration dominates a 200x200 payment grid (violations of 50)",
        grid_beats, Comparator::kEq, 0, "prior");

  b.Restart();
  int status_mismatch = 0, value_mismatch = 0, duality = 0;
  std::map<std::string, int64_t> statuses;
  for (int k = 0; k < 100; ++k) {
    const LinearProgram lp = RandomLp(g);
    const LpOutcome s = Solve(lp);
    const VertexResult v = VertexEnumerate(lp);
    b.Stat("lp_" + ToString(s.status), 1);
    if (s.status != v.status) {
      ++status_mismatch;
      continue;
    }
    if (s.status == LpStatus::kOptimal) {
      value_mismatch += s.value != v.value;
      duality += DualityViolations(lp, s) > 0;
    }
  }
  b.Add("simplex-status", "simplex status matches vertex enumeration (mismatches of 100)",
        status_mismatch, Comparator::kEq, 0, "n/a");
  b.Add("simplex-value", "simplex optimum matches vertex enumeration (mismatches of 100)",
        value_mismatch, Comparator::kEq, 0, "n/a");
  b.Add("simplex-duality", "duals certify optimality (violating programs of 100)",
        duality, Comparator::kEq, 0, "n/a");

  b.Restart();
  int linear_beats = 0;
  for (int k = 0; k < 50; ++k) {
    const Instance inst = RandomInstance(g, 3, 4, 3, RandomStructure::kGeneral);
    const std::vector<Envelope> envs = TypeEnvelopes(inst);
    linear_beats += GridBestLinear(envs, inst.prior, 10000) >
                    OptLinear(envs, inst.prior).value;
  }
  b.Add("linear-vs-grid", "breakpoint scan dominates a 10000-point coefficient grid (violations of 50)",
        linear_beats, Comparator::kEq, 0, "prior");
  return b.Finish(start);
}

constexpr int kSurveyWarnRatio = 50;

SuiteReport TwoActionSurvey(const SuiteOptions& options) {
  const auto start = Clock::now();
  const uint64_t seed = options.seed.value_or(kDefaultSeed + 3);
  Builder b("two-action-survey", seed);
  std::mt19937_64 g(seed);
  Rational max_ratio = 0;
  Rational ratio_sum = 0;
  int counted = 0, both_zero = 0, linear_zero = 0, below = 0;
  std::vector<std::string> digests;
  for (int k = 0; k < 200; ++k) {
    const Instance inst = RandomInstance(g, 6, 2, 3, RandomStructure::kTwoAction);
    digests.push_back(InstanceDigest(inst));
    const Rational lin = OptLinear(inst, inst.prior).value;
    const RlcResult rlc = OptRlcMenu(inst, inst.prior, false);
    b.Stat("pivots", rlc.pivots);
    below += rlc.value < lin;
    if (lin.is_zero()) {
      if (rlc.value.is_zero()) {
        ++both_zero;
      } else {
        ++linear_zero;
      }
      continue;
    }
    const Rational ratio = rlc.value / lin;
    max_ratio = Max(max_ratio, ratio);
    ratio_sum += ratio;
    ++counted;
  }
  b.Digest("batch of 200", BatchDigest(digests));
  b.Stat("instances_with_ratio", counted);
  b.Stat("both_zero", both_zero);
  b.Stat("linear_zero_menu_positive", linear_zero);
  const std::string mean =
      counted ? ToDecimal(ratio_sum / counted, 6) : std::string("n/a");
  b.Add("rlc-ge-linear", "randomized menu never earns less than linear (violations of 200)",
        below, Comparator::kEq, 0, "prior");
  b.Add("max-ratio", "randomized menu to linear ratio stays a constant",
        max_ratio, Comparator::kLe, kSurveyWarnRatio, "prior", false,
        "mean ratio " + mean + " over " + std::to_string(counted) +
            " instances; max " + ToDecimal(max_ratio, 6));
  b.Add("linear-zero", "instances where only the randomized menu earns",
        linear_zero, Comparator::kEq, 0, "prior", false);
  return b.Finish(start);
}

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& Registry() {
  static const auto* registry = new std::vector<std::pair<std::string, SuiteFn>>{
      {"example-rlc", ExampleRlc},
      {"unbounded-rlc", UnboundedRlc},
      {"omega-n", OmegaN},
      {"omega-logt", OmegaLogT},
      {"omega-t-rlc", OmegaTRlc},
      {"hierarchy-random", HierarchyRandom},
      {"column-augmentation", BreakpointAugmentation},
      {"oracles", Oracles},
      {"two-action-survey", TwoActionSurvey},
  };
  return *registry;
}

}  // namespace

std::vector<std::string> SuiteIds() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : Registry()) ids.push_back(id);
  return ids;
}

SuiteReport RunSuite(const std::string& id, const SuiteOptions& options) {
  for (const auto& [name, fn] : Registry()) {
    if (name == id) return fn(options);
  }
  throw std::invalid_argument("unknown suite: " + id);
}

std::string FormatText(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << " (seed " << report.seed << ", "
     << std::fixed << std::setprecision(2) << report.seconds << " s)\n";
  for (const Claim& c : report.claims) {
    std::string verdict = ToString(c.verdict);
    for (char& ch : verdict) ch = static_cast<char>(std::toupper(ch));
    os << "  " << std::left << std::setw(8) << verdict << c.id
       << (c.hard ? "" : " [soft]") << "\n"
       << "      " << c.anchor << "\n"
       << "      computed "
       << (c.computed ? c.computed->ToString() : std::string("-")) << " "
       << ToString(c.cmp) << " " << c.reference.ToString() << "  ("
       << (c.computed ? ToDecimal(*c.computed) : std::string("-")) << ")  weights "
       << c.weights << ", " << std::setprecision(3) << c.seconds << " s\n";
    if (!c.note.empty()) os << "      note: " << c.note << "\n";
  }
  for (const auto& [label, digest] : report.digests) {
    os << "  digest " << digest << "  " << label << "\n";
  }
  for (const auto& [key, value] : report.stats) {
    os << "  stat   " << key << " = " << value << "\n";
  }
  os << "result " << report.suite << ": " << (report.Passed() ? "PASS" : "FAIL")
     << " (" << report.Count(Verdict::kPass) << " pass, "
     << report.Count(Verdict::kFail) << " fail, "
     << report.Count(Verdict::kSkipped) << " skipped, "
     << report.Count(Verdict::kWarn) << " warn)\n";
  return os.str();
}

std::string FormatMachine(const SuiteReport& report) {
  using ojson = nlohmann::ordered_json;
  std::ostringstream os;
  for (const Claim& c : report.claims) {
    ojson rec;
    rec["record"] = "claim";
    rec["suite"] = report.suite;
    rec["id"] = c.id;
    rec["anchor"] = c.anchor;
    rec["computed"] = c.computed ? ojson(c.computed->ToString()) : ojson(nullptr);
    rec["computed_decimal"] =
        c.computed ? ojson(ToDecimal(*c.computed)) : ojson(nullptr);
    rec["comparator"] = ToString(c.cmp);
    rec["reference"] = c.reference.ToString();
    rec["reference_decimal"] = ToDecimal(c.reference);
    rec["weights"] = c.weights;
    rec["hard"] = c.hard;
    rec["verdict"] = ToString(c.verdict);
    rec["seconds"] = c.seconds;
    rec["note"] = c.note;
    os << rec.dump() << "\n";
  }
  for (const auto& [label, digest] : report.digests) {
    ojson rec;
    rec["record"] = "digest";
    rec["suite"] = report.suite;
    rec["label"] = label;
    rec["digest"] = digest;
    os << rec.dump() << "\n";
  }
  for (const auto& [key, value] : report.stats) {
    ojson rec;
    rec["record"] = "stat";
    rec["suite"] = report.suite;
    rec["key"] = key;
    rec["value"] = value;
    os << rec.dump() << "\n";
  }
  ojson sum;
  sum["record"] = "summary";
  sum["suite"] = report.suite;
  sum["seed"] = report.seed;
  sum["passed"] = report.Passed();
  sum["pass"] = report.Count(Verdict::kPass);
  sum["fail"] = report.Count(Verdict::kFail);
  sum["skipped"] = report.Count(Verdict::kSkipped);
  sum["warn"] = report.Count(Verdict::kWarn);
  sum["seconds"] = report.seconds;
  os << sum.dump() << "\n";
  return os.str();
}

}  // namespace contracts
