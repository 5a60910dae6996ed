// Copyright 2026 The adarec Authors.
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


// Command-line driver: Monte Carlo error runs, method comparisons, parameter
// tables and cost audits. Every subcommand writes CSV.
//
//   adarec adaptive --m 4096 --eps 0.25 --family spikes:8
//   adarec compare --m 1024 --budget 0,5000,50000 --family spikes:4,geometric
//   adarec params --m 65536 --eps 0.5,0.25,0.1
//   adarec audit --method discover --m 245760 --buckets 60 --k-star 4
//
// Exit status: 0 on success, 1 on a parameter error, 2 on a cap violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adarec/adaptive.h"
#include "adarec/core.h"
#include "adarec/discover.h"
#include "adarec/families.h"
#include "adarec/harness.h"

namespace {

constexpr int kParameterExit = 1;
constexpr int kCapExit = 2;

struct Options {
  std::size_t m = 1024;
  double p = 1.0;
  double q = 2.0;
  std::vector<double> eps;
  std::vector<std::uint64_t> budget;
  int L = -1;
  int R = 0;
  std::string variant = "precond";
  std::vector<std::string> family{"spikes:4"};
  int trials = 200;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string method;
  int k_star = -1;
  std::uint64_t buckets = 0;
};

std::vector<adarec::VectorFamily> families(const Options& o) {
  std::vector<adarec::VectorFamily> out;
  for (const auto& f : o.family) out.push_back(adarec::parse_family(f));
  adarec::require(!out.empty(), "need at least one --family");
  return out;
}

adarec::ExperimentConfig experiment(const Options& o,
                                    const adarec::MethodSpec& spec,
                                    const adarec::VectorFamily& family) {
  adarec::ExperimentConfig c;
  c.method = spec;
  c.family = family;
  c.m = o.m;
  c.p = o.p;
  c.q = o.q;
  c.trials = o.trials;
  c.seed = o.seed;
  return c;
}

// Level count from --L, else --eps, else --budget.
int adaptive_levels(const Options& o, adarec::Variant v) {
  if (o.L >= 0) return o.L;
  if (o.eps.size() == 1) return adarec::choose_L_for_eps(o.eps[0], o.p, o.q);
  if (o.budget.size() == 1) {
    return adarec::choose_L_for_budget(o.budget[0], o.m, o.p, o.q, v);
  }
  throw adarec::ParameterError("adaptive: give --L, one --eps or one --budget");
}

std::string run_adaptive(const Options& o) {
  adarec::MethodSpec spec;
  spec.kind = adarec::MethodKind::kAdaptive;
  spec.variant = adarec::parse_variant(o.variant);
  spec.L = adaptive_levels(o, spec.variant);
  spec.R = o.R;
  const adarec::PreparedMethod pm(spec, o.m, o.p, o.q);
  const std::uint64_t budget = o.budget.empty() ? pm.cost_cap() : o.budget[0];
  std::ostringstream os;
  os << adarec::kCompareHeader << '\n';
  for (const auto& family : families(o)) {
    const auto cfg = experiment(o, spec, family);
    os << adarec::experiment_row(cfg, budget, pm, adarec::estimate_error(cfg)) << '\n';
  }
  return os.str();
}

std::string run_nonadaptive(const Options& o) {
  adarec::MethodSpec spec;
  spec.kind = adarec::parse_method(o.method.empty() ? "countsketch" : o.method);
  std::uint64_t budget = o.budget.empty() ? 0 : o.budget[0];
  switch (spec.kind) {
    case adarec::MethodKind::kLinSketch:
    case adarec::MethodKind::kLinSketchDenoise:
      adarec::require(o.budget.size() == 1, "linsketch: give one --budget (rows)");
      spec.n = budget;
      break;
    case adarec::MethodKind::kCountSketch:
    case adarec::MethodKind::kCountSketchDenoise:
      if (o.L >= 0) {
        spec.L = o.L;
      } else {
        adarec::require(o.budget.size() == 1, "countsketch: give --L or one --budget");
        spec.L = adarec::countsketch_L_for_budget(budget, o.m).value_or(-1);
      }
      spec.R = o.R;
      break;
    default:
      throw adarec::ParameterError(
          "nonadaptive: --method must be linsketch, linsketch_denoise, "
          "countsketch or countsketch_denoise");
  }
  const adarec::PreparedMethod pm(spec, o.m, o.p, o.q);
  if (o.budget.empty()) budget = pm.cost_cap();
  std::ostringstream os;
  os << adarec::kCompareHeader << '\n';
  for (const auto& family : families(o)) {
    const auto cfg = experiment(o, spec, family);
    os << adarec::experiment_row(cfg, budget, pm, adarec::estimate_error(cfg)) << '\n';
  }
  return os.str();
}

std::string run_compare(const Options& o) {
  adarec::CompareConfig cfg;
  cfg.m = o.m;
  cfg.p = o.p;
  cfg.q = o.q;
  cfg.budgets = o.budget;
  cfg.families = families(o);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  return adarec::compare_methods(cfg);
}

std::string run_params(const Options& o) {
  const adarec::Variant v = adarec::parse_variant(o.variant);
  std::vector<adarec::ParamRow> rows = adarec::param_table_eps(o.p, o.q, o.m, o.eps, v);
  const auto by_budget = adarec::param_table_budget(o.p, o.q, o.m, o.budget, v);
  rows.insert(rows.end(), by_budget.begin(), by_budget.end());
  adarec::require(!rows.empty(), "params: give --eps and/or --budget");
  return adarec::param_table_csv(rows, o.p, o.q, o.m, v);
}

std::string run_audit(const Options& o, bool& ok) {
  adarec::MethodSpec spec;
  spec.kind = adarec::parse_method(o.method.empty() ? "adaptive" : o.method);
  spec.variant = adarec::parse_variant(o.variant);
  spec.R = o.R;
  spec.k_star = o.k_star;
  spec.buckets = o.buckets;
  const std::uint64_t budget = o.budget.empty() ? 0 : o.budget[0];
  switch (spec.kind) {
    case adarec::MethodKind::kAdaptive:
      spec.L = adaptive_levels(o, spec.variant);
      break;
    case adarec::MethodKind::kLinSketch:
    case adarec::MethodKind::kLinSketchDenoise:
      spec.n = budget;
      break;
    case adarec::MethodKind::kCountSketch:
    case adarec::MethodKind::kCountSketchDenoise:
      spec.L = o.L >= 0 ? o.L
                        : adarec::countsketch_L_for_budget(budget, o.m).value_or(-1);
      break;
    default:
      break;
  }
  std::ostringstream os;
  os << "method,variant,m,family,trials,cap,max_cost,mean_cost,precond,spot,"
        "reads,sketch,ok\n";
  for (const auto& family : families(o)) {
    const adarec::CostAuditReport r = adarec::cost_audit(experiment(o, spec, family));
    std::cerr << r.text;
    ok = ok && r.ok;
    os << adarec::to_string(spec.kind) << ',' << adarec::to_string(spec.variant) << ','
       << o.m << ',' << adarec::to_string(family) << ',' << o.trials << ',' << r.cap
       << ',' << r.max_cost << ',' << adarec::format_double(r.mean_cost) << ','
       << r.max_stage.precond << ',' << r.max_stage.spot << ',' << r.max_stage.reads
       << ',' << r.max_stage.sketch << ',' << (r.ok ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive vs non-adaptive recovery from linear measurements"};
  app.set_config("--config", "", "Flat key=value file; flags override it");
  app.require_subcommand(1);

  Options o;
  app.add_option("--m", o.m, "Dimension")->capture_default_str();
  app.add_option("--p", o.p, "Unit ball of the inputs")->capture_default_str();
  app.add_option("--q", o.q, "Error norm")->capture_default_str();
  app.add_option("--eps", o.eps, "Target error(s)")->delimiter(',');
  app.add_option("--budget", o.budget, "Measurement budget(s)")->delimiter(',');
  app.add_option("--L", o.L, "Levels (adaptive) or count-sketch level");
  app.add_option("--R", o.R, "Repetitions (0 = default)");
  app.add_option("--variant", o.variant, "basic or precond")
      ->check(CLI::IsMember({"basic", "precond"}))
      ->capture_default_str();
  app.add_option("--family", o.family, "Vector family/families")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--trials", o.trials, "Monte Carlo trials")->capture_default_str();
  app.add_option("--seed", o.seed, "Root seed")->capture_default_str();
  app.add_option("--out", o.out, "CSV path, - for stdout")->capture_default_str();
  app.add_option("--method", o.method, "Method for nonadaptive and audit");
  app.add_option("--k-star", o.k_star, "Spot depth (audit)");
  app.add_option("--buckets", o.buckets, "Discover bucket count (audit)");

  auto* adaptive = app.add_subcommand("adaptive", "Error of the multi-level algorithm");
  auto* nonadaptive = app.add_subcommand("nonadaptive", "Error of a sketching baseline");
  auto* compare = app.add_subcommand("compare", "All methods at each budget");
  auto* params = app.add_subcommand("params", "Derived parameters per eps or budget");
  auto* audit = app.add_subcommand("audit", "Measured cost against the cap");
  for (auto* sub : {adaptive, nonadaptive, compare, params, audit}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParameterExit;
  }

  try {
    adarec::require(o.trials >= 1, "need --trials >= 1");
    bool ok = true;
    std::string csv;
    if (adaptive->parsed()) csv = run_adaptive(o);
    if (nonadaptive->parsed()) csv = run_nonadaptive(o);
    if (compare->parsed()) csv = run_compare(o);
    if (params->parsed()) csv = run_params(o);
    if (audit->parsed()) csv = run_audit(o, ok);
    if (o.out == "-") {
      std::cout << csv;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw adarec::ParameterError("cannot write " + o.out);
      file << csv;
    }
    if (!ok) {
      std::cerr << "cap violation\n";
      return kCapExit;
    }
  } catch (const adarec::CapViolation& e) {
    std::cerr << "cap violation: " << e.what() << '\n';
    return kCapExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kParameterExit;
  } catch (const std::out_of_range& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kParameterExit;
  }
  return 0;
}
