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

// Monte Carlo driver: method descriptors, error estimation with hard cost
// caps, cost audits, parameter tables and the method comparison CSV.

#ifndef ADAREC_HARNESS_H_
#define ADAREC_HARNESS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adarec/adaptive.h"
#include "adarec/core.h"
#include "adarec/discover.h"
#include "adarec/families.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace adarec {

// A trial measured more than its method's declared cap.
class CapViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MethodKind {
  kZero,
  kReadAll,
  kAdaptive,
  kLinSketch,
  kLinSketchDenoise,
  kCountSketch,
  kCountSketchDenoise,
  kSpot,      // spot on [0, m); output is zero, cost probe only
  kDiscover,  // one discover pass; output is zero, cost probe only
};

std::string_view to_string(MethodKind kind);
MethodKind parse_method(std::string_view name);

struct MethodSpec {
  MethodKind kind = MethodKind::kZero;
  Variant variant = Variant::kPreconditioned;  // adaptive, discover
  int L = 0;                 // adaptive, countsketch (-1: zero fallback)
  int R = 0;                 // adaptive (0 = default), countsketch (0 = default)
  std::uint64_t n = 0;       // linsketch rows (0: zero fallback)
  int k_star = -1;           // spot (required), discover (-1 = derived)
  std::uint64_t buckets = 0; // discover D
};

// A method bound to (m, p, q) with its derived parameters and cost cap.
class PreparedMethod {
 public:
  PreparedMethod(const MethodSpec& spec, std::size_t m, double p, double q);

  const MethodSpec& spec() const { return spec_; }
  std::uint64_t cost_cap() const { return cap_; }
  // Effective (L, R) for reporting; (0, 0) when not applicable.
  int reported_L() const;
  int reported_R() const;

  struct Run {
    Vector output;
    CostBreakdown cost;
  };
  Run run(MeasurementOracle& oracle, const RngStream& rng) const;

 private:
  MethodSpec spec_;
  std::size_t m_;
  double p_;
  double q_;
  std::uint64_t cap_ = 0;
  std::optional<AdaptivePlan> plan_;
  std::optional<DiscoverConfig> discover_;
  int cs_R_ = 0;
  std::uint64_t cs_G_ = 0;
};

struct ExperimentConfig {
  MethodSpec method;
  VectorFamily family;
  std::size_t m = 0;
  double p = 1.0;  // the family's ball
  double q = 2.0;  // error norm
  int trials = 2000;
  std::uint64_t seed = 0;
};

struct ErrorEstimate {
  double mean_err = 0.0;
  double qmoment_err = 0.0;  // (mean ||x - out||_q^q)^(1/q)
  double ci = 0.0;           // 95% half-width for mean_err
  double mean_cost = 0.0;
  std::uint64_t max_cost = 0;
  std::uint64_t cap = 0;
  CostBreakdown max_stage;   // per-stage maxima over trials
  int trials = 0;
};

// 1.96 * (sample std) / sqrt(T); 0 when T == 1.
double ci_half_width(const std::vector<double>& samples);

// Runs cfg.trials independent trials. Each trial draws its vector and its
// method randomness from streams derived from (seed, trial index) and uses a
// fresh oracle. Throws CapViolation when a trial exceeds the cap.
ErrorEstimate estimate_error(const ExperimentConfig& cfg);

struct CostAuditReport {
  std::uint64_t cap = 0;
  std::uint64_t max_cost = 0;
  double mean_cost = 0.0;
  CostBreakdown max_stage;
  bool ok = true;
  std::string text;  // human-readable summary
};

// Like estimate_error but records a violation instead of throwing.
CostAuditReport cost_audit(const ExperimentConfig& cfg);

struct ParamRow {
  std::string mode;  // "eps" or "budget"
  double value = 0.0;
  int L = 0;
  int R = 0;
  std::vector<std::uint64_t> D;  // D^(1..L)
  std::uint64_t discover_cap = 0;
  std::uint64_t read_cap = 0;
  std::uint64_t cost_cap = 0;
  double error_bound = 1.0;
};

std::vector<ParamRow> param_table_eps(double p, double q, std::size_t m,
                                      const std::vector<double>& eps,
                                      Variant variant);
std::vector<ParamRow> param_table_budget(double p, double q, std::size_t m,
                                         const std::vector<std::uint64_t>& n,
                                         Variant variant);
std::string param_table_csv(const std::vector<ParamRow>& rows, double p,
                            double q, std::size_t m, Variant variant);

// Largest L with R * G <= n, R from countsketch_params; nullopt if none.
std::optional<int> countsketch_L_for_budget(std::uint64_t n, std::size_t m);

// The method a budget maps to for each compared algorithm.
std::vector<MethodSpec> methods_for_budget(std::uint64_t n, std::size_t m,
                                           double p, double q);

struct CompareConfig {
  std::size_t m = 0;
  double p = 1.0;
  double q = 2.0;
  std::vector<std::uint64_t> budgets;
  std::vector<VectorFamily> families;
  int trials = 200;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kCompareHeader =
    "method,variant,m,p,q,budget,L,R,family,trials,mean_err,qmoment_err,ci,"
    "mean_cost,max_cost,seed";

// One CSV row (no newline) in kCompareHeader order.
std::string experiment_row(const ExperimentConfig& cfg, std::uint64_t budget,
                           const PreparedMethod& method,
                           const ErrorEstimate& e);

// One row per (method, budget, family), header first.
std::string compare_methods(const CompareConfig& cfg);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace adarec

#endif  // ADAREC_HARNESS_H_
