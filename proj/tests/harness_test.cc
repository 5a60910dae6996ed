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


#include "adarec/harness.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "adarec/core.h"
#include "adarec/families.h"
#include "gtest/gtest.h"

namespace adarec {
namespace {

ExperimentConfig config(MethodSpec spec, const char* family, std::size_t m,
                        double p, double q, int trials) {
  ExperimentConfig c;
  c.method = spec;
  c.family = parse_family(family);
  c.m = m;
  c.p = p;
  c.q = q;
  c.trials = trials;
  c.seed = 42;
  return c;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(HarnessTest, ReadAllIsExact) {
  const ErrorEstimate e =
      estimate_error(config({MethodKind::kReadAll}, "uniform_ball", 64, 1.0, 2.0, 20));
  EXPECT_EQ(e.mean_err, 0.0);
  EXPECT_EQ(e.max_cost, 64u);
  EXPECT_EQ(e.mean_cost, 64.0);
  EXPECT_EQ(e.trials, 20);
}

TEST(HarnessTest, ZeroFamilyGivesZeroError) {
  MethodSpec spec{MethodKind::kAdaptive};
  spec.L = 2;
  const ErrorEstimate e = estimate_error(config(spec, "zero", 512, 1.0, 2.0, 10));
  EXPECT_EQ(e.mean_err, 0.0);
  EXPECT_EQ(e.qmoment_err, 0.0);
  EXPECT_LE(e.max_cost, e.cap);
}

TEST(HarnessTest, ZeroMethodErrorIsNorm) {
  const ErrorEstimate e =
      estimate_error(config({MethodKind::kZero}, "spikes:4", 100, 1.0, 2.0, 5));
  EXPECT_DOUBLE_EQ(e.mean_err, 0.5);
  EXPECT_EQ(e.max_cost, 0u);
}

TEST(HarnessTest, QRequiredAboveP) {
  EXPECT_THROW(estimate_error(config({MethodKind::kZero}, "zero", 8, 2.0, 2.0, 1)),
               ParameterError);
}

TEST(HarnessTest, ConfidenceInterval) {
  const std::vector<double> s{1.0, 2.0, 4.0, 7.0};
  // mean 3.5, sample variance 7.
  EXPECT_NEAR(ci_half_width(s), 1.96 * std::sqrt(7.0) / 2.0, 1e-15);
  EXPECT_EQ(ci_half_width({3.0}), 0.0);
}

TEST(CostAuditTest, SpotCap) {
  MethodSpec spec{MethodKind::kSpot};
  spec.k_star = 6;
  const CostAuditReport r =
      cost_audit(config(spec, "spikes:3", 1 << 10, 1.0, 2.0, 200));
  EXPECT_EQ(r.cap, 14u);
  EXPECT_LE(r.max_cost, 14u);
  EXPECT_TRUE(r.ok);
  EXPECT_NE(r.text.find("hashing    0"), std::string::npos);
}

TEST(CostAuditTest, DiscoverCap) {
  MethodSpec spec{MethodKind::kDiscover};
  spec.variant = Variant::kPreconditioned;
  spec.buckets = 60;
  spec.k_star = 4;
  const CostAuditReport r =
      cost_audit(config(spec, "spikes:8", 245760, 1.0, 2.0, 3));
  EXPECT_EQ(r.cap, 42660u);
  EXPECT_LE(r.max_cost, 42660u);
  EXPECT_TRUE(r.ok);
}

TEST(CostAuditTest, LinSketchExact) {
  MethodSpec spec{MethodKind::kLinSketch};
  spec.n = 128;
  const CostAuditReport r = cost_audit(config(spec, "geometric", 16, 2.0, 3.0, 10));
  EXPECT_EQ(r.cap, 128u);
  EXPECT_EQ(r.max_cost, 128u);
  EXPECT_EQ(r.mean_cost, 128.0);
  EXPECT_EQ(r.max_stage.sketch, 128u);
}

TEST(CostAuditTest, AdaptiveStages) {
  MethodSpec spec{MethodKind::kAdaptive};
  spec.L = 3;
  spec.variant = Variant::kBasic;
  const CostAuditReport basic = cost_audit(config(spec, "spikes:4", 1 << 12, 1.0, 2.0, 5));
  EXPECT_TRUE(basic.ok);
  EXPECT_EQ(basic.max_stage.precond, 0u);
  EXPECT_EQ(basic.max_stage.sketch, 0u);
  spec.variant = Variant::kPreconditioned;
  const CostAuditReport pre = cost_audit(config(spec, "spikes:4", 1 << 16, 1.0, 2.0, 5));
  EXPECT_TRUE(pre.ok);
  EXPECT_GT(pre.max_stage.precond, 0u);
  EXPECT_GT(pre.max_stage.reads, 0u);
}

TEST(ParamTableTest, Examples) {
  const auto a = param_table_eps(1.0, 2.0, 1 << 20, {0.1}, Variant::kPreconditioned);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].L, 9);
  EXPECT_EQ(a[0].R, 2);
  EXPECT_EQ(a[0].D.size(), 9u);
  EXPECT_LE(a[0].error_bound, 0.1);
  const auto b = param_table_eps(2.0, 3.0, 1 << 20, {0.25}, Variant::kPreconditioned);
  EXPECT_EQ(b[0].R, 2);
  const auto c = param_table_budget(1.0, 2.0, 1 << 20, {0}, Variant::kPreconditioned);
  EXPECT_EQ(c[0].L, 0);
  EXPECT_EQ(c[0].cost_cap, 0u);
  EXPECT_EQ(c[0].error_bound, 1.0);
}

TEST(ParamTableTest, BudgetRowsFitBudget) {
  const std::vector<std::uint64_t> n{0, 1000, 100000, 10000000};
  for (Variant v : {Variant::kBasic, Variant::kPreconditioned}) {
    for (const ParamRow& row : param_table_budget(1.0, 2.0, 1 << 16, n, v)) {
      EXPECT_LE(row.cost_cap, static_cast<std::uint64_t>(row.value));
      EXPECT_EQ(row.cost_cap, row.discover_cap + row.read_cap);
    }
  }
}

TEST(ParamTableTest, CsvShape) {
  const auto rows = param_table_eps(1.0, 2.0, 4096, {0.5, 0.25}, Variant::kBasic);
  const auto csv = parse_csv(param_table_csv(rows, 1.0, 2.0, 4096, Variant::kBasic));
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv[0][0], "mode");
  for (const auto& r : csv) EXPECT_EQ(r.size(), 13u);
}

TEST(CompareTest, RowCountAndHeader) {
  CompareConfig cfg;
  cfg.m = 256;
  cfg.budgets = {0, 4096, 20000};
  cfg.families = {parse_family("spikes:2"), parse_family("geometric")};
  cfg.trials = 4;
  cfg.seed = 5;
  const auto csv = parse_csv(compare_methods(cfg));
  ASSERT_EQ(csv.size(), 1u + 7 * 3 * 2);
  std::string header;
  for (std::size_t i = 0; i < csv[0].size(); ++i) header += (i ? "," : "") + csv[0][i];
  EXPECT_EQ(header, kCompareHeader);
  for (std::size_t i = 1; i < csv.size(); ++i) {
    ASSERT_EQ(csv[i].size(), 16u);
    EXPECT_LE(std::stoull(csv[i][14]), std::stoull(csv[i][5]));
  }
}

TEST(CompareTest, Reproducible) {
  CompareConfig cfg;
  cfg.m = 128;
  cfg.budgets = {2048, 12000};
  cfg.families = {parse_family("spike_plus_tail:2")};
  cfg.trials = 5;
  cfg.seed = 11;
  const std::string a = compare_methods(cfg);
  EXPECT_EQ(a, compare_methods(cfg));
  cfg.seed = 12;
  EXPECT_NE(a, compare_methods(cfg));
}

TEST(CompareTest, ZeroBudgetMatchesZeroAlgorithm) {
  CompareConfig cfg;
  cfg.m = 64;
  cfg.budgets = {0};
  cfg.families = {parse_family("geometric"), parse_family("uniform_ball")};
  cfg.trials = 6;
  cfg.seed = 3;
  const auto csv = parse_csv(compare_methods(cfg));
  ASSERT_EQ(csv.size(), 1u + 7 * 2);
  for (std::size_t i = 1; i < csv.size(); ++i) {
    const std::size_t zero_row = 1 + (i - 1) % 2;
    EXPECT_EQ(csv[i][10], csv[zero_row][10]) << csv[i][0];
    EXPECT_EQ(csv[i][14], "0");
  }
}

TEST(CompareTest, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3, 1e-300, 12345.678, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(MethodNamesTest, RoundTrip) {
  for (MethodKind k : {MethodKind::kZero, MethodKind::kReadAll, MethodKind::kAdaptive,
                       MethodKind::kLinSketch, MethodKind::kLinSketchDenoise,
                       MethodKind::kCountSketch, MethodKind::kCountSketchDenoise,
                       MethodKind::kSpot, MethodKind::kDiscover}) {
    EXPECT_EQ(parse_method(to_string(k)), k);
  }
  EXPECT_THROW(parse_method("oracle"), ParameterError);
}

}  // namespace
}  // namespace adarec
