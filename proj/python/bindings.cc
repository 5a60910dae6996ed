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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "adarec/adaptive.h"
#include "adarec/core.h"
#include "adarec/families.h"
#include "adarec/harness.h"
#include "adarec/nonadaptive.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace py = pybind11;
using namespace py::literals;

namespace {

py::dict cost_dict(const adarec::CostBreakdown& c) {
  return py::dict("precond"_a = c.precond, "spot"_a = c.spot, "reads"_a = c.reads,
                  "sketch"_a = c.sketch, "total"_a = c.total());
}

adarec::MethodSpec method_spec(const std::string& method, const std::string& variant,
                               int L, int R, std::uint64_t n, int k_star,
                               std::uint64_t buckets) {
  adarec::MethodSpec spec;
  spec.kind = adarec::parse_method(method);
  spec.variant = adarec::parse_variant(variant);
  spec.L = L;
  spec.R = R;
  spec.n = n;
  spec.k_star = k_star;
  spec.buckets = buckets;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_adarec, m) {
  m.doc() = "Adaptive and non-adaptive recovery from randomized linear measurements";

  py::register_exception<adarec::CapViolation>(m, "CapViolation", PyExc_RuntimeError);

  m.def("lp_norm", [](const adarec::Vector& v, double p) { return adarec::lp_norm(v, p); },
        "v"_a, "p"_a);

  m.def(
      "gen_vector",
      [](const std::string& family, std::size_t dim, double p, std::uint64_t seed) {
        adarec::RngStream rng(seed, "python-vector");
        return adarec::gen_vector(adarec::parse_family(family), dim, p, rng);
      },
      "family"_a, "m"_a, "p"_a, "seed"_a = 0);

  m.def(
      "approximate",
      [](const adarec::Vector& x, int L, double p, double q, const std::string& variant,
         std::uint64_t seed, int R) {
        const auto plan = adarec::AdaptivePlan::make(x.size(), p, q, L,
                                                     adarec::parse_variant(variant), R);
        adarec::MeasurementOracle oracle(x);
        adarec::RngStream rng(seed, "python-approximate");
        const auto r = adarec::approximate(oracle, plan, rng);
        return py::dict("output"_a = r.output, "support"_a = r.support,
                        "cost"_a = cost_dict(r.cost), "cap"_a = plan.cost_cap());
      },
      "x"_a, "L"_a, "p"_a = 1.0, "q"_a = 2.0, "variant"_a = "precond", "seed"_a = 0,
      "R"_a = 0);

  m.def(
      "plan",
      [](std::size_t dim, double p, double q, int L, const std::string& variant, int R) {
        const auto plan =
            adarec::AdaptivePlan::make(dim, p, q, L, adarec::parse_variant(variant), R);
        std::vector<std::uint64_t> D;
        for (const auto& level : plan.levels) D.push_back(level.discover.buckets);
        return py::dict("L"_a = plan.L, "R"_a = plan.R, "D"_a = D,
                        "discover_cap"_a = plan.discover_cap(),
                        "read_cap"_a = plan.read_cap(), "cost_cap"_a = plan.cost_cap(),
                        "error_bound"_a = plan.error_bound());
      },
      "m"_a, "p"_a, "q"_a, "L"_a, "variant"_a = "precond", "R"_a = 0);

  m.def("choose_L_for_eps", &adarec::choose_L_for_eps, "eps"_a, "p"_a, "q"_a);
  m.def(
      "choose_L_for_budget",
      [](std::uint64_t n, std::size_t dim, double p, double q, const std::string& variant) {
        return adarec::choose_L_for_budget(n, dim, p, q, adarec::parse_variant(variant));
      },
      "n"_a, "m"_a, "p"_a, "q"_a, "variant"_a = "precond");

  m.def(
      "countsketch",
      [](const adarec::Vector& x, int R, std::uint64_t G, std::uint64_t seed) {
        adarec::MeasurementOracle oracle(x);
        const adarec::RngStream rng(seed, "python-countsketch");
        auto z = adarec::countsketch(oracle, R, G, rng);
        return py::make_tuple(z, oracle.cost());
      },
      "x"_a, "R"_a, "G"_a, "seed"_a = 0);
  m.def(
      "countsketch_params",
      [](int L, std::size_t dim) {
        const auto params = adarec::countsketch_params(L, dim);
        return py::make_tuple(params.R, params.G);
      },
      "L"_a, "m"_a);
  m.def(
      "linsketch",
      [](const adarec::Vector& x, std::size_t n, std::uint64_t seed) {
        adarec::MeasurementOracle oracle(x);
        const adarec::RngStream rng(seed, "python-linsketch");
        auto z = adarec::linsketch(oracle, n, rng);
        return py::make_tuple(z, oracle.cost());
      },
      "x"_a, "n"_a, "seed"_a = 0);
  m.def("denoise", &adarec::denoise, "z"_a, "eps"_a, "p"_a);

  m.def(
      "estimate_error",
      [](const std::string& method, const std::string& family, std::size_t dim, double p,
         double q, int trials, std::uint64_t seed, const std::string& variant, int L,
         int R, std::uint64_t n, int k_star, std::uint64_t buckets) {
        adarec::ExperimentConfig cfg;
        cfg.method = method_spec(method, variant, L, R, n, k_star, buckets);
        cfg.family = adarec::parse_family(family);
        cfg.m = dim;
        cfg.p = p;
        cfg.q = q;
        cfg.trials = trials;
        cfg.seed = seed;
        const auto e = adarec::estimate_error(cfg);
        return py::dict("mean_err"_a = e.mean_err, "qmoment_err"_a = e.qmoment_err,
                        "ci"_a = e.ci, "mean_cost"_a = e.mean_cost,
                        "max_cost"_a = e.max_cost, "cap"_a = e.cap,
                        "trials"_a = e.trials);
      },
      "method"_a, "family"_a, "m"_a, "p"_a = 1.0, "q"_a = 2.0, "trials"_a = 200,
      "seed"_a = 0, "variant"_a = "precond", "L"_a = 0, "R"_a = 0, "n"_a = 0,
      "k_star"_a = -1, "buckets"_a = 0);

  m.def(
      "compare",
      [](std::size_t dim, double p, double q, const std::vector<std::uint64_t>& budgets,
         const std::vector<std::string>& families, int trials, std::uint64_t seed) {
        adarec::CompareConfig cfg;
        cfg.m = dim;
        cfg.p = p;
        cfg.q = q;
        cfg.budgets = budgets;
        for (const auto& f : families) cfg.families.push_back(adarec::parse_family(f));
        cfg.trials = trials;
        cfg.seed = seed;
        return adarec::compare_methods(cfg);
      },
      "m"_a, "p"_a, "q"_a, "budgets"_a, "families"_a, "trials"_a = 200, "seed"_a = 0);

  m.def(
      "param_table",
      [](double p, double q, std::size_t dim, const std::vector<double>& eps,
         const std::vector<std::uint64_t>& budgets, const std::string& variant) {
        const auto v = adarec::parse_variant(variant);
        auto rows = adarec::param_table_eps(p, q, dim, eps, v);
        const auto more = adarec::param_table_budget(p, q, dim, budgets, v);
        rows.insert(rows.end(), more.begin(), more.end());
        return adarec::param_table_csv(rows, p, q, dim, v);
      },
      "p"_a, "q"_a, "m"_a, "eps"_a = std::vector<double>{},
      "budgets"_a = std::vector<std::uint64_t>{}, "variant"_a = "precond");
}
