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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "adarec/nonadaptive.h"
#include "adarec/spotting.h"

namespace adarec {
namespace {

constexpr struct {
  MethodKind kind;
  std::string_view name;
} kMethodNames[] = {
    {MethodKind::kZero, "zero"},
    {MethodKind::kReadAll, "read_all"},
    {MethodKind::kAdaptive, "adaptive"},
    {MethodKind::kLinSketch, "linsketch"},
    {MethodKind::kLinSketchDenoise, "linsketch_denoise"},
    {MethodKind::kCountSketch, "countsketch"},
    {MethodKind::kCountSketchDenoise, "countsketch_denoise"},
    {MethodKind::kSpot, "spot"},
    {MethodKind::kDiscover, "discover"},
};

bool is_countsketch(MethodKind k) {
  return k == MethodKind::kCountSketch || k == MethodKind::kCountSketchDenoise;
}

bool is_linsketch(MethodKind k) {
  return k == MethodKind::kLinSketch || k == MethodKind::kLinSketchDenoise;
}

std::string format_u64(std::uint64_t v) { return std::to_string(v); }

struct TrialTotals {
  std::vector<double> errors;
  double qpow_sum = 0.0;
  double cost_sum = 0.0;
  std::uint64_t max_cost = 0;
  CostBreakdown max_stage;
  std::optional<std::string> violation;
};

TrialTotals run_trials(const ExperimentConfig& cfg, const PreparedMethod& pm,
                       bool stop_on_violation) {
  require(cfg.trials >= 1, "experiment: need trials >= 1");
  require(cfg.q > cfg.p || cfg.method.kind == MethodKind::kSpot ||
              cfg.method.kind == MethodKind::kDiscover,
          "experiment: need q > p");
  TrialTotals t;
  t.errors.reserve(cfg.trials);
  const RngStream root(cfg.seed, "experiment");
  for (int i = 0; i < cfg.trials; ++i) {
    const RngStream trial = root.child("trial", static_cast<std::uint64_t>(i));
    RngStream vector_rng = trial.child("vector");
    const Vector x = gen_vector(cfg.family, cfg.m, cfg.p, vector_rng);
    MeasurementOracle oracle(x);
    const PreparedMethod::Run run = pm.run(oracle, trial.child("method"));
    const std::uint64_t cost = oracle.cost();
    if (cost != run.cost.total()) {
      throw std::logic_error("stage breakdown does not match oracle cost");
    }
    if (cost > pm.cost_cap() && !t.violation) {
      t.violation = "trial " + std::to_string(i) + ": cost " +
                    std::to_string(cost) + " exceeds cap " +
                    std::to_string(pm.cost_cap());
      if (stop_on_violation) throw CapViolation(*t.violation);
    }
    Vector diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) diff[j] = x[j] - run.output[j];
    t.errors.push_back(lp_norm(diff, cfg.q));
    t.qpow_sum += lp_norm_pow(diff, cfg.q);
    t.cost_sum += static_cast<double>(cost);
    t.max_cost = std::max(t.max_cost, cost);
    t.max_stage.precond = std::max(t.max_stage.precond, run.cost.precond);
    t.max_stage.spot = std::max(t.max_stage.spot, run.cost.spot);
    t.max_stage.reads = std::max(t.max_stage.reads, run.cost.reads);
    t.max_stage.sketch = std::max(t.max_stage.sketch, run.cost.sketch);
  }
  return t;
}

ParamRow make_row(std::string mode, double value, const AdaptivePlan& plan) {
  ParamRow row;
  row.mode = std::move(mode);
  row.value = value;
  row.L = plan.L;
  row.R = plan.R;
  for (const auto& level : plan.levels) row.D.push_back(level.discover.buckets);
  row.discover_cap = plan.discover_cap();
  row.read_cap = plan.read_cap();
  row.cost_cap = plan.cost_cap();
  row.error_bound = plan.L == 0 ? 1.0 : plan.error_bound();
  return row;
}

}  // namespace

std::string_view to_string(MethodKind kind) {
  for (const auto& e : kMethodNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

MethodKind parse_method(std::string_view name) {
  for (const auto& e : kMethodNames) {
    if (e.name == name) return e.kind;
  }
  throw ParameterError("unknown method '" + std::string(name) + "'");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

PreparedMethod::PreparedMethod(const MethodSpec& spec, std::size_t m, double p,
                               double q)
    : spec_(spec), m_(m), p_(p), q_(q) {
  require(m >= 1, "method: need m >= 1");
  require(p >= 1.0 && std::isfinite(p), "method: need 1 <= p < inf");
  switch (spec.kind) {
    case MethodKind::kZero:
      cap_ = 0;
      break;
    case MethodKind::kReadAll:
      cap_ = m;
      break;
    case MethodKind::kAdaptive:
      plan_ = AdaptivePlan::make(m, p, q, spec.L, spec.variant, spec.R);
      cap_ = plan_->cost_cap();
      break;
    case MethodKind::kLinSketch:
    case MethodKind::kLinSketchDenoise:
      cap_ = spec.n;
      break;
    case MethodKind::kCountSketch:
    case MethodKind::kCountSketchDenoise: {
      if (spec.L < 0) {
        cap_ = 0;
        break;
      }
      const CountSketchParams params = countsketch_params(spec.L, m);
      cs_R_ = spec.R > 0 ? spec.R : params.R;
      require(cs_R_ % 2 == 1, "countsketch: R must be odd");
      cs_G_ = params.G;
      cap_ = static_cast<std::uint64_t>(cs_R_) * cs_G_;
      break;
    }
    case MethodKind::kSpot:
      require(spec.k_star >= 0, "spot: need k* >= 0");
      cap_ = 2 * static_cast<std::uint64_t>(spec.k_star + 1);
      break;
    case MethodKind::kDiscover: {
      DiscoverConfig cfg =
          DiscoverConfig::for_buckets(spec.variant, m, spec.buckets);
      if (spec.k_star >= 0) cfg.k_star = spec.k_star;
      discover_ = cfg;
      cap_ = cfg.cost_cap();
      break;
    }
  }
}

int PreparedMethod::reported_L() const {
  if (spec_.kind == MethodKind::kAdaptive) return plan_->L;
  if (is_countsketch(spec_.kind)) return std::max(spec_.L, 0);
  return 0;
}

int PreparedMethod::reported_R() const {
  if (spec_.kind == MethodKind::kAdaptive) return plan_->R;
  if (is_countsketch(spec_.kind)) return cs_R_;
  return 0;
}

PreparedMethod::Run PreparedMethod::run(MeasurementOracle& oracle,
                                        const RngStream& rng) const {
  if (oracle.dimension() != m_) {
    throw DimensionError("method: oracle dimension differs");
  }
  Run out;
  out.output.assign(m_, 0.0);
  const std::uint64_t before = oracle.cost();
  switch (spec_.kind) {
    case MethodKind::kZero:
      break;
    case MethodKind::kReadAll:
      for (Index j = 0; j < m_; ++j) out.output[j] = oracle.read_entry(j);
      out.cost.reads = m_;
      break;
    case MethodKind::kAdaptive: {
      RngStream r = rng;
      ApproximationResult res = approximate(oracle, *plan_, r);
      out.output = std::move(res.output);
      out.cost = res.cost;
      break;
    }
    case MethodKind::kLinSketch:
      if (spec_.n == 0) break;
      out.output = linsketch(oracle, spec_.n, rng);
      break;
    case MethodKind::kLinSketchDenoise:
      if (spec_.n == 0) break;
      out.output = denoised_linsketch(oracle, spec_.n, p_, rng);
      break;
    case MethodKind::kCountSketch:
      if (spec_.L < 0) break;
      out.output = countsketch(oracle, cs_R_, cs_G_, rng);
      break;
    case MethodKind::kCountSketchDenoise:
      if (spec_.L < 0) break;
      out.output = denoise(countsketch(oracle, cs_R_, cs_G_, rng),
                           std::exp2(-spec_.L / p_), p_);
      break;
    case MethodKind::kSpot: {
      IndexSet all(m_);
      std::iota(all.begin(), all.end(), Index{0});
      RngStream r = rng;
      spot(oracle, all, SpotParams{1.0 / 3.0, spec_.k_star}, r);
      out.cost.spot = oracle.cost() - before;
      break;
    }
    case MethodKind::kDiscover: {
      RngStream r = rng;
      const DiscoverResult res = discover(oracle, *discover_, r);
      out.cost.precond = res.precond_cost;
      out.cost.spot = res.spot_cost;
      break;
    }
  }
  if (is_linsketch(spec_.kind) || is_countsketch(spec_.kind)) {
    out.cost.sketch = oracle.cost() - before;
  }
  return out;
}

double ci_half_width(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 2) return 0.0;
  const double mean =
      std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return 1.96 * sd / std::sqrt(static_cast<double>(n));
}

ErrorEstimate estimate_error(const ExperimentConfig& cfg) {
  const PreparedMethod pm(cfg.method, cfg.m, cfg.p, cfg.q);
  const TrialTotals t = run_trials(cfg, pm, true);
  const double T = static_cast<double>(cfg.trials);
  ErrorEstimate e;
  e.trials = cfg.trials;
  e.mean_err = std::accumulate(t.errors.begin(), t.errors.end(), 0.0) / T;
  e.qmoment_err = std::pow(t.qpow_sum / T, 1.0 / cfg.q);
  e.ci = ci_half_width(t.errors);
  e.mean_cost = t.cost_sum / T;
  e.max_cost = t.max_cost;
  e.cap = pm.cost_cap();
  e.max_stage = t.max_stage;
  return e;
}

CostAuditReport cost_audit(const ExperimentConfig& cfg) {
  const PreparedMethod pm(cfg.method, cfg.m, cfg.p, cfg.q);
  const TrialTotals t = run_trials(cfg, pm, false);
  CostAuditReport r;
  r.cap = pm.cost_cap();
  r.max_cost = t.max_cost;
  r.mean_cost = t.cost_sum / cfg.trials;
  r.max_stage = t.max_stage;
  r.ok = !t.violation.has_value();
  std::ostringstream os;
  os << "method " << to_string(cfg.method.kind) << ", m=" << cfg.m
     << ", trials=" << cfg.trials << "\n"
     << "  cap        " << r.cap << "\n"
     << "  max cost   " << r.max_cost << "\n"
     << "  mean cost  " << format_double(r.mean_cost) << "\n"
     << "  hashing    0\n"
     << "  precond    " << r.max_stage.precond << " (max)\n"
     << "  spot       " << r.max_stage.spot << " (max)\n"
     << "  reads      " << r.max_stage.reads << " (max)\n"
     << "  sketch     " << r.max_stage.sketch << " (max)\n"
     << (r.ok ? "  OK" : "  CAP VIOLATION: " + *t.violation) << "\n";
  r.text = os.str();
  return r;
}

std::vector<ParamRow> param_table_eps(double p, double q, std::size_t m,
                                      const std::vector<double>& eps,
                                      Variant variant) {
  std::vector<ParamRow> rows;
  for (double e : eps) {
    const int L = choose_L_for_eps(e, p, q);
    rows.push_back(make_row("eps", e, AdaptivePlan::make(m, p, q, L, variant)));
  }
  return rows;
}

std::vector<ParamRow> param_table_budget(double p, double q, std::size_t m,
                                         const std::vector<std::uint64_t>& n,
                                         Variant variant) {
  std::vector<ParamRow> rows;
  for (std::uint64_t b : n) {
    const int L = choose_L_for_budget(b, m, p, q, variant);
    rows.push_back(make_row("budget", static_cast<double>(b),
                            AdaptivePlan::make(m, p, q, L, variant)));
  }
  return rows;
}

std::string param_table_csv(const std::vector<ParamRow>& rows, double p,
                            double q, std::size_t m, Variant variant) {
  std::ostringstream os;
  os << "mode,value,m,p,q,variant,L,R,D,discover_cap,read_cap,cost_cap,"
        "error_bound\n";
  for (const auto& r : rows) {
    std::string d;
    for (std::size_t i = 0; i < r.D.size(); ++i) {
      if (i) d += ';';
      d += format_u64(r.D[i]);
    }
    const std::string value = r.mode == "budget"
                                  ? format_u64(static_cast<std::uint64_t>(r.value))
                                  : format_double(r.value);
    os << r.mode << ',' << value << ',' << m << ','
       << format_double(p) << ',' << format_double(q) << ','
       << to_string(variant) << ',' << r.L << ',' << r.R << ',' << d << ','
       << r.discover_cap << ',' << r.read_cap << ',' << r.cost_cap << ','
       << format_double(r.error_bound) << '\n';
  }
  return os.str();
}

std::optional<int> countsketch_L_for_budget(std::uint64_t n, std::size_t m) {
  std::optional<int> best;
  for (int L = 0; L <= 58; ++L) {
    const CountSketchParams params = countsketch_params(L, m);
    const double need = static_cast<double>(params.R) * params.G;
    if (need > static_cast<double>(n)) break;
    best = L;
  }
  return best;
}

std::vector<MethodSpec> methods_for_budget(std::uint64_t n, std::size_t m,
                                           double p, double q) {
  std::vector<MethodSpec> out;
  out.push_back({MethodKind::kZero});
  for (Variant v : {Variant::kBasic, Variant::kPreconditioned}) {
    MethodSpec s;
    s.kind = MethodKind::kAdaptive;
    s.variant = v;
    s.L = choose_L_for_budget(n, m, p, q, v);
    out.push_back(s);
  }
  for (MethodKind k : {MethodKind::kLinSketch, MethodKind::kLinSketchDenoise}) {
    MethodSpec s;
    s.kind = k;
    s.n = n;
    out.push_back(s);
  }
  const std::optional<int> cs_L = countsketch_L_for_budget(n, m);
  for (MethodKind k :
       {MethodKind::kCountSketch, MethodKind::kCountSketchDenoise}) {
    MethodSpec s;
    s.kind = k;
    s.L = cs_L.value_or(-1);
    out.push_back(s);
  }
  return out;
}

std::string experiment_row(const ExperimentConfig& cfg, std::uint64_t budget,
                           const PreparedMethod& method,
                           const ErrorEstimate& e) {
  const MethodSpec& spec = method.spec();
  const std::string_view variant =
      spec.kind == MethodKind::kAdaptive ? to_string(spec.variant) : "none";
  std::ostringstream os;
  os << to_string(spec.kind) << ',' << variant << ',' << cfg.m << ','
     << format_double(cfg.p) << ',' << format_double(cfg.q) << ',' << budget
     << ',' << method.reported_L() << ',' << method.reported_R() << ','
     << to_string(cfg.family) << ',' << cfg.trials << ','
     << format_double(e.mean_err) << ',' << format_double(e.qmoment_err) << ','
     << format_double(e.ci) << ',' << format_double(e.mean_cost) << ','
     << e.max_cost << ',' << cfg.seed;
  return os.str();
}

std::string compare_methods(const CompareConfig& cfg) {
  require(!cfg.budgets.empty(), "compare: need at least one budget");
  require(!cfg.families.empty(), "compare: need at least one family");
  const std::size_t num_methods = methods_for_budget(0, cfg.m, cfg.p, cfg.q).size();
  std::ostringstream os;
  os << kCompareHeader << '\n';
  for (std::size_t mi = 0; mi < num_methods; ++mi) {
    for (std::uint64_t n : cfg.budgets) {
      const MethodSpec spec = methods_for_budget(n, cfg.m, cfg.p, cfg.q)[mi];
      const PreparedMethod pm(spec, cfg.m, cfg.p, cfg.q);
      for (const VectorFamily& family : cfg.families) {
        ExperimentConfig ec;
        ec.method = spec;
        ec.family = family;
        ec.m = cfg.m;
        ec.p = cfg.p;
        ec.q = cfg.q;
        ec.trials = cfg.trials;
        ec.seed = cfg.seed;
        os << experiment_row(ec, n, pm, estimate_error(ec)) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace adarec
