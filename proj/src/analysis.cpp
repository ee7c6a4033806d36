#include "sumcheck/analysis.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <set>

#include "sumcheck/adversary.hpp"
#include "sumcheck/document.hpp"
#include "sumcheck/random_poly.hpp"

namespace sumcheck {

std::uint64_t default_budget() {
  const char* env = std::getenv("SUMCHECK_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  std::uint64_t value = 0;
  const auto* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultEnumerationBudget;
  return value;
}

FieldElement schedule_sum(const SumcheckInstance& inst, const std::vector<VarId>& vars,
                          std::uint64_t budget) {
  validate(inst);
  const std::set<VarId> domain(vars.begin(), vars.end());
  for (auto v : sumcheck::vars(inst.p)) {
    if (!domain.contains(v)) throw PreconditionError("variable set does not cover vars(p)");
  }
  const auto count = saturating_pow(inst.H.size(), domain.size());
  if (count > budget) {
    throw BudgetExceeded("summing over " + std::to_string(inst.H.size()) + "^" + std::to_string(domain.size()) +
                         " substitutions exceeds the budget of " + std::to_string(budget));
  }
  return sum_evals(MPolyStructure(inst.p.modulus()), inst.p, domain, inst.H);
}

bool membership(const SumcheckInstance& inst, std::uint64_t budget) {
  const auto vs = vars(inst.p);
  return schedule_sum(inst, {vs.begin(), vs.end()}, budget) == inst.v;
}

void RunStatistics::record(const Transcript& t, const std::optional<MultiPoly>& honest_first) {
  ++runs;
  if (t.accept) {
    ++accepting;
    if (!t.rounds.empty() && honest_first) {
      if (t.rounds.front().message == *honest_first) {
        ++accept_first_honest;
      } else {
        ++accept_first_deviating;
      }
    }
  }
  if (auto f = t.first_failure()) ++first_failures[*f];
}

RunStatistics& RunStatistics::operator+=(const RunStatistics& other) {
  runs += other.runs;
  accepting += other.accepting;
  accept_first_honest += other.accept_first_honest;
  accept_first_deviating += other.accept_first_deviating;
  for (const auto& [key, n] : other.first_failures) first_failures[key] += n;
  return *this;
}

Json to_json(const RunStatistics& stats) {
  Json failures = Json::array();
  for (const auto& [key, n] : stats.first_failures) {
    failures.push_back(Json{{"check", std::string(check_name(key.second))}, {"count", n}, {"round", key.first + 1}});
  }
  return Json{{"accepting", stats.accepting},
              {"accepting_first_message_deviating", stats.accept_first_deviating},
              {"accepting_first_message_honest", stats.accept_first_honest},
              {"first_failures", std::move(failures)},
              {"runs", stats.runs}};
}

namespace {

std::optional<MultiPoly> honest_first_message(const SumcheckInstance& inst, const std::vector<VarId>& vars) {
  if (vars.empty()) return std::nullopt;
  const std::vector<VarId> rest(vars.begin() + 1, vars.end());
  return honest_message(MPolyStructure(inst.p.modulus()), inst, vars.front(), rest);
}

}  // namespace

ExactProbability exact_acceptance(const ProverStrategy& prover, const ProverState& state,
                                  const SumcheckInstance& inst, const std::vector<VarId>& schedule_vars,
                                  FieldElement r0, std::uint64_t budget, RunStatistics* stats) {
  const Modulus m = validate(inst);
  // Surface precondition errors before enumerating.
  check_run_preconditions(MPolyStructure(m), inst,
                          zip_schedule(schedule_vars, std::vector<FieldElement>(schedule_vars.size(),
                                                                                FieldElement::zero(m))));
  const auto count = saturating_pow(m.value(), schedule_vars.size());
  if (count > budget) {
    throw BudgetExceeded("exact enumeration needs " + std::to_string(m.value()) + "^" +
                         std::to_string(schedule_vars.size()) + " runs, over the budget of " +
                         std::to_string(budget) + "; use monte_carlo_acceptance (--mode mc) instead");
  }
  const auto honest_first = stats ? honest_first_message(inst, schedule_vars) : std::nullopt;
  ExactProbability out;
  for_each_tuple(schedule_vars.size(), m, budget, [&](const std::vector<FieldElement>& rs) {
    const auto t = sumcheck_run(prover, state, inst, r0, zip_schedule(schedule_vars, rs), RunMode::kShortCircuit);
    ++out.total;
    if (t.accept) ++out.accepting;
    if (stats) stats->record(t, honest_first);
  });
  return out;
}

ExactProbability exact_acceptance(const ProverStrategy& prover, const SumcheckInstance& inst,
                                  const std::vector<VarId>& schedule_vars, FieldElement r0,
                                  std::uint64_t budget, RunStatistics* stats) {
  return exact_acceptance(prover, prover.initial_state(), inst, schedule_vars, r0, budget, stats);
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("Wilson interval needs at least one trial");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  double lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
  double upper = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lower, upper};
}

MonteCarloEstimate monte_carlo_acceptance(const ProverStrategy& prover, const SumcheckInstance& inst,
                                          const std::vector<VarId>& schedule_vars, FieldElement r0,
                                          std::uint64_t trials, std::uint64_t seed, RunStatistics* stats) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const Modulus m = validate(inst);
  const auto honest_first = stats ? honest_first_message(inst, schedule_vars) : std::nullopt;
  MonteCarloEstimate out;
  std::vector<FieldElement> rs;
  for (std::uint64_t i = 0; i < trials; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    rs.clear();
    for (std::size_t k = 0; k < schedule_vars.size(); ++k) {
      auto [e, next] = sample_uniform(m, rng);
      rs.push_back(e);
      rng = next;
    }
    const auto t = sumcheck_run(prover, prover.initial_state(), inst, r0, zip_schedule(schedule_vars, rs),
                                RunMode::kShortCircuit);
    ++out.trials;
    if (t.accept) ++out.accepting;
    if (stats) stats->record(t, honest_first);
  }
  out.estimate = static_cast<double>(out.accepting) / static_cast<double>(out.trials);
  std::tie(out.lower, out.upper) = wilson_interval(out.accepting, out.trials);
  return out;
}

Rational soundness_bound(const SumcheckInstance& inst, const std::vector<VarId>& schedule_vars) {
  return Rational(total_degree(inst.p) * schedule_vars.size(), inst.p.modulus().value());
}

SumcheckInstance generate_instance(InstanceKind kind, const GeneratorParams& params) {
  const Modulus m(params.modulus);
  if (params.h_size == 0 || params.h_size > m.value()) {
    throw std::invalid_argument("|H| must lie in [1, p]");
  }
  if (params.arity > 16) throw std::invalid_argument("arity must be at most 16");
  if (saturating_pow(params.h_size, params.arity) > default_budget()) {
    throw std::invalid_argument("|H|^arity exceeds the enumeration budget");
  }
  SplitMix64 rng(derive_seed(params.seed, 0));
  std::vector<VarId> pool;
  for (VarId v = 1; v <= params.arity; ++v) pool.push_back(v);
  PolyShape shape;
  shape.max_terms = 6;
  shape.max_monomial_degree = params.max_degree;
  shape.zero_percent = 4;
  shape.constant_percent = 4;
  auto p = random_poly(rng, m, pool, shape);
  auto H = random_subset_of_size(rng, m, params.h_size);
  SumcheckInstance inst{std::move(H), std::move(p), FieldElement::zero(m)};
  inst.v = schedule_sum(inst, default_schedule(inst));
  if (kind == InstanceKind::kFalse) inst.v += random_nonzero(rng, m);
  return inst;
}

bool BoundReport::passed() const {
  for (const auto& row : rows) {
    if (!row.error && !row.passed) return false;
  }
  return true;
}

std::vector<std::shared_ptr<const ProverStrategy>> default_strategies(std::uint64_t random_seed) {
  return {std::make_shared<HonestProver>(), std::make_shared<SumFixProver>(),
          std::make_shared<RootPlantingProver>(), std::make_shared<RandomValidProver>(random_seed)};
}

BoundReport bound_report(const SumcheckInstance& inst, const std::vector<VarId>& schedule_vars,
                         const std::vector<std::shared_ptr<const ProverStrategy>>& strategies,
                         const AnalysisMode& mode, std::uint64_t budget) {
  const Modulus m = validate(inst);
  BoundReport report;
  report.digest = instance_digest(inst, schedule_vars);
  report.schedule = schedule_vars;
  report.member = membership(inst, budget);
  report.claim_true = schedule_sum(inst, schedule_vars, budget) == inst.v;
  report.bound = soundness_bound(inst, schedule_vars);
  const auto r0 = FieldElement::zero(m);

  for (const auto& strategy : strategies) {
    StrategyResult row;
    row.strategy = strategy->name();
    const bool honest = dynamic_cast<const HonestProver*>(strategy.get()) != nullptr;
    try {
      if (std::holds_alternative<ExactMode>(mode)) {
        const auto prob = exact_acceptance(*strategy, inst, schedule_vars, r0, budget, &row.stats);
        row.probability = prob;
        if (report.claim_true) {
          row.passed = !honest || prob.value() == Rational(1, 1);
          row.verdict = honest ? (row.passed ? "completeness OK" : "completeness violated") : "n/a (true claim)";
        } else {
          row.passed = prob.value() <= report.bound;
          row.verdict = row.passed ? "within bound" : "bound violated";
        }
      } else {
        const auto& mc = std::get<MonteCarloMode>(mode);
        const auto est = monte_carlo_acceptance(*strategy, inst, schedule_vars, r0, mc.trials, mc.seed, &row.stats);
        row.probability = est;
        if (report.claim_true) {
          row.passed = !honest || est.accepting == est.trials;
          row.verdict = honest ? (row.passed ? "completeness OK" : "completeness violated") : "n/a (true claim)";
        } else {
          // Statistical: fail only if the whole 99% interval lies above the bound.
          row.passed = est.lower <= report.bound.to_double();
          row.verdict = row.passed ? "within bound" : "bound violated";
        }
      }
    } catch (const PreconditionError& e) {
      row.error = e.what();
      row.verdict = "skipped";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const ExactProbability& p) {
  return Json{{"accepting", p.accepting}, {"mode", "exact"}, {"total", p.total}, {"value", p.value().str()}};
}

Json to_json(const MonteCarloEstimate& e) {
  return Json{{"accepting", e.accepting}, {"estimate", e.estimate}, {"interval", Json::array({e.lower, e.upper})},
              {"mode", "mc"},            {"trials", e.trials}};
}

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j = Json::object();
    if (row.error) j["error"] = *row.error;
    j["pass"] = row.passed;
    j["probability"] = row.error ? Json(nullptr) : std::visit([](const auto& p) { return to_json(p); }, row.probability);
    j["statistics"] = to_json(row.stats);
    j["strategy"] = row.strategy;
    j["verdict"] = row.verdict;
    rows.push_back(std::move(j));
  }
  Json out = Json::object();
  out["bound"] = r.bound.str();
  out["claim_true"] = r.claim_true;
  out["digest"] = r.digest;
  out["member"] = r.member;
  out["pass"] = r.passed();
  out["schedule"] = r.schedule;
  out["strategies"] = std::move(rows);
  return out;
}

}  // namespace sumcheck
