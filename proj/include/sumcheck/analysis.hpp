#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sumcheck/protocol.hpp"
#include "sumcheck/rational.hpp"

namespace sumcheck {

/// Enumeration budget: SUMCHECK_BUDGET if set to a positive integer, else
/// kDefaultEnumerationBudget.
std::uint64_t default_budget();

/// Exact sum of p over H^vars(p), compared to v. Throws BudgetExceeded when
/// |H|^arity exceeds the budget.
bool membership(const SumcheckInstance& inst, std::uint64_t budget = default_budget());

/// Sum of p over H^vars; `vars` must cover vars(p). With extra variables
/// this is |H|^extra times the membership sum.
FieldElement schedule_sum(const SumcheckInstance& inst, const std::vector<VarId>& vars,
                          std::uint64_t budget = default_budget());

struct ExactProbability {
  std::uint64_t accepting = 0;
  std::uint64_t total = 0;

  Rational value() const { return Rational(accepting, total); }
  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;
};

/// Per-run bookkeeping shared by the exact and Monte-Carlo routes.
struct RunStatistics {
  std::uint64_t runs = 0;
  std::uint64_t accepting = 0;
  /// Accepting runs split by whether the first message equals the honest one.
  std::uint64_t accept_first_honest = 0;
  std::uint64_t accept_first_deviating = 0;
  /// (round index, check) of the first failure -> count. Round index equal
  /// to the schedule length denotes the base case.
  std::map<std::pair<std::size_t, CheckKind>, std::uint64_t> first_failures;

  void record(const Transcript& t, const std::optional<MultiPoly>& honest_first);
  RunStatistics& operator+=(const RunStatistics& other);
};

Json to_json(const RunStatistics& stats);

/// Runs the protocol once per randomness tuple in F^len(schedule_vars).
/// Throws BudgetExceeded (naming monte_carlo_acceptance) when p^len exceeds
/// the budget.
ExactProbability exact_acceptance(const ProverStrategy& prover, const SumcheckInstance& inst,
                                  const std::vector<VarId>& schedule_vars, FieldElement r0,
                                  std::uint64_t budget = default_budget(), RunStatistics* stats = nullptr);

/// As above with an explicit initial prover state.
ExactProbability exact_acceptance(const ProverStrategy& prover, const ProverState& state,
                                  const SumcheckInstance& inst, const std::vector<VarId>& schedule_vars,
                                  FieldElement r0, std::uint64_t budget = default_budget(),
                                  RunStatistics* stats = nullptr);

/// Two-sided Wilson score interval at 99%.
inline constexpr double kWilsonZ99 = 2.5758293035489;

struct MonteCarloEstimate {
  std::uint64_t accepting = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const MonteCarloEstimate&, const MonteCarloEstimate&) = default;
};

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = kWilsonZ99);

/// Samples `trials` uniform randomness tuples; trial i draws from
/// derive_seed(seed, i), so results do not depend on evaluation order.
MonteCarloEstimate monte_carlo_acceptance(const ProverStrategy& prover, const SumcheckInstance& inst,
                                          const std::vector<VarId>& schedule_vars, FieldElement r0,
                                          std::uint64_t trials, std::uint64_t seed,
                                          RunStatistics* stats = nullptr);

/// total_degree(p) * len(schedule_vars) / p. May exceed 1.
Rational soundness_bound(const SumcheckInstance& inst, const std::vector<VarId>& schedule_vars);

enum class InstanceKind { kValid, kFalse };

struct GeneratorParams {
  std::uint32_t modulus = 5;
  std::uint32_t arity = 2;
  std::uint32_t max_degree = 2;
  std::uint32_t h_size = 2;
  std::uint64_t seed = 0;
};

/// Random instance over variables 1..arity. Valid instances carry the true
/// sum; false ones add an offset drawn uniformly from F \ {0}. Throws
/// std::invalid_argument on infeasible parameters.
SumcheckInstance generate_instance(InstanceKind kind, const GeneratorParams& params);

struct ExactMode {};
struct MonteCarloMode {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};
using AnalysisMode = std::variant<ExactMode, MonteCarloMode>;

struct StrategyResult {
  std::string strategy;
  std::variant<ExactProbability, MonteCarloEstimate> probability;
  RunStatistics stats;
  /// "completeness OK", "within bound", "n/a (true claim)", or the failure.
  std::string verdict;
  bool passed = false;
  /// Set when the strategy could not run on this instance.
  std::optional<std::string> error;
};

struct BoundReport {
  std::string digest;
  std::vector<VarId> schedule;
  /// The instance is in the language (sum over H^vars(p) equals v).
  bool member = false;
  /// v equals the sum over H^schedule; the claim the protocol tests.
  bool claim_true = false;
  Rational bound;
  std::vector<StrategyResult> rows;

  bool passed() const;
};

/// Honest prover rows must accept with probability 1 on true claims; every
/// row must stay at or below the bound on false claims. Strategies that
/// cannot run on the instance are reported with an error and not counted.
BoundReport bound_report(const SumcheckInstance& inst, const std::vector<VarId>& schedule_vars,
                         const std::vector<std::shared_ptr<const ProverStrategy>>& strategies,
                         const AnalysisMode& mode, std::uint64_t budget = default_budget());

/// honest, sum-fix, root-plant, random:<seed>.
std::vector<std::shared_ptr<const ProverStrategy>> default_strategies(std::uint64_t random_seed = 1);

Json to_json(const ExactProbability& p);
Json to_json(const MonteCarloEstimate& e);
Json to_json(const BoundReport& r);

}  // namespace sumcheck
